#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/finite_group.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

// Finitely presented group <x_1..x_n | relators>. Relators are words; a
// presentation with no relators is a free group.
struct Presentation {
  int gen_count = 0;
  std::vector<Word> relators;
};

inline void validate_presentation(const Presentation& p) {
  if (p.gen_count < 0) throw WordError("negative generator count");
  for (const Word& r : p.relators) validate_word(r, p.gen_count);
}

inline Presentation free_presentation(int rank) {
  if (rank < 0) throw WordError("negative rank");
  return Presentation{rank, {}};
}

// A homomorphism P -> G is the tuple of generator images; index i holds the
// image of x_{i+1}. Tuples compare lexicographically via std::vector.
using Images = std::vector<int>;

// Evaluate w at the given generator images. The word may reference only
// generators with an assigned image.
inline int evaluate_word(const FiniteGroup& g, const Images& images, const Word& w) {
  int acc = 0;
  for (int l : w) {
    if (l == 0) throw WordError("word letter 0 is not a generator");
    const std::size_t idx = static_cast<std::size_t>(std::abs(l)) - 1;
    if (idx >= images.size())
      throw WordError("word letter " + std::to_string(l) + " has no assigned image");
    const int v = images[idx];
    acc = g.mul(acc, l > 0 ? v : g.inverse(v));
  }
  return acc;
}

// All homomorphisms P -> G in lexicographic order of image tuples.
// Backtracking assigns x_1, x_2, ... in order and checks each relator as soon
// as every generator it mentions has an image. The budget is charged one unit
// per search node plus the letter count of every relator evaluation.
inline std::vector<Images> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                          WorkBudget& budget) {
  validate_presentation(p);
  const int n = p.gen_count;
  // relators indexed by the largest generator they mention
  std::vector<std::vector<const Word*>> due(static_cast<std::size_t>(n) + 1);
  for (const Word& r : p.relators) {
    const int m = max_generator(r);
    if (m == 0) continue;  // empty relator, vacuously satisfied
    due[static_cast<std::size_t>(m)].push_back(&r);
  }

  std::vector<Images> out;
  Images cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < g.order; ++v) {
      budget.charge(1);
      cur[static_cast<std::size_t>(depth)] = v;
      bool ok = true;
      for (const Word* r : due[static_cast<std::size_t>(depth) + 1]) {
        budget.charge(r->size());
        // r mentions no generator beyond depth+1, so entries of cur past
        // depth are never read
        if (evaluate_word(g, cur, *r) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
  };
  if (n == 0) {
    budget.charge(1);
    out.push_back({});
  } else {
    rec(rec, 0);
  }
  return out;
}

inline std::vector<Images> enumerate_homs(const Presentation& p, const FiniteGroup& g,
                                          std::uint64_t budget_limit = kDefaultWorkBudget) {
  WorkBudget budget(budget_limit);
  return enumerate_homs(p, g, budget);
}

inline Images conjugate_images(const FiniteGroup& g, int a, const Images& images) {
  Images out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out[i] = g.conjugate(a, images[i]);
  return out;
}

// Orbits of the conjugation action on a complete hom list (as produced by
// enumerate_homs). Each orbit is the sorted list of hom indices; orbits are
// emitted by ascending least index, so orbit.front() is the lexicographically
// least representative. Throws ConsistencyError if the list is not closed
// under conjugation (i.e. not the full hom set).
inline std::vector<std::vector<int>> hom_classes(const std::vector<Images>& homs,
                                                 const FiniteGroup& g) {
  auto find = [&](const Images& t) -> int {
    const auto it = std::lower_bound(homs.begin(), homs.end(), t);
    if (it == homs.end() || *it != t)
      throw ConsistencyError("hom list is not closed under conjugation; pass the complete list");
    return static_cast<int>(it - homs.begin());
  };
  std::vector<bool> seen(homs.size(), false);
  std::vector<std::vector<int>> orbits;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int a = 0; a < g.order; ++a) {
      const int j = find(conjugate_images(g, a, homs[i]));
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// P * F_k: same relators, k fresh generators.
inline Presentation free_product_with_free(const Presentation& p, int k) {
  if (k < 0) throw WordError("negative free rank");
  Presentation out = p;
  out.gen_count += k;
  return out;
}

// Fundamental group of the mapping torus of phi^d on a rank-r free group:
// <x_1..x_r, t | t x_i t^-1 (phi^d(x_i))^-1>. The stable letter t is the
// last generator, index r+1.
inline Presentation mapping_torus_presentation(int rank, const WordMap& phi, int d,
                                               std::size_t length_bound = kDefaultWordLengthBound) {
  if (static_cast<int>(phi.size()) != rank)
    throw WordError("monodromy image count does not match rank");
  for (const Word& w : phi) validate_word(w, rank);
  if (d < 1) throw WordError("cover degree must be at least 1");
  const WordMap phi_d = iterate_word_map(phi, d, length_bound);
  Presentation p;
  p.gen_count = rank + 1;
  const int t = rank + 1;
  for (int i = 1; i <= rank; ++i) {
    Word r{t, i, -t};
    const Word img = invert_word(phi_d[static_cast<std::size_t>(i) - 1]);
    r.insert(r.end(), img.begin(), img.end());
    p.relators.push_back(reduce_word(r));
  }
  return p;
}

// Fundamental group of the d-fold cyclic branched cover in the fibered
// model: kill the stable letter, leaving <x_1..x_r | phi^d(x_i) x_i^-1>.
inline Presentation branched_quotient_presentation(int rank, const WordMap& phi, int d,
                                                   std::size_t length_bound = kDefaultWordLengthBound) {
  if (static_cast<int>(phi.size()) != rank)
    throw WordError("monodromy image count does not match rank");
  for (const Word& w : phi) validate_word(w, rank);
  if (d < 1) throw WordError("cover degree must be at least 1");
  const WordMap phi_d = iterate_word_map(phi, d, length_bound);
  Presentation p;
  p.gen_count = rank;
  for (int i = 1; i <= rank; ++i) {
    Word r = phi_d[static_cast<std::size_t>(i) - 1];
    r.push_back(-i);
    p.relators.push_back(reduce_word(r));
  }
  return p;
}

// File format, '#' comment lines allowed:
//   gens <n>
//   rel <signed letters...>     (one line per relator; "rel" alone is empty)
inline Presentation read_presentation(std::istream& in) {
  Presentation p;
  bool have_gens = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "gens") {
      if (have_gens) throw ParseError("duplicate gens line");
      if (!(ls >> p.gen_count) || p.gen_count < 0) throw ParseError("bad generator count");
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after gens count");
      have_gens = true;
    } else if (kind == "rel") {
      if (!have_gens) throw ParseError("rel line before gens line");
      p.relators.push_back(parse_word_tokens(ls, "relator"));
    } else {
      throw ParseError("unknown presentation line '" + line + "'");
    }
  }
  if (!have_gens) throw ParseError("presentation input has no gens line");
  validate_presentation(p);
  return p;
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in);
}

inline void write_presentation(std::ostream& out, const Presentation& p) {
  out << "gens " << p.gen_count << "\n";
  for (const Word& r : p.relators) {
    out << "rel";
    for (int l : r) out << " " << l;
    out << "\n";
  }
}

}  // namespace shiftcover
