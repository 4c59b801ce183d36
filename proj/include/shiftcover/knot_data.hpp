#pragma once

#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/cobordism.hpp"
#include "shiftcover/errors.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/polynomial.hpp"
#include "shiftcover/presentation.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

// A fibered link presented by the monodromy of its fiber: a free-group
// automorphism on rank = 2*genus generators (for a knot). mu is the number
// of link components, 1 for a knot.
struct FiberedKnotData {
  std::string name;
  int rank = 0;
  WordMap monodromy;
  int mu = 1;
};

// Column i is the exponent-sum vector of the image of x_{i+1}: the action of
// the map on the abelianized free group.
inline IntMat abelianization_matrix(const WordMap& map) {
  const std::size_t rank = map.size();
  IntMat m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (int l : map[i]) {
      const std::size_t row = static_cast<std::size_t>(std::abs(l)) - 1;
      if (row >= rank) throw WordError("monodromy word mentions a generator beyond the rank");
      m(row, i) += l > 0 ? 1 : -1;
    }
  return m;
}

// Sanity checks a monodromy must pass: images well-formed, the abelianized
// action invertible over Z, and no generator collapsing to the empty word
// under a few iterations.
inline void validate_monodromy(const FiberedKnotData& k) {
  if (k.rank < 1) throw WordError("fibered data needs rank at least 1");
  if (static_cast<int>(k.monodromy.size()) != k.rank)
    throw WordError("fibered data needs one monodromy word per generator");
  for (const Word& w : k.monodromy) validate_word(w, k.rank);
  if (k.mu < 1) throw WordError("component count must be at least 1");
  const Int det = determinant(abelianization_matrix(k.monodromy));
  if (det != 1 && det != -1)
    throw ConsistencyError("monodromy is not invertible on homology (determinant " + det.str() +
                           ")");
  WordMap power = identity_word_map(k.rank);
  for (int d = 1; d <= 3; ++d) {
    power = compose_word_maps(k.monodromy, power);
    for (const Word& w : power)
      if (w.empty()) throw ConsistencyError("monodromy collapses a generator to the identity");
  }
}

// The two standard genus-1 fibered knots. Their monodromies are products of
// Dehn twist lifts; construction cross-checks the homological action against
// the known Alexander polynomial before returning.
inline FiberedKnotData builtin_fibered(const std::string& name) {
  FiberedKnotData k;
  k.name = name;
  k.rank = 2;
  k.mu = 1;
  IntPoly expected_cp;
  if (name == "trefoil") {
    k.monodromy = {{2}, {2, -1}};
    expected_cp = IntPoly({Int(1), Int(-1), Int(1)});  // t^2 - t + 1
  } else if (name == "figure8") {
    k.monodromy = {{1, 2, 1}, {2, 1}};
    expected_cp = IntPoly({Int(1), Int(-3), Int(1)});  // t^2 - 3t + 1
  } else {
    throw ParseError("unknown builtin knot '" + name + "', have trefoil and figure8");
  }
  validate_monodromy(k);
  const IntMat ab = abelianization_matrix(k.monodromy);
  if (char_poly(ab) != expected_cp)
    throw ConsistencyError("builtin monodromy has the wrong homological action");
  if (name == "trefoil" && ab.pow(6) != IntMat::identity(2))
    throw ConsistencyError("trefoil homological action must have order 6");
  return k;
}

// The twisted product over the fiber: the cyclic-cover building block whose
// d-th composite power computes the d-fold cover of the knot complement.
inline CobordismData fibered_to_cobordism(const FiberedKnotData& k, Theory theory) {
  validate_monodromy(k);
  return twisted_product(k.rank, k.monodromy, theory);
}

// A braid word: letters +i / -i for the standard generator sigma_i and its
// inverse, 1 <= i < strands.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

inline void validate_braid(const BraidWord& b) {
  if (b.strands < 2) throw WordError("a braid needs at least 2 strands");
  for (int l : b.letters) {
    if (l == 0) throw WordError("braid letter 0 is not a generator");
    if (std::abs(l) >= b.strands)
      throw WordError("braid letter " + std::to_string(l) + " needs at least " +
                      std::to_string(std::abs(l) + 1) + " strands");
  }
}

// Action of one braid generator on the free group on strand generators:
// sigma_i maps x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i.
inline WordMap artin_generator_map(int strands, int letter) {
  WordMap m = identity_word_map(strands);
  const int i = std::abs(letter);
  if (letter > 0) {
    m[static_cast<std::size_t>(i) - 1] = {i, i + 1, -i};
    m[static_cast<std::size_t>(i)] = {i};
  } else {
    m[static_cast<std::size_t>(i) - 1] = {i + 1};
    m[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
  }
  return m;
}

// Composite action of a braid word. Letters act left to right: the first
// letter is applied first, so the composite is (last letter) o ... o (first).
inline WordMap braid_to_artin(const BraidWord& b,
                              std::size_t length_bound = kDefaultWordLengthBound) {
  validate_braid(b);
  WordMap cur = identity_word_map(b.strands);
  for (int l : b.letters)
    cur = compose_word_maps(artin_generator_map(b.strands, l), cur, length_bound);
  return cur;
}

// Fundamental group of the complement of the braid closure:
// <x_1..x_n | beta(x_i) x_i^-1 for i < n>. The last relator is a consequence
// of the others and is dropped.
inline Presentation braid_closure_presentation(const BraidWord& b,
                                               std::size_t length_bound = kDefaultWordLengthBound) {
  const WordMap action = braid_to_artin(b, length_bound);
  Presentation p;
  p.gen_count = b.strands;
  for (int i = 1; i < b.strands; ++i) {
    Word r = action[static_cast<std::size_t>(i) - 1];
    r.push_back(-i);
    p.relators.push_back(reduce_word(r));
  }
  return p;
}

// File format, '#' comment lines allowed:
//   fibered rank=<2g> [mu=<m>] [name=<label>]
//   <monodromy word, signed letters>      (one line per generator)
inline FiberedKnotData read_knot(std::istream& in) {
  FiberedKnotData k;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string kind;
      ls >> kind;
      if (kind != "fibered") throw ParseError("knot input must start with a fibered line");
      std::string token;
      bool have_rank = false;
      while (ls >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("bad knot header token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string val = token.substr(eq + 1);
        try {
          if (key == "rank") {
            k.rank = std::stoi(val);
            have_rank = true;
          } else if (key == "mu") {
            k.mu = std::stoi(val);
          } else if (key == "name") {
            k.name = val;
          } else {
            throw ParseError("unknown knot header key '" + key + "'");
          }
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception&) {
          throw ParseError("bad value in knot header token '" + token + "'");
        }
      }
      if (!have_rank) throw ParseError("knot header needs rank=<n>");
      have_header = true;
    } else {
      k.monodromy.push_back(parse_word_tokens(ls, "monodromy word"));
    }
  }
  if (!have_header) throw ParseError("empty knot input");
  validate_monodromy(k);
  return k;
}

inline FiberedKnotData parse_knot(const std::string& text) {
  std::istringstream in(text);
  return read_knot(in);
}

}  // namespace shiftcover
