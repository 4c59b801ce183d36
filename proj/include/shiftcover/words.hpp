#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "shiftcover/errors.hpp"

namespace shiftcover {

// A word in a free group: letters are nonzero signed integers, letter k > 0
// meaning generator x_k and -k meaning its inverse. Generator numbering is
// 1-based to keep the sign usable; the empty vector is the empty word.
using Word = std::vector<int>;

// One word per generator: images[i] is the image of x_{i+1}. Used both for
// free-group endomorphisms (monodromies, braid actions) and for the boundary
// maps of a cobordism.
using WordMap = std::vector<Word>;

inline int max_generator(const Word& w) {
  int m = 0;
  for (int l : w) m = std::max(m, std::abs(l));
  return m;
}

inline void validate_word(const Word& w, int gen_count) {
  for (int l : w) {
    if (l == 0) throw WordError("word letter 0 is not a generator");
    if (std::abs(l) > gen_count)
      throw WordError("word letter " + std::to_string(l) + " exceeds generator count " +
                      std::to_string(gen_count));
  }
}

// Free reduction: cancel adjacent x x^-1 pairs until none remain.
inline Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) throw WordError("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Substitute images[|l|-1] for every letter l of w (inverted for l < 0) and
// freely reduce. length_bound caps the unreduced substitution size; word
// growth under iterated substitution is exponential in the worst case.
inline Word apply_word_map(const Word& w, const WordMap& images,
                           std::size_t length_bound = kDefaultWordLengthBound) {
  std::size_t total = 0;
  for (int l : w) {
    if (l == 0) throw WordError("word letter 0 is not a generator");
    const std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (g >= images.size())
      throw WordError("word letter " + std::to_string(l) + " has no image under the map");
    total += images[g].size();
    if (total > length_bound)
      throw BudgetError("substituted word exceeds the length bound " +
                        std::to_string(length_bound));
  }
  Word out;
  out.reserve(total);
  for (int l : w) {
    const std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    const Word piece = l > 0 ? images[g] : invert_word(images[g]);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce_word(out);
}

inline WordMap identity_word_map(int rank) {
  WordMap m(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)] = {i + 1};
  return m;
}

// Composition as functions: (outer . inner)(x) = outer(inner(x)).
inline WordMap compose_word_maps(const WordMap& outer, const WordMap& inner,
                                 std::size_t length_bound = kDefaultWordLengthBound) {
  WordMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    out[i] = apply_word_map(inner[i], outer, length_bound);
  return out;
}

// phi^d, with free reduction after every substitution round.
inline WordMap iterate_word_map(const WordMap& phi, int d,
                                std::size_t length_bound = kDefaultWordLengthBound) {
  if (d < 0) throw WordError("negative iteration count");
  WordMap out = identity_word_map(static_cast<int>(phi.size()));
  for (int k = 0; k < d; ++k) out = compose_word_maps(phi, out, length_bound);
  return out;
}

inline Word parse_word_tokens(std::istringstream& in, const std::string& context) {
  Word w;
  int v = 0;
  while (in >> v) {
    if (v == 0) throw ParseError("word letter 0 in " + context);
    w.push_back(v);
  }
  if (!in.eof()) throw ParseError("bad word letter in " + context);
  return w;
}

inline std::string format_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

}  // namespace shiftcover
