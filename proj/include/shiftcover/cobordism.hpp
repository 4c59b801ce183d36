#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/presentation.hpp"
#include "shiftcover/words.hpp"

namespace shiftcover {

enum class Theory { closed, relative };

inline std::string theory_name(Theory t) { return t == Theory::closed ? "closed" : "relative"; }

inline Theory parse_theory(const std::string& s) {
  if (s == "closed") return Theory::closed;
  if (s == "relative") return Theory::relative;
  throw ParseError("unknown theory '" + s + "', expected closed or relative");
}

// Presentation-level model of a cobordism: the fundamental group of the
// total space plus the two boundary inclusions, given as words of the total
// presentation, one per boundary generator. The theory field is the default
// flavor a pipeline should build from this data; both flavors are always
// constructible.
struct CobordismData {
  Presentation total;
  Presentation domain;
  Presentation codomain;
  WordMap in_map;   // one word per domain generator
  WordMap out_map;  // one word per codomain generator
  Theory theory = Theory::relative;
};

inline void validate_cobordism(const CobordismData& c) {
  validate_presentation(c.total);
  validate_presentation(c.domain);
  validate_presentation(c.codomain);
  if (static_cast<int>(c.in_map.size()) != c.domain.gen_count)
    throw WordError("in map must have one word per domain generator");
  if (static_cast<int>(c.out_map.size()) != c.codomain.gen_count)
    throw WordError("out map must have one word per codomain generator");
  for (const Word& w : c.in_map) validate_word(w, c.total.gen_count);
  for (const Word& w : c.out_map) validate_word(w, c.total.gen_count);
}

// Mapping-cylinder cobordism of an endomorphism phi of a rank-r free group:
// total space a product F_r x I, inclusion the identity on one end and phi
// on the other. This is the basic block whose d-fold composites present
// cyclic covers.
inline CobordismData twisted_product(int rank, const WordMap& phi, Theory theory) {
  if (static_cast<int>(phi.size()) != rank)
    throw WordError("twisted product needs one image per generator");
  for (const Word& w : phi) validate_word(w, rank);
  CobordismData c;
  c.total = free_presentation(rank);
  c.domain = free_presentation(rank);
  c.codomain = free_presentation(rank);
  c.in_map = identity_word_map(rank);
  c.out_map = phi;
  c.theory = theory;
  return c;
}

// File format, '#' comment lines allowed:
//   theory closed|relative      (optional, default relative)
//   total:
//     gens <n> / rel ... lines
//   domain:
//     gens <n> / rel ... lines
//   codomain:
//     gens <n> / rel ... lines
//   in:
//     word <letters...>         (one per domain generator; bare "word" = empty)
//   out:
//     word <letters...>
inline CobordismData read_cobordism(std::istream& in) {
  CobordismData c;
  enum class Section { none, total, domain, codomain, in_map, out_map };
  Section cur = Section::none;
  bool saw_total = false, saw_domain = false, saw_codomain = false;
  std::string total_text, domain_text, codomain_text;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "theory") {
      std::string t;
      if (!(ls >> t)) throw ParseError("theory line needs a value");
      c.theory = parse_theory(t);
    } else if (kind == "total:") {
      cur = Section::total;
      saw_total = true;
    } else if (kind == "domain:") {
      cur = Section::domain;
      saw_domain = true;
    } else if (kind == "codomain:") {
      cur = Section::codomain;
      saw_codomain = true;
    } else if (kind == "in:") {
      cur = Section::in_map;
    } else if (kind == "out:") {
      cur = Section::out_map;
    } else if (kind == "gens" || kind == "rel") {
      std::string* dest = cur == Section::total      ? &total_text
                          : cur == Section::domain   ? &domain_text
                          : cur == Section::codomain ? &codomain_text
                                                     : nullptr;
      if (!dest) throw ParseError("presentation line outside a presentation section: '" + line + "'");
      *dest += line + "\n";
    } else if (kind == "word") {
      Word w = parse_word_tokens(ls, "cobordism map word");
      if (cur == Section::in_map)
        c.in_map.push_back(std::move(w));
      else if (cur == Section::out_map)
        c.out_map.push_back(std::move(w));
      else
        throw ParseError("word line outside in:/out: sections");
    } else {
      throw ParseError("unknown cobordism line '" + line + "'");
    }
  }
  if (!saw_total || !saw_domain || !saw_codomain)
    throw ParseError("cobordism input needs total:, domain: and codomain: sections");
  c.total = parse_presentation(total_text);
  c.domain = parse_presentation(domain_text);
  c.codomain = parse_presentation(codomain_text);
  validate_cobordism(c);
  return c;
}

inline CobordismData parse_cobordism(const std::string& text) {
  std::istringstream in(text);
  return read_cobordism(in);
}

inline void write_cobordism(std::ostream& out, const CobordismData& c) {
  out << "theory " << theory_name(c.theory) << "\n";
  out << "total:\n";
  write_presentation(out, c.total);
  out << "domain:\n";
  write_presentation(out, c.domain);
  out << "codomain:\n";
  write_presentation(out, c.codomain);
  out << "in:\n";
  for (const Word& w : c.in_map) {
    out << "word";
    for (int l : w) out << " " << l;
    out << "\n";
  }
  out << "out:\n";
  for (const Word& w : c.out_map) {
    out << "word";
    for (int l : w) out << " " << l;
    out << "\n";
  }
}

}  // namespace shiftcover
