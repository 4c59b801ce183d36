#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/cobordism.hpp"
#include "shiftcover/errors.hpp"
#include "shiftcover/finite_group.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/numeric.hpp"
#include "shiftcover/polynomial.hpp"
#include "shiftcover/presentation.hpp"

namespace shiftcover {

// Hom-counting invariant of a closed presentation: #Hom(P,G)/#G. The same
// number is the sum of 1/#C(im b) over conjugacy classes [b] of homs, with
// C the centralizer of the image; both are computed and must agree.
inline Rat closed_invariant(const Presentation& p, const FiniteGroup& g, WorkBudget& budget) {
  const std::vector<Images> homs = enumerate_homs(p, g, budget);
  const std::vector<std::vector<int>> orbits = hom_classes(homs, g);
  Rat by_classes(0);
  for (const auto& orbit : orbits) {
    const Images& rep = homs[static_cast<std::size_t>(orbit.front())];
    int cent = 0;
    for (int a = 0; a < g.order; ++a)
      if (conjugate_images(g, a, rep) == rep) ++cent;
    by_classes += Rat(1, cent);
  }
  const Rat by_count(Int(homs.size()), Int(g.order));
  if (by_classes != by_count)
    throw ConsistencyError("centralizer sum disagrees with hom count; internal error");
  return by_count;
}

inline Rat closed_invariant(const Presentation& p, const FiniteGroup& g,
                            std::uint64_t budget_limit = kDefaultWorkBudget) {
  WorkBudget budget(budget_limit);
  return closed_invariant(p, g, budget);
}

// Hom-counting invariant of the relative theory: the plain count #Hom(P,G).
inline Int relative_invariant(const Presentation& p, const FiniteGroup& g,
                              std::uint64_t budget_limit = kDefaultWorkBudget) {
  WorkBudget budget(budget_limit);
  return Int(enumerate_homs(p, g, budget).size());
}

enum class RepChoice { lex_least, lex_greatest };

// State-sum matrix of a cobordism over G. Basis labels are generator-image
// tuples: the full hom set of each boundary in the relative theory, orbit
// representatives under conjugation in the closed theory. Entries count
// homs of the total space by their boundary restrictions, with columns
// indexing the incoming boundary and rows the outgoing one, so composites
// multiply as later * earlier.
struct TransferMatrix {
  Theory theory = Theory::relative;
  std::vector<Images> col_basis;  // incoming boundary
  std::vector<Images> row_basis;  // outgoing boundary
  IntMat entries;

  // One record per hom of the total space, kept only on request in the
  // relative theory; this is the edge data of the covering multigraph.
  struct EdgeRecord {
    int row = 0;
    int col = 0;
    Images total_hom;
  };
  std::vector<EdgeRecord> edges;
  bool has_edges = false;
};

namespace detail {

inline int find_hom(const std::vector<Images>& homs, const Images& t, const char* which) {
  const auto it = std::lower_bound(homs.begin(), homs.end(), t);
  if (it == homs.end() || *it != t)
    throw ConsistencyError(std::string("restriction of a total hom violates the ") + which +
                           " relators; the boundary maps are inconsistent");
  return static_cast<int>(it - homs.begin());
}

inline Images restrict_hom(const FiniteGroup& g, const Images& total_hom, const WordMap& map,
                           WorkBudget& budget) {
  Images out(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    budget.charge(map[i].size());
    out[i] = evaluate_word(g, total_hom, map[i]);
  }
  return out;
}

}  // namespace detail

// Closed-theory transfer matrix on conjugacy classes of boundary homs.
// Entry (w, v) counts homs b of the total space whose incoming restriction
// equals the chosen representative of class v on the nose and whose outgoing
// restriction lies in class w. The count is independent of the choice;
// rep picks which representative realizes it.
inline TransferMatrix transfer_matrix(const CobordismData& cob, const FiniteGroup& g,
                                      WorkBudget& budget,
                                      RepChoice rep = RepChoice::lex_least) {
  validate_cobordism(cob);
  const std::vector<Images> dom_homs = enumerate_homs(cob.domain, g, budget);
  const std::vector<std::vector<int>> dom_orbits = hom_classes(dom_homs, g);
  const std::vector<Images> cod_homs = enumerate_homs(cob.codomain, g, budget);
  const std::vector<std::vector<int>> cod_orbits = hom_classes(cod_homs, g);

  TransferMatrix m;
  m.theory = Theory::closed;
  auto pick = [&](const std::vector<Images>& homs, const std::vector<int>& orbit) {
    return homs[static_cast<std::size_t>(rep == RepChoice::lex_least ? orbit.front()
                                                                     : orbit.back())];
  };
  for (const auto& orbit : dom_orbits) m.col_basis.push_back(pick(dom_homs, orbit));
  for (const auto& orbit : cod_orbits) m.row_basis.push_back(pick(cod_homs, orbit));

  std::vector<int> cod_orbit_of(cod_homs.size());
  for (std::size_t o = 0; o < cod_orbits.size(); ++o)
    for (int idx : cod_orbits[o]) cod_orbit_of[static_cast<std::size_t>(idx)] = static_cast<int>(o);
  std::vector<int> dom_orbit_of(dom_homs.size());
  for (std::size_t o = 0; o < dom_orbits.size(); ++o)
    for (int idx : dom_orbits[o]) dom_orbit_of[static_cast<std::size_t>(idx)] = static_cast<int>(o);

  m.entries = IntMat(m.row_basis.size(), m.col_basis.size());
  const std::vector<Images> total_homs = enumerate_homs(cob.total, g, budget);
  for (const Images& b : total_homs) {
    const Images u = detail::restrict_hom(g, b, cob.in_map, budget);
    const Images v = detail::restrict_hom(g, b, cob.out_map, budget);
    const int ui = detail::find_hom(dom_homs, u, "domain");
    const int vi = detail::find_hom(cod_homs, v, "codomain");
    const int uo = dom_orbit_of[static_cast<std::size_t>(ui)];
    if (u != m.col_basis[static_cast<std::size_t>(uo)]) continue;
    m.entries(static_cast<std::size_t>(cod_orbit_of[static_cast<std::size_t>(vi)]),
              static_cast<std::size_t>(uo)) += 1;
  }
  return m;
}

inline TransferMatrix transfer_matrix(const CobordismData& cob, const FiniteGroup& g,
                                      std::uint64_t budget_limit = kDefaultWorkBudget,
                                      RepChoice rep = RepChoice::lex_least) {
  WorkBudget budget(budget_limit);
  return transfer_matrix(cob, g, budget, rep);
}

// Relative-theory transfer matrix on the full hom bases. Entry (w, v)
// counts homs of the total space restricting to v on the incoming boundary
// and w on the outgoing one; every column therefore sums to the number of
// total homs extending that incoming hom.
inline TransferMatrix transfer_matrix_relative(const CobordismData& cob, const FiniteGroup& g,
                                               WorkBudget& budget, bool keep_edges = false) {
  validate_cobordism(cob);
  TransferMatrix m;
  m.theory = Theory::relative;
  m.col_basis = enumerate_homs(cob.domain, g, budget);
  m.row_basis = enumerate_homs(cob.codomain, g, budget);
  m.entries = IntMat(m.row_basis.size(), m.col_basis.size());
  m.has_edges = keep_edges;
  const std::vector<Images> total_homs = enumerate_homs(cob.total, g, budget);
  for (const Images& b : total_homs) {
    const Images u = detail::restrict_hom(g, b, cob.in_map, budget);
    const Images v = detail::restrict_hom(g, b, cob.out_map, budget);
    const int ui = detail::find_hom(m.col_basis, u, "domain");
    const int vi = detail::find_hom(m.row_basis, v, "codomain");
    m.entries(static_cast<std::size_t>(vi), static_cast<std::size_t>(ui)) += 1;
    if (keep_edges) m.edges.push_back({vi, ui, b});
  }
  return m;
}

inline TransferMatrix transfer_matrix_relative(const CobordismData& cob, const FiniteGroup& g,
                                               std::uint64_t budget_limit = kDefaultWorkBudget,
                                               bool keep_edges = false) {
  WorkBudget budget(budget_limit);
  return transfer_matrix_relative(cob, g, budget, keep_edges);
}

// Composite along a shared boundary: later after earlier. The gluing basis
// must match exactly, labels included.
inline TransferMatrix compose(const TransferMatrix& later, const TransferMatrix& earlier) {
  if (later.theory != earlier.theory)
    throw ShapeError("cannot compose transfer matrices of different theories");
  if (later.col_basis != earlier.row_basis)
    throw ShapeError("gluing bases do not match: composite is undefined");
  TransferMatrix m;
  m.theory = later.theory;
  m.col_basis = earlier.col_basis;
  m.row_basis = later.row_basis;
  m.entries = later.entries * earlier.entries;
  return m;
}

inline void require_endomorphism(const TransferMatrix& m) {
  if (m.row_basis != m.col_basis)
    throw ShapeError("transfer matrix bases differ; powers and traces are undefined");
}

// Number of homs of the d-fold cyclic closure: trace of the d-th power,
// times #G in the closed theory where classes weight an orbit of closures.
inline Int cover_count(const TransferMatrix& m, int d, const FiniteGroup& g) {
  require_endomorphism(m);
  if (d < 1) throw WordError("cover degree must be at least 1");
  const Int t = m.entries.pow(static_cast<unsigned>(d)).trace();
  return m.theory == Theory::closed ? Int(g.order) * t : t;
}

// trace(M^d) for d = 1..dmax, computed incrementally.
inline std::vector<Int> periodic_point_counts(const IntMat& m, int dmax) {
  if (!m.is_square()) throw ShapeError("periodic point counts need a square matrix");
  if (dmax < 0) throw WordError("negative degree range");
  std::vector<Int> out;
  IntMat p = IntMat::identity(m.rows());
  for (int d = 1; d <= dmax; ++d) {
    p = p * m;
    out.push_back(p.trace());
  }
  return out;
}

inline std::vector<Int> periodic_point_counts(const TransferMatrix& m, int dmax) {
  require_endomorphism(m);
  return periodic_point_counts(m.entries, dmax);
}

// Hom counts of the d-fold branched covers, d = 1..dmax: trace(M^d) scaled
// by #G^(1-mu) where mu is the number of branch components. Divisibility of
// the trace by #G^(mu-1) is part of the contract; its failure means the
// input data was not a branched-cover pipeline and is reported as an error.
inline std::vector<Int> branched_cover_counts(const TransferMatrix& m, const FiniteGroup& g,
                                              int mu, int dmax) {
  require_endomorphism(m);
  if (m.theory != Theory::relative)
    throw ShapeError("branched cover counts are defined for relative transfer matrices");
  if (mu < 1) throw WordError("branch component count must be at least 1");
  const Int denom = int_pow(Int(g.order), static_cast<unsigned>(mu - 1));
  std::vector<Int> out;
  IntMat p = IntMat::identity(m.entries.rows());
  for (int d = 1; d <= dmax; ++d) {
    p = p * m.entries;
    const Int t = p.trace();
    if (t % denom != 0)
      throw ConsistencyError("trace " + t.str() + " at degree " + std::to_string(d) +
                             " is not divisible by #G^(mu-1) = " + denom.str());
    out.push_back(t / denom);
  }
  return out;
}

inline IntPoly char_poly(const TransferMatrix& m) {
  require_endomorphism(m);
  return char_poly(m.entries);
}

// Linear recursion driven by the characteristic polynomial
// t^n + c_1 t^(n-1) + ... + c_n: checks
// counts[d] = -(c_1 counts[d-1] + ... + c_n counts[d-n]) for all d > n.
// Indices here are 1-based degrees; counts[0] is degree 1.
struct RecursionCheck {
  bool ok = true;
  int first_violation = 0;  // degree of the first failing entry, 0 if none
};

inline RecursionCheck verify_recursion(const std::vector<Int>& counts, const IntPoly& cp) {
  const int n = cp.degree();
  if (n < 0 || cp.leading() != 1) throw ShapeError("recursion needs a monic polynomial");
  RecursionCheck rc;
  for (std::size_t i = static_cast<std::size_t>(n); i < counts.size(); ++i) {
    Int expected(0);
    for (int k = 1; k <= n; ++k)
      expected -= cp.coeff(static_cast<std::size_t>(n - k)) * counts[i - static_cast<std::size_t>(k)];
    if (counts[i] != expected) {
      rc.ok = false;
      rc.first_violation = static_cast<int>(i) + 1;
      return rc;
    }
  }
  return rc;
}

inline std::string format_images(const Images& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

// Text form: the plain matrix block (readable by read_matrix) preceded by
// commented basis labels, so transfer output pipes straight into the shift
// equivalence tools.
inline void write_transfer_matrix(std::ostream& out, const TransferMatrix& m) {
  out << "# theory " << theory_name(m.theory) << "\n";
  for (std::size_t j = 0; j < m.col_basis.size(); ++j)
    out << "# col " << j << " " << format_images(m.col_basis[j]) << "\n";
  for (std::size_t i = 0; i < m.row_basis.size(); ++i)
    out << "# row " << i << " " << format_images(m.row_basis[i]) << "\n";
  write_matrix(out, m.entries);
}

}  // namespace shiftcover
