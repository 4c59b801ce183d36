#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/numeric.hpp"
#include "shiftcover/polynomial.hpp"
#include "shiftcover/smith.hpp"

namespace shiftcover {

// A square matrix over the nonnegative integers, the adjacency matrix of a
// shift of finite type. Construction rejects negative entries.
class NNMatrix {
 public:
  explicit NNMatrix(IntMat m) : m_(std::move(m)) {
    if (!m_.is_square()) throw ShapeError("shift matrix must be square, got " + m_.shape_string());
    if (!m_.is_nonnegative()) throw ConsistencyError("shift matrix has a negative entry");
  }

  const IntMat& mat() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  bool operator==(const NNMatrix&) const = default;

 private:
  IntMat m_;
};

// One elementary strong shift equivalence: a pair (R, S) of nonnegative
// rectangular matrices linking A = R*S to B = S*R.
struct SSEMove {
  IntMat r;
  IntMat s;
};

// Checks A = R*S and B = S*R. Shape incompatibilities are ShapeError; a
// well-shaped pair that fails the equations just returns false.
inline bool is_elementary_equivalence(const IntMat& a, const IntMat& b, const SSEMove& mv) {
  if (!a.is_square() || !b.is_square())
    throw ShapeError("elementary equivalence endpoints must be square");
  if (!mv.r.is_nonnegative() || !mv.s.is_nonnegative())
    throw ConsistencyError("elementary equivalence factors must be nonnegative");
  if (mv.r.rows() != a.rows() || mv.s.cols() != a.cols() || mv.r.cols() != mv.s.rows() ||
      mv.s.rows() != b.rows())
    throw ShapeError("elementary equivalence factor shapes do not match the endpoints");
  return mv.r * mv.s == a && mv.s * mv.r == b;
}

// Conjugation by a permutation matrix is an elementary equivalence:
// with P the matrix of perm (P e_j = e_perm(j)), take R = A * P^T, S = P,
// so R*S = A and S*R = P*A*P^T.
inline SSEMove permutation_similarity_move(const IntMat& a, const std::vector<int>& perm) {
  if (!a.is_square()) throw ShapeError("similarity move needs a square matrix");
  const std::size_t n = a.rows();
  if (perm.size() != n) throw ShapeError("permutation length does not match matrix dimension");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
      throw ConsistencyError("similarity permutation is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
  IntMat p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(static_cast<std::size_t>(perm[j]), j) = 1;
  return SSEMove{a * p.transpose(), p};
}

// A chain of elementary moves from a to b. Step k connects chain endpoint
// m_k to m_{k+1}; forward means m_k = R*S and m_{k+1} = S*R, backward the
// reverse orientation.
struct SSEStep {
  SSEMove move;
  bool forward = true;
};

struct SSECertificate {
  IntMat a;
  IntMat b;
  std::vector<SSEStep> steps;
};

inline bool verify_certificate(const SSECertificate& cert) {
  IntMat cur = cert.a;
  for (const SSEStep& st : cert.steps) {
    const IntMat rs = st.move.r * st.move.s;
    const IntMat sr = st.move.s * st.move.r;
    if (!st.move.r.is_nonnegative() || !st.move.s.is_nonnegative()) return false;
    const IntMat& from = st.forward ? rs : sr;
    const IntMat& to = st.forward ? sr : rs;
    if (cur != from) return false;
    cur = to;
  }
  return cur == cert.b;
}

struct SSESearchBounds {
  int max_depth = 4;        // chain length
  int max_inner_dim = 4;    // columns of R
  Int entry_bound = 3;      // cap on entries of R and S
  std::uint64_t max_states = 20'000;
  std::uint64_t max_work = 2'000'000;  // factor candidates tried across the search
};

// Search outcome. An absent certificate is NOT a disproof: the search is
// exhaustive only within the given bounds, and strong shift equivalence is
// not known to be decidable.
struct SSESearchResult {
  std::optional<SSECertificate> certificate;
  std::uint64_t states_visited = 0;
  bool bounds_hit = false;
};

namespace detail {

inline std::string matrix_key(const IntMat& m) {
  std::ostringstream os;
  os << m.rows() << ":";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << m(i, j) << ",";
  return os.str();
}

// All s in {0..bound}^k with r_block * s = target, appended to out.
inline void solve_column(const IntMat& r, const std::vector<Int>& target, const Int& bound,
                         std::vector<Int>& partial, std::vector<Int>& acc,
                         std::vector<std::vector<Int>>& out) {
  const std::size_t k = r.cols();
  const std::size_t pos = partial.size();
  if (pos == k) {
    if (acc == target) out.push_back(partial);
    return;
  }
  for (Int v = 0; v <= bound; ++v) {
    bool feasible = true;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      acc[i] += v * r(i, pos);
      if (acc[i] > target[i]) feasible = false;
    }
    if (feasible) {
      partial.push_back(v);
      solve_column(r, target, bound, partial, acc, out);
      partial.pop_back();
    }
    for (std::size_t i = 0; i < r.rows(); ++i) acc[i] -= v * r(i, pos);
  }
}

}  // namespace detail

// Bounded breadth-first search for a strong shift equivalence chain from a
// to b. From each matrix M it enumerates factorizations M = R*S with R
// m-by-k, k <= max_inner_dim, entries of R and S up to entry_bound, and
// steps to S*R. Deterministic: k ascending, R in row-major lexicographic
// order, S columns in lexicographic order. max_work caps the number of R
// candidates examined in total; exceeding it stops the search with
// bounds_hit set rather than hanging on large inner dimensions. The
// returned certificate is re-verified before being handed out.
inline SSESearchResult sse_search(const IntMat& a, const IntMat& b,
                                  const SSESearchBounds& bounds = {}) {
  NNMatrix na(a), nb(b);  // validates shape and sign
  SSESearchResult result;
  std::uint64_t work = 0;

  struct Node {
    IntMat m;
    int parent;
    SSEMove via;
    int depth;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  nodes.push_back({a, -1, SSEMove{}, 0});
  seen.emplace(detail::matrix_key(a), 0);

  auto build_certificate = [&](int idx) {
    SSECertificate cert;
    cert.a = a;
    cert.b = b;
    std::vector<SSEStep> rev;
    for (int cur = idx; nodes[static_cast<std::size_t>(cur)].parent >= 0;
         cur = nodes[static_cast<std::size_t>(cur)].parent)
      rev.push_back(SSEStep{nodes[static_cast<std::size_t>(cur)].via, true});
    cert.steps.assign(rev.rbegin(), rev.rend());
    return cert;
  };

  if (a == b) {
    result.certificate = build_certificate(0);
    result.states_visited = 1;
    return result;
  }

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes.size() >= bounds.max_states) {
      // no new states can be recorded and queued ones were already matched
      // against b, so further expansion cannot succeed
      result.bounds_hit = true;
      break;
    }
    const IntMat m = nodes[head].m;  // copy: nodes reallocates during expansion
    const int depth = nodes[head].depth;
    ++result.states_visited;
    if (depth >= bounds.max_depth) {
      result.bounds_hit = true;
      continue;
    }
    const std::size_t n = m.rows();
    for (int k = 1; k <= bounds.max_inner_dim; ++k) {
      // odometer over R in {0..entry_bound}^(n*k), row-major lexicographic
      IntMat r(n, static_cast<std::size_t>(k));
      const std::size_t cells = n * static_cast<std::size_t>(k);
      for (;;) {
        if (++work > bounds.max_work) {
          result.bounds_hit = true;
          return result;
        }
        // a zero row of R cannot produce a nonzero row of M
        bool solvable = true;
        for (std::size_t i = 0; i < n && solvable; ++i) {
          bool row_zero = true;
          for (std::size_t c = 0; c < static_cast<std::size_t>(k) && row_zero; ++c)
            if (r(i, c) != 0) row_zero = false;
          if (!row_zero) continue;
          for (std::size_t j = 0; j < n && solvable; ++j)
            if (m(i, j) != 0) solvable = false;
        }
        // solve R*S = M column by column
        std::vector<std::vector<std::vector<Int>>> col_solutions(n);
        for (std::size_t j = 0; j < n && solvable; ++j) {
          std::vector<Int> target(n);
          for (std::size_t i = 0; i < n; ++i) target[i] = m(i, j);
          std::vector<Int> partial, acc(n, Int(0));
          detail::solve_column(r, target, bounds.entry_bound, partial, acc, col_solutions[j]);
          if (col_solutions[j].empty()) solvable = false;
        }
        if (solvable) {
          // odometer over the choice of S column solutions
          std::vector<std::size_t> pick(n, 0);
          for (;;) {
            IntMat s(static_cast<std::size_t>(k), n);
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
                s(i, j) = col_solutions[j][pick[j]][i];
            IntMat next = s * r;
            const std::string key = detail::matrix_key(next);
            if (!seen.count(key)) {
              if (nodes.size() >= bounds.max_states) {
                result.bounds_hit = true;
              } else {
                seen.emplace(key, static_cast<int>(nodes.size()));
                nodes.push_back({next, static_cast<int>(head), SSEMove{r, s},
                                 depth + 1});
                if (next == b) {
                  SSECertificate cert = build_certificate(static_cast<int>(nodes.size()) - 1);
                  if (!verify_certificate(cert))
                    throw ConsistencyError("search produced an invalid certificate");
                  result.certificate = std::move(cert);
                  return result;
                }
              }
            }
            // advance the column pick
            std::size_t j = 0;
            for (; j < n; ++j) {
              if (++pick[j] < col_solutions[j].size()) break;
              pick[j] = 0;
            }
            if (j == n) break;
          }
        }
        // advance R
        std::size_t c = cells;
        for (; c-- > 0;) {
          if (r(c / static_cast<std::size_t>(k), c % static_cast<std::size_t>(k)) <
              bounds.entry_bound) {
            ++r(c / static_cast<std::size_t>(k), c % static_cast<std::size_t>(k));
            break;
          }
          r(c / static_cast<std::size_t>(k), c % static_cast<std::size_t>(k)) = 0;
        }
        if (c == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return result;
}

// Invariants of the shift preserved by strong shift equivalence (hence by
// shift equivalence and eventual conjugacy).
struct ShiftInvariants {
  IntPoly zeta_denominator;             // det(I - tA); the zeta numerator is 1
  IntPoly cp_away_from_zero;            // char poly with all factors of t removed
  std::vector<Int> bowen_franks;        // Smith diagonal of I - A
  std::vector<RatPoly> invertible_part; // monic invariant factors of A on its eventual image
};

namespace detail {

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
    const Rat inv = m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Diagonal of the Smith form of a matrix over Q[x]; entries monic,
// each dividing the next.
inline std::vector<RatPoly> poly_smith_diagonal(Matrix<RatPoly> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      std::size_t pi = s, pj = s;
      int best = -1;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          if (m(i, j).is_zero()) continue;
          if (best < 0 || m(i, j).degree() < best) {
            best = m(i, j).degree();
            pi = i;
            pj = j;
          }
        }
      if (best < 0) goto done;
      if (pi != s)
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(s, j), m(pi, j));
      if (pj != s)
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, s), m(i, pj));

      bool reduced = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m(i, s).is_zero()) continue;
        const auto [q, r] = RatPoly::divmod(m(i, s), m(s, s));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(i, j) - q * m(s, j);
        if (!r.is_zero()) reduced = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m(s, j).is_zero()) continue;
        const auto [q, r] = RatPoly::divmod(m(s, j), m(s, s));
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = m(i, j) - q * m(i, s);
        if (!r.is_zero()) reduced = false;
      }
      if (!reduced) continue;

      bool fixed = true;
      for (std::size_t i = s + 1; i < rows && fixed; ++i)
        for (std::size_t j = s + 1; j < cols && fixed; ++j) {
          const auto [q, r] = RatPoly::divmod(m(i, j), m(s, s));
          (void)q;
          if (!r.is_zero()) {
            for (std::size_t jj = 0; jj < cols; ++jj) m(s, jj) = m(s, jj) + m(i, jj);
            fixed = false;
          }
        }
      if (fixed) break;
    }
  }
done:
  std::vector<RatPoly> diag;
  for (std::size_t s = 0; s < steps; ++s) diag.push_back(m(s, s).monic());
  return diag;
}

}  // namespace detail

// Monic invariant factors (each dividing the next, constants dropped) of the
// restriction of A to its eventual image im(A^n). This is the conjugacy
// class data of the invertible linear part of the shift over Q.
inline std::vector<RatPoly> invertible_part_factors(const IntMat& a) {
  if (!a.is_square()) throw ShapeError("invertible part needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  const RatMat an = to_rational(a.pow(static_cast<unsigned>(n)));
  RatMat work = an;
  const std::vector<std::size_t> pivots = detail::rref(work);
  const std::size_t rank = pivots.size();
  if (rank == 0) return {};

  // basis E of the eventual image: the pivot columns of A^n
  RatMat basis(n, rank);
  for (std::size_t c = 0; c < rank; ++c)
    for (std::size_t i = 0; i < n; ++i) basis(i, c) = an(i, pivots[c]);

  // solve E * C = A * E; the eventual image is A-invariant so this is exact
  const RatMat target = to_rational(a) * basis;
  RatMat aug(n, 2 * rank);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < rank; ++c) {
      aug(i, c) = basis(i, c);
      aug(i, rank + c) = target(i, c);
    }
  }
  detail::rref(aug);
  RatMat c(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) c(i, j) = aug(i, rank + j);
  for (std::size_t i = rank; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (aug(i, rank + j) != 0)
        throw ConsistencyError("eventual image is not invariant; internal error");

  // invariant factors of xI - C over Q[x]
  Matrix<RatPoly> xc(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      std::vector<Rat> coeffs{Rat(-c(i, j))};
      if (i == j) coeffs.push_back(Rat(1));
      xc(i, j) = RatPoly(std::move(coeffs));
    }
  std::vector<RatPoly> diag = detail::poly_smith_diagonal(std::move(xc));
  std::vector<RatPoly> out;
  for (RatPoly& p : diag)
    if (p.degree() >= 1) out.push_back(std::move(p));
  return out;
}

inline ShiftInvariants shift_invariants(const IntMat& a) {
  if (!a.is_square()) throw ShapeError("shift invariants need a square matrix");
  const IntPoly cp = char_poly(a);
  ShiftInvariants inv;

  // det(I - tA) is the reversal of det(tI - A): coefficient of t^k becomes
  // the coefficient of t^(n-k)
  std::vector<Int> rev(cp.coeffs().rbegin(), cp.coeffs().rend());
  inv.zeta_denominator = IntPoly(std::move(rev));

  std::vector<Int> shifted = cp.coeffs();
  std::size_t drop = 0;
  while (drop < shifted.size() && shifted[drop] == 0) ++drop;
  inv.cp_away_from_zero = IntPoly(std::vector<Int>(shifted.begin() + static_cast<std::ptrdiff_t>(drop),
                                                   shifted.end()));

  inv.bowen_franks = smith_invariant_factors(IntMat::identity(a.rows()) - a);
  inv.invertible_part = invertible_part_factors(a);
  return inv;
}

struct InvariantComparison {
  bool agree = true;
  std::vector<std::string> disagreeing;
};

// Field-by-field comparison. Bowen-Franks data is compared as the cokernel
// group it presents, i.e. with unit factors stripped, so matrices of
// different dimensions can agree.
inline InvariantComparison invariants_agree(const ShiftInvariants& x, const ShiftInvariants& y) {
  InvariantComparison cmp;
  auto fail = [&](const char* field) {
    cmp.agree = false;
    cmp.disagreeing.push_back(field);
  };
  if (x.zeta_denominator != y.zeta_denominator) fail("zeta");
  if (x.cp_away_from_zero != y.cp_away_from_zero) fail("char_poly_away_from_zero");
  auto strip_units = [](const std::vector<Int>& v) {
    std::vector<Int> out;
    for (const Int& d : v)
      if (d != 1) out.push_back(d);
    return out;
  };
  if (strip_units(x.bowen_franks) != strip_units(y.bowen_franks)) fail("bowen_franks");
  if (x.invertible_part != y.invertible_part) fail("invertible_part");
  return cmp;
}

}  // namespace shiftcover
