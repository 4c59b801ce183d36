#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/numeric.hpp"

namespace shiftcover {

// Smith normal form over the integers: U * M * V = D with U, V unimodular
// and D diagonal, d_1 | d_2 | ... | d_k >= 0.
struct SmithResult {
  IntMat d;
  IntMat u;
  IntMat v;
  std::vector<Int> factors;  // the diagonal of d, length min(rows, cols)
};

namespace detail {

inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace detail

// Classic pivot reduction: pull the smallest nonzero entry of the working
// submatrix into the pivot slot, shrink the rest of its row and column by
// Euclidean steps, then repair divisibility of the remaining block before
// moving on. Every row operation is mirrored into U and every column
// operation into V, preserving U*M*V = D throughout.
inline SmithResult smith_normal_form(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res;
  res.d = m;
  res.u = IntMat::identity(rows);
  res.v = IntMat::identity(cols);
  IntMat& d = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u(a, j), u(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, a), v(i, b));
  };
  // row a -= q * row b
  auto row_sub = [&](std::size_t a, const Int& q, std::size_t b) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) d(a, j) -= q * d(b, j);
    for (std::size_t j = 0; j < rows; ++j) u(a, j) -= q * u(b, j);
  };
  // col a -= q * col b
  auto col_sub = [&](std::size_t a, const Int& q, std::size_t b) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) d(i, a) -= q * d(i, b);
    for (std::size_t i = 0; i < cols; ++i) v(i, a) -= q * v(i, b);
  };
  auto negate_row = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) d(a, j) = -d(a, j);
    for (std::size_t j = 0; j < rows; ++j) u(a, j) = -u(a, j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t s = 0; s < steps; ++s) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = s, pj = s;
      Int best(0);
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          const Int& val = d(i, j);
          if (val == 0) continue;
          const Int a = detail::int_abs(val);
          if (best == 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;  // trailing block is zero; remaining diagonal stays 0
      swap_rows(s, pi);
      swap_cols(s, pj);

      bool reduced = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        const Int q = d(i, s) / d(s, s);
        row_sub(i, q, s);
        if (d(i, s) != 0) reduced = false;  // remainder survives, smaller than the pivot
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        const Int q = d(s, j) / d(s, s);
        col_sub(j, q, s);
        if (d(s, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // pivot row/column clear; force the pivot to divide the trailing block
      bool fixed = true;
      for (std::size_t i = s + 1; i < rows && fixed; ++i)
        for (std::size_t j = s + 1; j < cols && fixed; ++j)
          if (d(i, j) % d(s, s) != 0) {
            row_sub(s, Int(-1), i);  // pull the offending row in, loop again
            fixed = false;
          }
      if (fixed) break;
    }
    if (d(s, s) < 0) negate_row(s);
  }
done:
  res.factors.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    if (res.d(s, s) < 0) negate_row(s);
    res.factors.push_back(res.d(s, s));
  }
  return res;
}

// Invariant factors of coker(M) = Z^rows / im(M), i.e. the Smith diagonal.
inline std::vector<Int> smith_invariant_factors(const IntMat& m) {
  return smith_normal_form(m).factors;
}

}  // namespace shiftcover
