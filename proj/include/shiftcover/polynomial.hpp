#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/numeric.hpp"

namespace shiftcover {

// Polynomial in one variable, coefficients stored ascending and trimmed:
// the zero polynomial has an empty coefficient vector and degree -1.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;

  // constant polynomial; lets Matrix<Polynomial<...>> use T(0) generically
  Polynomial(int constant) : c_{T(constant)} { trim(); }

  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  // c * t^k
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of t^i, zero beyond the stored range.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }

  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  T constant_term() const { return coeff(0); }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator+(const Polynomial& rhs) const {
    std::vector<T> out(std::max(c_.size(), rhs.c_.size()), T(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return Polynomial(std::move(out));
  }

  Polynomial operator-(const Polynomial& rhs) const {
    std::vector<T> out(std::max(c_.size(), rhs.c_.size()), T(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return Polynomial(std::move(out));
  }

  Polynomial operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<T> out(c_.size() + rhs.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T(0)) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
  }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Euclidean division; requires invertible leading coefficient (field T).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ShapeError("polynomial division by zero");
    Polynomial q;
    Polynomial r = num;
    const T lead = den.leading();
    while (!r.is_zero() && r.degree() >= den.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - den.degree());
      const T factor = r.leading() / lead;
      Polynomial term = monomial(factor, shift);
      q = q + term;
      r = r - term * den;
    }
    return {q, r};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<T> out = c_;
    const T lead = c_.back();
    for (T& v : out) v = v / lead;
    return Polynomial(std::move(out));
  }

  // Human-readable, highest degree first: "t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const T& c = c_[i];
      if (c == T(0)) continue;
      const bool neg = c < T(0);
      const T mag = neg ? T(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = (mag == T(1));
      if (i == 0 || !unit) out += value_string(mag);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::string value_string(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }

  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recurrence.
// Fraction-free over the integers: every division below is exact.
inline IntPoly char_poly(const IntMat& a) {
  if (!a.is_square()) throw ShapeError("char_poly of non-square matrix " + a.shape_string());
  const std::size_t n = a.rows();
  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[n] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));
  IntMat m = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      IntMat shifted = m;
      const Int& ck = coeffs[n - (k - 1)];
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
      m = a * shifted;
    }
    Int t = m.trace();
    // c_k = -trace(M_k)/k, exact by the recurrence.
    Int ck = -t / Int(k);
    coeffs[n - k] = ck;
  }
  return IntPoly(std::move(coeffs));
}

inline Int determinant(const IntMat& a) {
  const IntPoly cp = char_poly(a);
  Int d = cp.constant_term();
  // det(A) = (-1)^n * constant coefficient of det(tI - A).
  if (a.rows() % 2 == 1) d = -d;
  return d;
}

}  // namespace shiftcover
