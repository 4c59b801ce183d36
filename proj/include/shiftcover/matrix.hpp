#pragma once

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftcover/errors.hpp"
#include "shiftcover/numeric.hpp"

namespace shiftcover {

// Dense row-major matrix over an exact coefficient type (Int, Rat, or a
// polynomial type). Shape mismatches throw ShapeError; they are data errors
// here, not logic errors, because shapes come from user-supplied files.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged initializer for matrix");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

  Matrix operator+(const Matrix& rhs) const {
    require_same_shape(rhs, "+");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    require_same_shape(rhs, "-");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw ShapeError("matrix product shape mismatch: " + shape_string() + " * " +
                       rhs.shape_string());
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix " + shape_string());
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix pow(unsigned d) const {
    if (!is_square()) throw ShapeError("power of non-square matrix " + shape_string());
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (d) {
      if (d & 1u) result = result * base;
      if (d >>= 1u) base = base * base;
    }
    return result;
  }

  bool is_nonnegative() const {
    for (const T& v : data_)
      if (v < T(0)) return false;
    return true;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw ShapeError(std::string("matrix ") + op + " shape mismatch: " + shape_string() +
                       " vs " + rhs.shape_string());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rational(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

// File format:
//   matrix <rows> <cols>
//   <rows*cols integers, row-major, any whitespace layout>
// Lines starting with '#' are comments.
inline IntMat read_matrix(std::istream& in) {
  std::string token;
  auto next = [&](std::string& out) {
    while (in >> out) {
      if (!out.empty() && out[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return true;
    }
    return false;
  };
  if (!next(token)) throw ParseError("empty matrix input");
  if (token != "matrix") throw ParseError("matrix input must start with 'matrix', got '" + token + "'");
  long long r = 0, c = 0;
  if (!(in >> r >> c) || r < 0 || c < 0) throw ParseError("bad matrix dimensions");
  IntMat m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!next(token)) throw ParseError("matrix input ended before all entries were read");
      try {
        m(i, j) = Int(token);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + token + "'");
      }
    }
  return m;
}

inline IntMat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const IntMat& m) {
  out << "matrix " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

}  // namespace shiftcover
