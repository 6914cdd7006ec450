#pragma once

#include "tropjac/numeric.hpp"
#include "tropjac/poly.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace tropjac {

/// Small dense row-major matrix. Scalars are Integer, Rational or Poly.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Deletes row r and column c.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(ii, jj++) = (*this)(i, j);
      }
      ++ii;
    }
    return m;
  }

  template <typename U, typename F>
  Matrix<U> map(F f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

/// Determinant by cofactor expansion along the first row. Ring-generic, so it
/// works for polynomial entries; only meant for the small (g <= 6) matrices
/// of this library.
template <typename T>
T det_expand(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == T(0)) continue;
    T term = m(0, j) * det_expand(m.minor_matrix(0, j));
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

/// Signed cofactor (-1)^(i+j) * det(minor(i, j)).
template <typename T>
T cofactor(const Matrix<T>& m, std::size_t i, std::size_t j) {
  T d = det_expand(m.minor_matrix(i, j));
  return (i + j) % 2 == 0 ? d : T(0) - d;
}

template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(m, i, j);
  return adj;
}

Rational determinant(const RatMatrix& m);  // Gaussian elimination
Integer determinant(const IntMatrix& m);   // Bareiss
/// Inverse of a nonsingular rational matrix; throws SingularLattice otherwise.
RatMatrix inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace tropjac
