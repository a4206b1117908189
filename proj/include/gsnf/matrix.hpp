#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsnf/poly.hpp"

namespace gsnf {

// Dense row-major matrix over a ring R (R defaults to zero on
// construction).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k)
        for (size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

// Fraction-free (Bareiss) determinant over a polynomial ring; every
// division is exact by the Bareiss identity.
template <class K>
Poly<K> det_bareiss(Matrix<Poly<K>> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const size_t n = m.rows();
  if (n == 0) return Poly<K>::one();
  Poly<K> prev = Poly<K>::one();
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Poly<K>();
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = poly_exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  Poly<K> det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// Cofactor expansion; second, independent determinant route for small
// orders.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R det = R(0);
  std::vector<size_t> rows;
  for (size_t i = 1; i < n; ++i) rows.push_back(i);
  for (size_t j = 0; j < n; ++j) {
    std::vector<size_t> cols;
    for (size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    R term = m(0, j) * det_cofactor(m.submatrix(rows, cols));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace gsnf
