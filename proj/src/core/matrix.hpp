#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/scalars.hpp"

namespace netconics {

/// Row-major dense matrix over a commutative ring R.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill = R(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::kInvalidInput, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::kInvalidInput, "matrix shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        R acc(0);
        for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        p(i, j) = acc;
      }
    return p;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] = s.data_[i] + b.data_[i];
    return s;
  }

  friend Matrix operator*(const R& k, const Matrix& a) {
    Matrix s = a;
    for (auto& v : s.data_) v = k * v;
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Laplace expansion along the first row. Works over any commutative ring;
/// only used for the small (n <= 6) matrices of the exact path.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::kInvalidInput, "determinant of non-square matrix");
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R acc(0);
  bool first = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    Matrix<R> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, k++) = m(r, cc);
      }
    R term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 1) term = -term;
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

/// Gaussian elimination over a field; returns the rank.
template <class F>
std::size_t rank(Matrix<F> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
    const F inv = F(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = m(i, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = m(i, k) - f * m(r, k);
    }
    ++r;
  }
  return r;
}

/// Gaussian-elimination determinant over a field (any size).
template <class F>
F det_field(Matrix<F> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::kInvalidInput, "determinant of non-square matrix");
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det = det * m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(i, k) = m(i, k) - f * m(c, k);
    }
  }
  return det;
}

/// Basis of the right null space {v : m v = 0} over a field.
template <class F>
std::vector<std::vector<F>> null_space(Matrix<F> m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
    const F inv = F(1) / m(r, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    bool is_pivot = false;
    for (auto pc : pivot_cols) is_pivot = is_pivot || pc == free;
    if (is_pivot) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

using RatMatrix = Matrix<Rat>;
using EisMatrix = Matrix<EisRat>;

}  // namespace netconics
