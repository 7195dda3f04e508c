#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dvr {

/// Dense row-major matrix over a value type with +, -, *, / and is_zero().
///
/// The zero of T is carried along because T (e.g. FieldElement) has no
/// default value independent of its field.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, std::move(zero)) {}

  Matrix(std::vector<std::vector<T>> rows, T zero) : rows_(rows.size()), cols_(0), zero_(std::move(zero)) {
    if (rows_ > 0) cols_ = rows[0].size();
    for (auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (auto& e : r) data_.push_back(std::move(e));
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] -= factor * row[src]
  void sub_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = (*this)(dst, j) - factor * (*this)(src, j);
  }
  /// col[dst] -= factor * col[src]
  void sub_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = (*this)(i, dst) - (*this)(i, src) * factor;
  }
  void scale_row(std::size_t i, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = factor * (*this)(i, j);
  }
  void scale_col(std::size_t j, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * factor;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = a.zero_;
        for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

/// Rank over a field by Gaussian elimination.
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) m.sub_row(i, r, m(i, c) / m(r, c));
    ++r;
  }
  return r;
}

/// Determinant over a field by Gaussian elimination.
template <class T>
T determinant(Matrix<T> m, const T& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  T det = one;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t pivot = c;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) return m.zero();
    if (pivot != c) {
      m.swap_rows(c, pivot);
      det = -det;
    }
    det = det * m(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) m.sub_row(i, c, m(i, c) / m(c, c));
  }
  return det;
}

/// Rows joined by ';', entries by ','.
template <class T, class Format>
std::string format_matrix(const Matrix<T>& m, Format&& format) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format(m(i, j));
    }
  }
  return out;
}

}  // namespace dvr
