#pragma once

// Dense exact matrices and Gauss-Jordan elimination.
//
// Column convention: vectors are coordinate columns and a matrix acts by
// matrix-times-vector.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieform/errors.hpp"
#include "lieform/field.hpp"

namespace lieform {

template <class K>
using Vector = std::vector<K>;

template <FieldElement K>
Vector<K> zero_vector(const field_of<K>& field, std::size_t n) {
  return Vector<K>(n, field.zero());
}

template <FieldElement K>
Vector<K> unit_vector(const field_of<K>& field, std::size_t n, std::size_t i) {
  auto v = zero_vector<K>(field, n);
  v[i] = field.one();
  return v;
}

template <FieldElement K>
bool is_zero_vector(std::span<const K> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <FieldElement K>
bool is_zero_vector(const Vector<K>& v) {
  return is_zero_vector(std::span<const K>(v));
}

/// y += c * x
template <FieldElement K>
void axpy(Vector<K>& y, const K& c, std::span<const K> x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

template <FieldElement K>
class Matrix {
 public:
  using field_type = field_of<K>;

  Matrix(field_type field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const field_type& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const field_type& field, std::size_t cols,
                          const std::vector<Vector<K>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const field_type& field, std::size_t rows,
                             const std::vector<Vector<K>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  const field_type& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector<K> row_vector(std::size_t r) const { return Vector<K>(row(r).begin(), row(r).end()); }
  Vector<K> column(std::size_t c) const {
    Vector<K> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  /// Row-major entries.
  const std::vector<K>& entries() const { return data_; }

  bool is_zero() const { return is_zero_vector(std::span<const K>(data_)); }

  Vector<K> apply(const Vector<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
    auto out = zero_vector<K>(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("inner dimensions differ");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a, b] = ab - ba
  friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

  /// Rows of `below` appended under this matrix.
  Matrix stacked(const Matrix& below) const {
    if (below.cols_ != cols_) throw DimensionMismatch("cannot stack matrices of different widths");
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Flatten row-major into a vector of length rows*cols.
  Vector<K> flatten() const { return data_; }
  static Matrix unflatten(const field_type& field, std::size_t rows, std::size_t cols,
                          const Vector<K>& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("flat vector has wrong length");
    Matrix m(field, rows, cols);
    m.data_ = v;
    return m;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  field_type field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<K> data_;
};

template <FieldElement K>
struct RowEchelon {
  Matrix<K> reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <FieldElement K>
RowEchelon<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    K inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <FieldElement K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank;
}

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
template <FieldElement K>
std::optional<Vector<K>> solve(const Matrix<K>& m, const Vector<K>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  Matrix<K> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto ech = rref(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  auto x = zero_vector<K>(m.field(), m.cols());
  for (std::size_t i = 0; i < ech.rank; ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
  return x;
}

template <FieldElement K>
std::string to_string(const Vector<K>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

template <FieldElement K>
std::string to_string(const Matrix<K>& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ", ";
    s += to_string(m.row_vector(r));
  }
  return s + "]";
}

}  // namespace lieform
