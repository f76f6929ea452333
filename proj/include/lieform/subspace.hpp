#pragma once

// Subspaces of F^n held by a canonical basis: the nonzero rows of the reduced
// row-echelon form. Two subspaces are equal iff their bases are equal.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lieform/matrix.hpp"

namespace lieform {

template <FieldElement K>
class Subspace {
 public:
  using field_type = field_of<K>;

  /// Row space of `m`.
  explicit Subspace(const Matrix<K>& m) : basis_(m.field(), 0, m.cols()) {
    auto ech = rref(m);
    Matrix<K> b(m.field(), ech.rank, m.cols());
    for (std::size_t r = 0; r < ech.rank; ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) b(r, c) = ech.reduced(r, c);
    basis_ = std::move(b);
    pivots_ = std::move(ech.pivots);
  }

  static Subspace zero(const field_type& field, std::size_t n) {
    return Subspace(Matrix<K>(field, 0, n));
  }
  static Subspace full(const field_type& field, std::size_t n) {
    return Subspace(Matrix<K>::identity(field, n));
  }
  static Subspace span(const field_type& field, std::size_t n, const std::vector<Vector<K>>& vectors) {
    return Subspace(Matrix<K>::from_rows(field, n, vectors));
  }
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(const field_type& field, std::size_t n,
                             const std::vector<std::size_t>& indices) {
    std::vector<Vector<K>> vs;
    for (auto i : indices) vs.push_back(unit_vector<K>(field, n, i));
    return span(field, n, vs);
  }

  const field_type& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<K> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector<K>> basis_vectors() const {
    std::vector<Vector<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// v minus its component along the basis, read off at the pivot columns.
  /// Zero iff v lies in the subspace; otherwise a canonical coset representative.
  Vector<K> reduce(Vector<K> v) const {
    if (v.size() != ambient_dim()) throw AmbientMismatch();
    for (std::size_t i = 0; i < dim(); ++i) {
      K c = v[pivots_[i]];
      if (!c.is_zero()) axpy(v, -c, basis_.row(i));
    }
    return v;
  }

  bool contains(const Vector<K>& v) const { return is_zero_vector(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw AmbientMismatch();
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Coordinates of v (assumed to lie in the subspace) in the canonical basis.
  Vector<K> coordinates(const Vector<K>& v) const {
    Vector<K> c;
    c.reserve(dim());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// sum_i coords[i] * basis_i
  Vector<K> combine(const Vector<K>& coords) const {
    auto v = zero_vector<K>(field(), ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_.row(i));
    return v;
  }

  /// n x dim matrix whose columns are the basis vectors.
  Matrix<K> embedding() const { return basis_.transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  /// Canonical total order: by dimension, then lexicographically on basis entries.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const auto& x = a.basis_.entries();
    const auto& y = b.basis_.entries();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const K& s, const K& t) { return s < t; });
  }

 private:
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

template <FieldElement K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
  return Subspace<K>(a.basis().stacked(b.basis()));
}

/// Null space {v : m v = 0}.
template <FieldElement K>
Subspace<K> kernel(const Matrix<K>& m) {
  auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector<K>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    auto v = unit_vector<K>(m.field(), n, f);
    for (std::size_t i = 0; i < ech.rank; ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace<K>::span(m.field(), n, basis);
}

/// a ∩ b via the kernel of [A^T | -B^T]: pairs (x, y) with x A = y B.
template <FieldElement K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
  const auto& field = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<K>::zero(field, n);
  Matrix<K> sys(field, n, a.dim() + b.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < a.dim(); ++i) sys(r, i) = a.basis()(i, r);
    for (std::size_t j = 0; j < b.dim(); ++j) sys(r, a.dim() + j) = -b.basis()(j, r);
  }
  auto ker = kernel(sys);
  std::vector<Vector<K>> vs;
  for (std::size_t s = 0; s < ker.dim(); ++s) {
    auto sol = ker.basis_vector(s);
    Vector<K> x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    vs.push_back(a.combine(x));
  }
  return Subspace<K>::span(field, n, vs);
}

/// Linear projection F^n -> F^n / S in coordinates of the complement spanned by
/// the non-pivot standard basis vectors. Shape (n - dim S) x n.
template <FieldElement K>
Matrix<K> quotient_projection(const Subspace<K>& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  Matrix<K> proj(s.field(), n - s.dim(), n);
  std::size_t q = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    // coordinate c of reduce(v) = v_c - sum_i v_{pivot_i} * basis_i[c]
    proj(q, c) = s.field().one();
    for (std::size_t i = 0; i < s.dim(); ++i) proj(q, s.pivots()[i]) = -s.basis()(i, c);
    ++q;
  }
  return proj;
}

/// Right inverse of quotient_projection: maps quotient coordinate q to the
/// q-th non-pivot standard basis vector. Shape n x (n - dim S).
template <FieldElement K>
Matrix<K> quotient_section(const Subspace<K>& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  Matrix<K> sec(s.field(), n, n - s.dim());
  std::size_t q = 0;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) sec(c, q++) = s.field().one();
  return sec;
}

/// Image of a subspace under a linear map.
template <FieldElement K>
Subspace<K> image(const Matrix<K>& map, const Subspace<K>& s) {
  if (map.cols() != s.ambient_dim()) throw AmbientMismatch();
  std::vector<Vector<K>> vs;
  for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(map.apply(s.basis_vector(i)));
  return Subspace<K>::span(map.field(), map.rows(), vs);
}

template <FieldElement K>
std::string to_string(const Subspace<K>& s) {
  if (s.is_zero()) return "span{}";
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis_vector(i));
  }
  return out + "}";
}

}  // namespace lieform
