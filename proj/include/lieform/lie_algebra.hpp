#pragma once

// Lie algebras given by structure constants, and the subobject calculus used
// throughout: products of subspaces, series, closures, centralisers,
// normalisers, cores, quotients and restrictions to subalgebras.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieform/subspace.hpp"

namespace lieform {

template <FieldElement K>
class LieAlgebra {
 public:
  using field_type = field_of<K>;

  /// The abelian algebra of dimension n.
  LieAlgebra(field_type field, std::size_t n)
      : field_(std::move(field)), dim_(n), table_(n * n * n, field_.zero()) {}

  const field_type& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Set [e_i, e_j] = v (0-based, i != j); [e_j, e_i] = -v follows.
  void set_bracket(std::size_t i, std::size_t j, const Vector<K>& v) {
    if (i >= dim_ || j >= dim_ || v.size() != dim_)
      throw DimensionMismatch("bracket index or value out of range");
    if (i == j) throw DimensionMismatch("[e_i, e_i] is always zero");
    for (std::size_t k = 0; k < dim_; ++k) {
      at(i, j, k) = v[k];
      at(j, i, k) = -v[k];
    }
  }

  /// [e_i, e_j]
  Vector<K> basis_bracket(std::size_t i, std::size_t j) const {
    auto begin = table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector<K>(begin, begin + static_cast<std::ptrdiff_t>(dim_));
  }
  const K& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  Vector<K> bracket(const Vector<K>& u, const Vector<K>& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("vector length differs from dim");
    auto out = zero_vector<K>(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || v[j].is_zero()) continue;
        K c = u[i] * v[j];
        const K* row = &table_[(i * dim_ + j) * dim_];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!row[k].is_zero()) out[k] += c * row[k];
      }
    }
    return out;
  }

  /// Matrix of ad x : v -> [x, v].
  Matrix<K> ad(const Vector<K>& x) const {
    Matrix<K> m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      auto col = bracket(x, unit_vector<K>(field_, dim_, j));
      for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
    }
    return m;
  }
  Matrix<K> ad_basis(std::size_t i) const { return ad(unit_vector<K>(field_, dim_, i)); }

  bool is_abelian() const { return is_zero_vector(std::span<const K>(table_)); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
  }

 private:
  K& at(std::size_t i, std::size_t j, std::size_t k) { return table_[(i * dim_ + j) * dim_ + k]; }

  field_type field_;
  std::size_t dim_;
  std::vector<K> table_;  // [e_i, e_j]_k at (i*n + j)*n + k
  std::vector<std::string> labels_;
};

template <FieldElement K>
Subspace<K> zero_subspace(const LieAlgebra<K>& L) {
  return Subspace<K>::zero(L.field(), L.dim());
}
template <FieldElement K>
Subspace<K> whole(const LieAlgebra<K>& L) {
  return Subspace<K>::full(L.field(), L.dim());
}

/// [A, B] = span of brackets of basis elements.
template <FieldElement K>
Subspace<K> product(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b) {
  std::vector<Vector<K>> vs;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) vs.push_back(L.bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace<K>::span(L.field(), L.dim(), vs);
}

template <FieldElement K>
bool is_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& s) {
  return s.contains(product(L, s, s));
}

template <FieldElement K>
bool is_ideal(const LieAlgebra<K>& L, const Subspace<K>& s) {
  return s.contains(product(L, whole(L), s));
}

/// A subspace certified to be closed under the bracket of its parent algebra.
template <FieldElement K>
class Subalgebra {
 public:
  static Subalgebra checked(const LieAlgebra<K>& L, Subspace<K> s) {
    if (s.ambient_dim() != L.dim()) throw AmbientMismatch();
    if (!is_subalgebra(L, s)) throw NotASubalgebra();
    return Subalgebra(std::move(s));
  }
  /// For subspaces produced by constructions that yield subalgebras by definition.
  static Subalgebra trusted(Subspace<K> s) { return Subalgebra(std::move(s)); }

  const Subspace<K>& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  friend bool operator==(const Subalgebra&, const Subalgebra&) = default;

 private:
  explicit Subalgebra(Subspace<K> s) : space_(std::move(s)) {}
  Subspace<K> space_;
};

/// A subspace certified to be an ideal of its parent algebra.
template <FieldElement K>
class Ideal {
 public:
  static Ideal checked(const LieAlgebra<K>& L, Subspace<K> s) {
    if (s.ambient_dim() != L.dim()) throw AmbientMismatch();
    if (!is_ideal(L, s)) throw NotAnIdeal();
    return Ideal(std::move(s));
  }
  /// For subspaces produced by constructions that yield ideals by definition.
  static Ideal trusted(Subspace<K> s) { return Ideal(std::move(s)); }

  const Subspace<K>& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  Subalgebra<K> as_subalgebra() const { return Subalgebra<K>::trusted(space_); }
  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(Subspace<K> s) : space_(std::move(s)) {}
  Subspace<K> space_;
};

struct JacobiTriple {
  std::size_t i, j, k;  // 1-based
  bool operator==(const JacobiTriple&) const = default;
};

struct ValidationReport {
  std::vector<JacobiTriple> jacobi_violations;
  bool soluble = false;
  bool ok() const { return jacobi_violations.empty() && soluble; }
};

/// Derived series L = D_0 > D_1 > ... until it stabilises (last term repeated once
/// is not included: the final element is the stable term).
template <FieldElement K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> series{whole(L)};
  while (true) {
    auto next = product(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <FieldElement K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> series{whole(L)};
  while (true) {
    auto next = product(L, whole(L), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

template <FieldElement K>
bool is_soluble(const LieAlgebra<K>& L) {
  return derived_series(L).back().is_zero();
}

template <FieldElement K>
bool is_nilpotent(const LieAlgebra<K>& L) {
  return lower_central_series(L).back().is_zero();
}

/// Checks Jacobi on every basis triple i < j < k, then solubility.
template <FieldElement K>
ValidationReport validate(const LieAlgebra<K>& L) {
  ValidationReport report;
  const std::size_t n = L.dim();
  std::vector<Vector<K>> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector<K>(L.field(), n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto a = L.bracket(e[i], L.basis_bracket(j, k));
        auto b = L.bracket(e[j], L.basis_bracket(k, i));
        auto c = L.bracket(e[k], L.basis_bracket(i, j));
        for (std::size_t t = 0; t < n; ++t) a[t] += b[t] + c[t];
        if (!is_zero_vector(a)) report.jacobi_violations.push_back({i + 1, j + 1, k + 1});
      }
  report.soluble = report.jacobi_violations.empty() && is_soluble(L);
  return report;
}

/// Throws JacobiViolation for the first failing triple, or NotSoluble.
template <FieldElement K>
void require_valid(const LieAlgebra<K>& L) {
  auto report = validate(L);
  if (!report.jacobi_violations.empty()) {
    const auto& t = report.jacobi_violations.front();
    throw JacobiViolation(t.i, t.j, t.k);
  }
  if (!report.soluble) throw NotSoluble();
}

/// Smallest subalgebra containing s.
template <FieldElement K>
Subalgebra<K> subalgebra_closure(const LieAlgebra<K>& L, const Subspace<K>& s) {
  Subspace<K> cur = s;
  while (true) {
    auto next = sum(cur, product(L, cur, cur));
    if (next == cur) return Subalgebra<K>::trusted(std::move(cur));
    cur = std::move(next);
  }
}

/// Smallest ideal containing s.
template <FieldElement K>
Ideal<K> ideal_closure(const LieAlgebra<K>& L, const Subspace<K>& s) {
  Subspace<K> cur = s;
  const auto all = whole(L);
  while (true) {
    auto next = sum(cur, product(L, all, cur));
    if (next == cur) return Ideal<K>::trusted(std::move(cur));
    cur = std::move(next);
  }
}

/// Solutions x in `domain` of the linear conditions {post * ad(s_i) x = 0}:
/// used for centralisers (post = id), normalisers and factor centralisers
/// (post = projection modulo a subspace).
namespace detail {
template <FieldElement K>
Subspace<K> ad_annihilated(const LieAlgebra<K>& L, const Subspace<K>& domain,
                           const std::vector<Vector<K>>& targets, const Matrix<K>& post) {
  const std::size_t n = L.dim();
  if (domain.is_zero()) return domain;
  Matrix<K> sys(L.field(), 0, domain.dim());
  const auto emb = domain.embedding();
  for (const auto& t : targets) {
    // [x, t] = -ad(t) x; the sign does not change the kernel.
    sys = sys.stacked(post * L.ad(t) * emb);
  }
  auto ker = kernel(sys);
  std::vector<Vector<K>> vs;
  for (std::size_t i = 0; i < ker.dim(); ++i) vs.push_back(domain.combine(ker.basis_vector(i)));
  return Subspace<K>::span(L.field(), n, vs);
}
}  // namespace detail

/// {x in L : [x, s] = 0}
template <FieldElement K>
Subspace<K> centralizer(const LieAlgebra<K>& L, const Subspace<K>& s) {
  return detail::ad_annihilated(L, whole(L), s.basis_vectors(), Matrix<K>::identity(L.field(), L.dim()));
}

template <FieldElement K>
Subspace<K> centre(const LieAlgebra<K>& L) {
  return centralizer(L, whole(L));
}

/// C_L(A/B) = {x in L : [x, A] ⊆ B}; an ideal when A and B are.
template <FieldElement K>
Ideal<K> centralizer_of_factor(const LieAlgebra<K>& L, const Ideal<K>& upper, const Ideal<K>& lower) {
  if (!upper.space().contains(lower.space())) throw NotNested();
  return Ideal<K>::trusted(detail::ad_annihilated(L, whole(L), upper.space().basis_vectors(),
                                                  quotient_projection(lower.space())));
}

/// N_L(U) = {x in L : [x, U] ⊆ U}
template <FieldElement K>
Subalgebra<K> normalizer(const LieAlgebra<K>& L, const Subspace<K>& u) {
  return Subalgebra<K>::trusted(detail::ad_annihilated(L, whole(L), u.basis_vectors(), quotient_projection(u)));
}

/// Largest ideal of L inside m: iterate K <- {x in K : [L, x] ⊆ K}.
template <FieldElement K>
Ideal<K> core(const LieAlgebra<K>& L, const Subspace<K>& m) {
  Subspace<K> cur = m;
  const std::size_t n = L.dim();
  while (!cur.is_zero()) {
    // x in cur with [e_i, x] in cur for all i: proj_cur * ad(e_i) x = 0
    const auto proj = quotient_projection(cur);
    const auto emb = cur.embedding();
    Matrix<K> sys(L.field(), 0, cur.dim());
    for (std::size_t i = 0; i < n; ++i) sys = sys.stacked(proj * L.ad_basis(i) * emb);
    auto ker = kernel(sys);
    std::vector<Vector<K>> vs;
    for (std::size_t i = 0; i < ker.dim(); ++i) vs.push_back(cur.combine(ker.basis_vector(i)));
    auto next = Subspace<K>::span(L.field(), n, vs);
    if (next == cur) break;
    cur = std::move(next);
  }
  return Ideal<K>::trusted(std::move(cur));
}

/// Quotient L/I on the complement basis given by the non-pivot coordinates of I.
template <FieldElement K>
struct Quotient {
  LieAlgebra<K> algebra;
  Matrix<K> projection;  // (n - k) x n
  Matrix<K> section;     // n x (n - k); projection * section = identity

  Subspace<K> image(const Subspace<K>& s) const { return lieform::image(projection, s); }
  /// Full preimage of a subspace of the quotient.
  Subspace<K> preimage(const Subspace<K>& s, const Subspace<K>& kernel_ideal) const {
    return sum(kernel_ideal, lieform::image(section, s));
  }
};

template <FieldElement K>
Quotient<K> quotient(const LieAlgebra<K>& L, const Subspace<K>& ideal) {
  if (!is_ideal(L, ideal)) throw NotAnIdeal();
  auto proj = quotient_projection(ideal);
  auto sec = quotient_section(ideal);
  const std::size_t q = proj.rows();
  LieAlgebra<K> Q(L.field(), q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      Q.set_bracket(a, b, proj.apply(L.bracket(sec.column(a), sec.column(b))));
  return {std::move(Q), std::move(proj), std::move(sec)};
}

template <FieldElement K>
Quotient<K> quotient(const LieAlgebra<K>& L, const Ideal<K>& ideal) {
  return quotient(L, ideal.space());
}

/// A subalgebra U of L viewed as a Lie algebra in its own right, on the
/// canonical basis of U.
template <FieldElement K>
struct Restriction {
  LieAlgebra<K> algebra;
  Subspace<K> space;  // U inside L

  /// Subspace of U (in L coordinates) to coordinates of the restricted algebra.
  Subspace<K> to_local(const Subspace<K>& s) const {
    std::vector<Vector<K>> vs;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto v = s.basis_vector(i);
      if (!space.contains(v)) throw DimensionMismatch("subspace is not contained in the subalgebra");
      vs.push_back(space.coordinates(v));
    }
    return Subspace<K>::span(algebra.field(), algebra.dim(), vs);
  }
  Subspace<K> to_parent(const Subspace<K>& s) const {
    std::vector<Vector<K>> vs;
    for (std::size_t i = 0; i < s.dim(); ++i) vs.push_back(space.combine(s.basis_vector(i)));
    return Subspace<K>::span(algebra.field(), space.ambient_dim(), vs);
  }
};

template <FieldElement K>
Restriction<K> restrict_to(const LieAlgebra<K>& L, const Subspace<K>& u) {
  if (!is_subalgebra(L, u)) throw NotASubalgebra();
  LieAlgebra<K> R(L.field(), u.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = a + 1; b < u.dim(); ++b)
      R.set_bracket(a, b, u.coordinates(L.bracket(u.basis_vector(a), u.basis_vector(b))));
  return {std::move(R), u};
}

/// Leibniz rule d[e_i, e_j] = [d e_i, e_j] + [e_i, d e_j] on all basis pairs.
template <FieldElement K>
bool is_derivation(const LieAlgebra<K>& L, const Matrix<K>& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto lhs = d.apply(L.basis_bracket(i, j));
      auto r1 = L.bracket(d.column(i), unit_vector<K>(L.field(), n, j));
      auto r2 = L.bracket(unit_vector<K>(L.field(), n, i), d.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

}  // namespace lieform
