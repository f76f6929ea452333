#pragma once

// Derivation algebras and the two intravariance tests.
//
// Derivations are n x n matrices acting on coordinate columns. For subspace
// arithmetic the matrix space is identified with F^(n*n), row-major.

#include <optional>
#include <vector>

#include "lieform/chief.hpp"

namespace lieform {

template <FieldElement K>
class DerivationAlgebra {
 public:
  DerivationAlgebra(std::size_t n, Subspace<K> space) : n_(n), space_(std::move(space)) {}

  std::size_t algebra_dim() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace<K>& space() const { return space_; }

  Matrix<K> basis_element(std::size_t i) const {
    return Matrix<K>::unflatten(space_.field(), n_, n_, space_.basis_vector(i));
  }
  std::vector<Matrix<K>> basis() const {
    std::vector<Matrix<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_element(i));
    return out;
  }
  bool contains(const Matrix<K>& d) const { return space_.contains(d.flatten()); }
  /// sum_i coords[i] * basis_i
  Matrix<K> combine(const Vector<K>& coords) const {
    return Matrix<K>::unflatten(space_.field(), n_, n_, space_.combine(coords));
  }

 private:
  std::size_t n_;
  Subspace<K> space_;
};

/// Kernel of the linear system d[e_i, e_j] - [d e_i, e_j] - [e_i, d e_j] = 0.
template <FieldElement K>
DerivationAlgebra<K> derivation_algebra(const LieAlgebra<K>& L) {
  const std::size_t n = L.dim();
  const auto& F = L.field();
  const std::size_t pairs = n > 0 ? n * (n - 1) / 2 : 0;
  Matrix<K> sys(F, pairs * n, n * n);
  std::size_t row = 0;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t r = 0; r < n; ++r) {
          sys(row, var(k, r)) += L.structure_constant(i, j, r);
          sys(row, var(r, i)) -= L.structure_constant(r, j, k);
          sys(row, var(r, j)) -= L.structure_constant(i, r, k);
        }
  return DerivationAlgebra<K>(n, kernel(sys));
}

/// Span of ad e_1, ..., ad e_n inside the matrix space.
template <FieldElement K>
Subspace<K> inner_derivations(const LieAlgebra<K>& L) {
  std::vector<Vector<K>> vs;
  for (std::size_t i = 0; i < L.dim(); ++i) vs.push_back(L.ad_basis(i).flatten());
  return Subspace<K>::span(L.field(), L.dim() * L.dim(), vs);
}

/// {d ∈ Der(L) : d(U) ⊆ U}
template <FieldElement K>
Subspace<K> stabilizing_derivations(const DerivationAlgebra<K>& der, const Subspace<K>& u) {
  const auto& F = u.field();
  const auto proj = quotient_projection(u);
  const auto basis = der.basis();
  Matrix<K> sys(F, 0, der.dim());
  for (std::size_t t = 0; t < u.dim(); ++t) {
    const auto x = u.basis_vector(t);
    Matrix<K> block(F, proj.rows(), der.dim());
    for (std::size_t s = 0; s < basis.size(); ++s) {
      auto col = proj.apply(basis[s].apply(x));
      for (std::size_t r = 0; r < col.size(); ++r) block(r, s) = col[r];
    }
    sys = sys.stacked(block);
  }
  auto ker = kernel(sys);
  std::vector<Vector<K>> vs;
  for (std::size_t i = 0; i < ker.dim(); ++i) vs.push_back(der.space().combine(ker.basis_vector(i)));
  return Subspace<K>::span(F, der.space().ambient_dim(), vs);
}

/// Every derivation is inner plus U-stabilising: Inn(L) + Stab(U) = Der(L).
template <FieldElement K>
bool is_intravariant_linear(const LieAlgebra<K>& L, const Subspace<K>& u) {
  auto der = derivation_algebra(L);
  return sum(inner_derivations(L), stabilizing_derivations(der, u)) == der.space();
}

/// For the extension D = <d, L>: does N_D(U) + L = D hold?
template <FieldElement K>
bool extension_normaliser_spans(const LieAlgebra<K>& L, const Subspace<K>& u, const Matrix<K>& d) {
  auto ext = split_extension_by_derivation(L, d);
  auto u_in_d = image(ext.module_embedding, u);
  auto n = normalizer(ext.result, u_in_d).space();
  auto l_in_d = image(ext.module_embedding, whole(L));
  return sum(n, l_in_d).is_full();
}

/// A basis derivation d of Der(L) for which N_D(U) + L != D in D = <d, L>.
template <FieldElement K>
std::optional<Matrix<K>> extension_counterexample(const LieAlgebra<K>& L, const Subspace<K>& u) {
  for (const auto& d : derivation_algebra(L).basis())
    if (!extension_normaliser_spans(L, u, d)) return d;
  return std::nullopt;
}

/// L* = L + N_{L*}(U) for each one-dimensional extension by a basis derivation.
/// The decomposable derivations form a subspace, so basis elements suffice.
template <FieldElement K>
bool is_intravariant_extension(const LieAlgebra<K>& L, const Subspace<K>& u) {
  return !extension_counterexample(L, u).has_value();
}

}  // namespace lieform
