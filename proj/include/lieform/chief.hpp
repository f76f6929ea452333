#pragma once

// Modules, minimal ideals, chief series, split extensions and the
// cover/avoid relations between subalgebras and chief factors.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "lieform/lattice.hpp"

namespace lieform {

/// A representation of a Lie algebra with basis e_1..e_k on F^dim, given by
/// the matrices of the basis elements.
template <FieldElement K>
struct LModule {
  field_of<K> field;
  std::size_t dim = 0;
  std::vector<Matrix<K>> action;

  /// Matrix of sum_a coords[a] * rho(e_a).
  Matrix<K> act(const Vector<K>& coords) const {
    Matrix<K> m(field, dim, dim);
    for (std::size_t a = 0; a < action.size(); ++a)
      if (!coords[a].is_zero()) m = m + coords[a] * action[a];
    return m;
  }
};

/// rho([x, y]) = rho(x) rho(y) - rho(y) rho(x) on all basis pairs.
template <FieldElement K>
bool is_representation(const LieAlgebra<K>& acting, const LModule<K>& m) {
  if (m.action.size() != acting.dim()) return false;
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim) return false;
  for (std::size_t i = 0; i < acting.dim(); ++i)
    for (std::size_t j = i + 1; j < acting.dim(); ++j)
      if (m.act(acting.basis_bracket(i, j)) != commutator(m.action[i], m.action[j])) return false;
  return true;
}

/// Smallest invariant subspace containing s.
template <FieldElement K>
Subspace<K> module_spin(const LModule<K>& m, const Subspace<K>& s) {
  Subspace<K> cur = s;
  while (true) {
    std::vector<Vector<K>> vs = cur.basis_vectors();
    for (const auto& a : m.action)
      for (std::size_t i = 0; i < cur.dim(); ++i) vs.push_back(a.apply(cur.basis_vector(i)));
    auto next = Subspace<K>::span(m.field, m.dim, vs);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// No proper nonzero invariant subspace. Over GF(p) every line is spun; over Q
/// only 1-dimensional modules are decided.
template <FieldElement K>
bool is_irreducible(const LModule<K>& m) {
  if (m.dim == 0) return false;
  if (m.dim == 1) return true;
  if constexpr (!is_finite_field_v<K>) {
    throw UnsupportedField("irreducibility over Q is only decided for 1-dimensional modules");
  } else {
    bool irreducible = true;
    for_each_line<K>(m.field, m.dim, [&](const Vector<K>& v) {
      if (irreducible && module_spin(m, Subspace<K>::span(m.field, m.dim, {v})).dim() != m.dim)
        irreducible = false;
    });
    return irreducible;
  }
}

namespace detail {

/// Last nonzero term of the derived series; an abelian ideal.
template <FieldElement K>
Subspace<K> last_derived_term(const LieAlgebra<K>& L) {
  auto series = derived_series(L);
  if (!series.back().is_zero()) throw NotSoluble();
  return series[series.size() - 2];
}

/// Action of L (by ad) on the ideal `a`, in the canonical basis of a.
template <FieldElement K>
LModule<K> ideal_module(const LieAlgebra<K>& L, const Subspace<K>& a) {
  LModule<K> m{L.field(), a.dim(), {}};
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Matrix<K> rho(L.field(), a.dim(), a.dim());
    auto e = unit_vector<K>(L.field(), L.dim(), i);
    for (std::size_t t = 0; t < a.dim(); ++t) {
      auto col = a.coordinates(L.bracket(e, a.basis_vector(t)));
      for (std::size_t r = 0; r < a.dim(); ++r) rho(r, t) = col[r];
    }
    m.action.push_back(std::move(rho));
  }
  return m;
}

using BigInt = boost::multiprecision::cpp_int;

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1'000'000'000'000LL))
    throw UnsupportedField("characteristic polynomial coefficients too large for rational root search");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Characteristic polynomial det(tI - A), coefficients from constant term up.
inline std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  RationalField f;
  std::vector<Rational> c(n + 1, f.zero());
  c[n] = f.one();
  Matrix<Rational> m(f, n, n);
  const auto id = Matrix<Rational>::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    auto am = a * m;
    Rational tr = f.zero();
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / f.from_int(static_cast<long long>(k));
  }
  return c;
}

/// Distinct rational eigenvalues of a, ascending.
inline std::vector<Rational> rational_eigenvalues(const Matrix<Rational>& a) {
  auto c = characteristic_polynomial(a);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 >= c.size()) return roots;
  // clear denominators
  BigInt l = 1;
  for (const auto& x : c) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(x.value())));
  std::vector<BigInt> ints;
  for (const auto& x : c) ints.push_back(BigInt(boost::multiprecision::numerator(x.value()) * (l / boost::multiprecision::denominator(x.value()))));
  auto eval = [&](const Rational& t) {
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
  };
  for (const auto& num : positive_divisors(ints[low]))
    for (const auto& den : positive_divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational t(Rational::value_type(BigInt(num * sign), den));
        if (eval(t).is_zero() && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// A common eigenvector of all action matrices, if any (over Q).
inline std::optional<Vector<Rational>> common_eigenvector(const LModule<Rational>& m) {
  std::vector<std::vector<Rational>> eigen;
  for (const auto& a : m.action) eigen.push_back(rational_eigenvalues(a));
  const auto id = Matrix<Rational>::identity(m.field, m.dim);
  std::optional<Vector<Rational>> found;
  std::function<void(std::size_t, const Subspace<Rational>&)> search = [&](std::size_t i,
                                                                          const Subspace<Rational>& w) {
    if (found || w.is_zero()) return;
    if (i == m.action.size()) {
      found = w.basis_vector(0);
      return;
    }
    for (const auto& lambda : eigen[i]) {
      search(i + 1, intersect(w, kernel(m.action[i] - lambda * id)));
      if (found) return;
    }
  };
  search(0, Subspace<Rational>::full(m.field, m.dim));
  return found;
}

}  // namespace detail

/// A minimal ideal of a nonzero soluble L, found inside the last nonzero term
/// of the derived series. Over GF(p) every line is spun to an ideal and the
/// smallest spin with lexicographically least canonical basis is returned.
/// Over Q only 1-dimensional minimal ideals (common eigenvectors) are found;
/// otherwise UnsupportedField.
template <FieldElement K>
Ideal<K> minimal_ideal(const LieAlgebra<K>& L) {
  if (L.dim() == 0) throw ZeroAlgebra();
  const auto a0 = detail::last_derived_term(L);
  if constexpr (is_finite_field_v<K>) {
    std::optional<Subspace<K>> best;
    for_each_line<K>(L.field(), a0.dim(), [&](const Vector<K>& coords) {
      auto spin = ideal_closure(L, Subspace<K>::span(L.field(), L.dim(), {a0.combine(coords)})).space();
      if (!best || spin.dim() < best->dim() || (spin.dim() == best->dim() && spin < *best)) best = std::move(spin);
    });
    return Ideal<K>::trusted(std::move(*best));
  } else {
    if (a0.dim() == 1) return Ideal<K>::trusted(a0);
    auto v = detail::common_eigenvector(detail::ideal_module(L, a0));
    if (!v)
      throw UnsupportedField("no 1-dimensional minimal ideal over Q; only supersoluble algebras are supported");
    return Ideal<K>::trusted(Subspace<K>::span(L.field(), L.dim(), {a0.combine(*v)}));
  }
}

/// L (or the subalgebra spanned by `actors`) acting on upper/lower by the
/// bracket, in a basis of the factor lifted through the section of L/lower.
template <FieldElement K>
LModule<K> factor_module(const LieAlgebra<K>& L, const Subspace<K>& upper, const Subspace<K>& lower,
                         const std::vector<Vector<K>>& actors) {
  if (!upper.contains(lower)) throw NotNested();
  const auto proj = quotient_projection(lower);
  const auto sec = quotient_section(lower);
  const auto w = image(proj, upper);
  std::vector<Vector<K>> lifts;
  for (std::size_t t = 0; t < w.dim(); ++t) lifts.push_back(sec.apply(w.basis_vector(t)));
  LModule<K> m{L.field(), w.dim(), {}};
  for (const auto& x : actors) {
    Matrix<K> rho(L.field(), w.dim(), w.dim());
    for (std::size_t t = 0; t < w.dim(); ++t) {
      auto y = proj.apply(L.bracket(x, lifts[t]));
      if (!w.contains(y)) throw NotAnIdeal();
      auto col = w.coordinates(y);
      for (std::size_t r = 0; r < w.dim(); ++r) rho(r, t) = col[r];
    }
    m.action.push_back(std::move(rho));
  }
  return m;
}

template <FieldElement K>
std::vector<Vector<K>> standard_basis(const LieAlgebra<K>& L) {
  std::vector<Vector<K>> out;
  for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(unit_vector<K>(L.field(), L.dim(), i));
  return out;
}

template <FieldElement K>
struct ChiefFactor {
  Ideal<K> lower;
  Ideal<K> upper;
  LModule<K> module;  // L acting on upper/lower
  std::size_t dim() const { return module.dim; }
};

template <FieldElement K>
struct ChiefSeries {
  std::vector<Ideal<K>> terms;  // 0 = I_0 < I_1 < ... < I_k = L
  std::vector<ChiefFactor<K>> factors;
};

namespace detail {
template <FieldElement K>
ChiefSeries<K> complete_chief_series(const LieAlgebra<K>& L, std::vector<Subspace<K>> terms) {
  while (!terms.back().is_full()) {
    auto q = quotient(L, terms.back());
    auto a = minimal_ideal(q.algebra);
    terms.push_back(q.preimage(a.space(), terms.back()));
  }
  ChiefSeries<K> cs;
  const auto basis = standard_basis(L);
  for (auto& t : terms) cs.terms.push_back(Ideal<K>::trusted(t));
  for (std::size_t j = 1; j < terms.size(); ++j)
    cs.factors.push_back({cs.terms[j - 1], cs.terms[j], factor_module(L, terms[j], terms[j - 1], basis)});
  return cs;
}
}  // namespace detail

/// Chief series built from repeated minimal ideals of successive quotients.
template <FieldElement K>
ChiefSeries<K> chief_series(const LieAlgebra<K>& L) {
  return detail::complete_chief_series(L, {zero_subspace(L)});
}

/// A chief series whose first nontrivial term is the given minimal ideal.
template <FieldElement K>
ChiefSeries<K> chief_series_through(const LieAlgebra<K>& L, const Ideal<K>& minimal) {
  return detail::complete_chief_series(L, {zero_subspace(L), minimal.space()});
}

/// Result of a split extension: the acting algebra occupies the first basis
/// vectors, the module (an abelian ideal) the remaining ones.
template <FieldElement K>
struct SplitExtension {
  LieAlgebra<K> result;
  Matrix<K> acting_embedding;  // dim(result) x dim(acting)
  Matrix<K> module_embedding;  // dim(result) x dim(module)
};

namespace detail {
template <FieldElement K>
Matrix<K> block_embedding(const field_of<K>& field, std::size_t total, std::size_t offset, std::size_t width) {
  Matrix<K> m(field, total, width);
  for (std::size_t i = 0; i < width; ++i) m(offset + i, i) = field.one();
  return m;
}
}  // namespace detail

/// acting ⋉ module with [a, v] = rho(a) v and [v, w] = 0.
template <FieldElement K>
SplitExtension<K> split_extension(const LieAlgebra<K>& acting, const LModule<K>& m) {
  if (!is_representation(acting, m)) throw InvalidModule("action matrices do not form a representation");
  const std::size_t k = acting.dim();
  const std::size_t n = k + m.dim;
  LieAlgebra<K> D(acting.field(), n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      auto v = zero_vector<K>(acting.field(), n);
      auto ab = acting.basis_bracket(a, b);
      std::copy(ab.begin(), ab.end(), v.begin());
      D.set_bracket(a, b, v);
    }
    for (std::size_t t = 0; t < m.dim; ++t) {
      auto v = zero_vector<K>(acting.field(), n);
      for (std::size_t r = 0; r < m.dim; ++r) v[k + r] = m.action[a](r, t);
      D.set_bracket(a, k + t, v);
    }
  }
  return {std::move(D), detail::block_embedding<K>(acting.field(), n, 0, k),
          detail::block_embedding<K>(acting.field(), n, k, m.dim)};
}

/// D = <x_d, L>: x_d is basis vector 0, L sits on basis vectors 1..n as an
/// ideal, and [x_d, v] = d(v).
template <FieldElement K>
SplitExtension<K> split_extension_by_derivation(const LieAlgebra<K>& L, const Matrix<K>& d) {
  if (!is_derivation(L, d)) throw NotADerivation();
  const std::size_t n = L.dim();
  LieAlgebra<K> D(L.field(), n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    auto v = zero_vector<K>(L.field(), n + 1);
    for (std::size_t r = 0; r < n; ++r) v[r + 1] = d(r, j);
    D.set_bracket(0, j + 1, v);
    for (std::size_t i = 0; i < j; ++i) {
      auto w = zero_vector<K>(L.field(), n + 1);
      auto b = L.basis_bracket(i, j);
      for (std::size_t r = 0; r < n; ++r) w[r + 1] = b[r];
      D.set_bracket(i + 1, j + 1, w);
    }
  }
  D.set_labels({});
  return {std::move(D), detail::block_embedding<K>(L.field(), n + 1, 0, 1),
          detail::block_embedding<K>(L.field(), n + 1, 1, n)};
}

/// U + B ⊇ A
template <FieldElement K>
bool covers(const Subspace<K>& u, const ChiefFactor<K>& f) {
  return sum(u, f.lower.space()).contains(f.upper.space());
}

/// U ∩ A ⊆ B
template <FieldElement K>
bool avoids(const Subspace<K>& u, const ChiefFactor<K>& f) {
  return f.lower.space().contains(intersect(u, f.upper.space()));
}

/// Intersection of the centralisers of the factors of a chief series.
template <FieldElement K>
Ideal<K> nilradical(const LieAlgebra<K>& L, const ChiefSeries<K>& cs) {
  Subspace<K> n = whole(L);
  for (const auto& f : cs.factors) n = intersect(n, centralizer_of_factor(L, f.upper, f.lower).space());
  return Ideal<K>::trusted(std::move(n));
}

template <FieldElement K>
Ideal<K> nilradical(const LieAlgebra<K>& L) {
  return nilradical(L, chief_series(L));
}

/// M is a maximal subalgebra of L iff it complements the first factor A/B of a
/// chief series with A ⊄ M: M + A = L and M ∩ A = B.
template <FieldElement K>
bool is_maximal_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& m, const ChiefSeries<K>& cs) {
  if (!is_subalgebra(L, m) || m.is_full()) return false;
  for (const auto& f : cs.factors) {
    if (m.contains(f.upper.space())) continue;
    return sum(m, f.upper.space()).is_full() && intersect(m, f.upper.space()) == f.lower.space();
  }
  return false;
}

template <FieldElement K>
bool is_maximal_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& m) {
  return is_maximal_subalgebra(L, m, chief_series(L));
}

}  // namespace lieform
