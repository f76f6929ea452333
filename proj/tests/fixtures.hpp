#pragma once

// Small algebras used across the unit tests.

#include <random>
#include <string>
#include <vector>

#include "lieform/lieform.hpp"

namespace lieform::testing {

template <FieldElement K>
Vector<K> vec(const field_of<K>& f, std::initializer_list<long long> xs) {
  Vector<K> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

template <FieldElement K>
Subspace<K> span_of(const field_of<K>& f, std::size_t n, std::initializer_list<std::initializer_list<long long>> vs) {
  std::vector<Vector<K>> out;
  for (auto v : vs) out.push_back(vec<K>(f, v));
  return Subspace<K>::span(f, n, out);
}

template <FieldElement K>
Matrix<K> mat(const field_of<K>& f, std::size_t cols, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vector<K>> out;
  for (auto r : rows) out.push_back(vec<K>(f, r));
  return Matrix<K>::from_rows(f, cols, out);
}

/// Basis x, y with [x, y] = y.
template <FieldElement K>
LieAlgebra<K> r2(const field_of<K>& f) {
  LieAlgebra<K> L(f, 2);
  L.set_bracket(0, 1, vec<K>(f, {0, 1}));
  return L;
}

/// Heisenberg: [e1, e2] = e3.
template <FieldElement K>
LieAlgebra<K> h3(const field_of<K>& f) {
  LieAlgebra<K> L(f, 3);
  L.set_bracket(0, 1, vec<K>(f, {0, 0, 1}));
  return L;
}

/// r2 ⊕ F on basis x, y, z: [x, y] = y, z central.
template <FieldElement K>
LieAlgebra<K> r2_plus_line(const field_of<K>& f) {
  LieAlgebra<K> L(f, 3);
  L.set_bracket(0, 1, vec<K>(f, {0, 1, 0}));
  return L;
}

/// [e1, e2] = e3, [e1, e3] = e2, [e2, e3] = e1: satisfies Jacobi, not soluble over Q.
inline LieAlgebra<Rational> so3_like() {
  RationalField f;
  LieAlgebra<Rational> L(f, 3);
  L.set_bracket(0, 1, vec<Rational>(f, {0, 0, 1}));
  L.set_bracket(0, 2, vec<Rational>(f, {0, 1, 0}));
  L.set_bracket(1, 2, vec<Rational>(f, {1, 0, 0}));
  return L;
}

/// sl2 on e, h, f.
inline LieAlgebra<Rational> sl2() {
  RationalField f;
  LieAlgebra<Rational> L(f, 3);
  L.set_bracket(0, 1, vec<Rational>(f, {-2, 0, 0}));
  L.set_bracket(0, 2, vec<Rational>(f, {0, 1, 0}));
  L.set_bracket(1, 2, vec<Rational>(f, {0, 0, -2}));
  return L;
}

inline ModP random_scalar(const PrimeField& f, std::mt19937_64& rng) { return f.element(rng() % f.order()); }

inline Rational random_scalar(const RationalField&, std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 11) - 5;
  long long den = static_cast<long long>(rng() % 4) + 1;
  return Rational(Rational::value_type(num, den));
}

template <class F>
auto random_matrix(const F& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, double zero_bias = 0.3) {
  Matrix<decltype(f.zero())> m(f, rows, cols);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) >= zero_bias) m(r, c) = random_scalar(f, rng);
  return m;
}

template <class F>
auto random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
  Vector<decltype(f.zero())> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

/// Small universe of algebras over GF(p) used by property tests.
inline std::vector<EnumeratedAlgebra> small_universe(std::uint32_t p, std::size_t max_dim,
                                                     std::optional<std::uint64_t> cap = 200) {
  return enumerate_soluble({max_dim, {FieldSpec::prime(p)}, cap, 1});
}

}  // namespace lieform::testing
