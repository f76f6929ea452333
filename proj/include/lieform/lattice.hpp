#pragma once

// Exhaustive enumeration over finite prime fields: vectors, lines, all
// subspaces of F_p^n (one reduced echelon basis each), and the subalgebras
// and ideals of an algebra.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "lieform/lie_algebra.hpp"

namespace lieform {

/// Largest number of subspaces enumerate_subspaces will walk.
inline constexpr std::uint64_t kSubspaceBudget = 250000;

namespace detail {

template <FieldElement K>
void require_finite(const char* what) {
  if constexpr (!is_finite_field_v<K>)
    throw UnsupportedField(std::string(what) + " requires a finite prime field");
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Calls fn(mask) for every subset of {0..n-1} of size k, in increasing order of
// the sorted index lists.
inline void for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Positions (row, col) of the free entries of an echelon basis with the given
// pivot columns.
inline std::vector<std::pair<std::size_t, std::size_t>> free_positions(
    std::size_t n, const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) out.emplace_back(r, c);
  return out;
}

}  // namespace detail

/// Every vector of F_p^n, in odometer order (first coordinate fastest).
template <FieldElement K>
void for_each_vector(const field_of<K>& field, std::size_t n, const std::function<void(const Vector<K>&)>& fn) {
  detail::require_finite<K>("vector enumeration");
  if constexpr (is_finite_field_v<K>) {
    std::vector<std::uint64_t> digits(n, 0);
    auto v = zero_vector<K>(field, n);
    const std::uint64_t p = field.order();
    while (true) {
      fn(v);
      std::size_t i = 0;
      while (i < n && digits[i] == p - 1) {
        digits[i] = 0;
        v[i] = field.zero();
        ++i;
      }
      if (i == n) return;
      ++digits[i];
      v[i] = field.element(digits[i]);
    }
  }
}

/// One representative per 1-dim subspace: nonzero vectors whose first nonzero
/// coordinate is 1.
template <FieldElement K>
void for_each_line(const field_of<K>& field, std::size_t n, const std::function<void(const Vector<K>&)>& fn) {
  for_each_vector<K>(field, n, [&](const Vector<K>& v) {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      if (x.is_one()) fn(v);
      return;
    }
  });
}

/// Number of subspaces of F_p^n, counted from echelon shapes.
inline std::uint64_t count_subspaces(std::uint64_t p, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k)
    detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& pivots) {
      auto c = detail::checked_pow(p, detail::free_positions(n, pivots).size());
      total = (c == UINT64_MAX || total > UINT64_MAX - c) ? UINT64_MAX : total + c;
    });
  return total;
}

/// Every subspace of F_p^n exactly once. Raises BudgetExceeded when there are
/// more than kSubspaceBudget of them.
template <FieldElement K>
void for_each_subspace(const field_of<K>& field, std::size_t n,
                       const std::function<void(const Subspace<K>&)>& fn) {
  detail::require_finite<K>("subspace enumeration");
  if constexpr (is_finite_field_v<K>) {
    if (count_subspaces(field.order(), n) > kSubspaceBudget)
      throw BudgetExceeded("too many subspaces of " + field.spec().to_string() + "^" + std::to_string(n));
    const std::uint64_t p = field.order();
    for (std::size_t k = 0; k <= n; ++k)
      detail::for_each_combination(n, k, [&](const std::vector<std::size_t>& pivots) {
        auto free = detail::free_positions(n, pivots);
        Matrix<K> m(field, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = field.one();
        std::vector<std::uint64_t> digits(free.size(), 0);
        while (true) {
          fn(Subspace<K>(m));
          std::size_t i = 0;
          while (i < free.size() && digits[i] == p - 1) {
            digits[i] = 0;
            m(free[i].first, free[i].second) = field.zero();
            ++i;
          }
          if (i == free.size()) break;
          ++digits[i];
          m(free[i].first, free[i].second) = field.element(digits[i]);
        }
      });
  }
}

template <FieldElement K>
std::vector<Subspace<K>> enumerate_subspaces(const field_of<K>& field, std::size_t n) {
  std::vector<Subspace<K>> out;
  for_each_subspace<K>(field, n, [&](const Subspace<K>& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

/// All subalgebras of L, sorted canonically (by dimension, then basis).
template <FieldElement K>
std::vector<Subalgebra<K>> enumerate_subalgebras(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> found;
  for_each_subspace<K>(L.field(), L.dim(), [&](const Subspace<K>& s) {
    if (is_subalgebra(L, s)) found.push_back(s);
  });
  std::sort(found.begin(), found.end());
  std::vector<Subalgebra<K>> out;
  for (auto& s : found) out.push_back(Subalgebra<K>::trusted(std::move(s)));
  return out;
}

/// All ideals of L, sorted canonically.
template <FieldElement K>
std::vector<Ideal<K>> enumerate_ideals(const LieAlgebra<K>& L) {
  std::vector<Subspace<K>> found;
  for_each_subspace<K>(L.field(), L.dim(), [&](const Subspace<K>& s) {
    if (is_ideal(L, s)) found.push_back(s);
  });
  std::sort(found.begin(), found.end());
  std::vector<Ideal<K>> out;
  for (auto& s : found) out.push_back(Ideal<K>::trusted(std::move(s)));
  return out;
}

/// Minimal nonzero ideals, by brute force over enumerate_ideals.
template <FieldElement K>
std::vector<Ideal<K>> enumerate_minimal_ideals(const LieAlgebra<K>& L) {
  auto ideals = enumerate_ideals(L);
  std::vector<Ideal<K>> out;
  for (const auto& a : ideals) {
    if (a.space().is_zero()) continue;
    bool minimal = true;
    for (const auto& b : ideals)
      if (!b.space().is_zero() && b.dim() < a.dim() && a.space().contains(b.space())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace lieform
