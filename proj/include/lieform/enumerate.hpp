#pragma once

// Generation of soluble Lie algebras over prime fields by iterated
// one-dimensional split extensions.
//
// Every soluble algebra of dimension k+1 has a codimension-1 ideal (any
// hyperplane through [L, L]), hence is <d, K> for some soluble K of dimension
// k and derivation d. Walking all derivations of all algebras of the previous
// level therefore reaches every isomorphism type, with repetition.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lieform/derivations.hpp"

namespace lieform {

struct EnumerationBudget {
  std::size_t max_dim = 1;
  std::vector<FieldSpec> fields;
  /// Derivations taken per parent algebra; when the derivation algebra has more
  /// elements a deterministic sample of this size is drawn.
  std::optional<std::uint64_t> per_step_cap;
  std::uint64_t seed = 0;
};

struct EnumeratedAlgebra {
  LieAlgebra<ModP> algebra;
  /// "GF(p):parent/derivation-index" path from the 1-dimensional root, e.g. "GF(2):0/3/1".
  std::string tag;
};

namespace detail {

/// Indices into the p^m derivations of a parent, ascending.
inline std::vector<std::uint64_t> derivation_indices(std::uint64_t count, std::optional<std::uint64_t> cap,
                                                     std::uint64_t seed, std::uint64_t parent_ordinal) {
  std::vector<std::uint64_t> out;
  if (!cap || count <= *cap) {
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(i);
    return out;
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + parent_ordinal);
  std::set<std::uint64_t> picked;
  while (picked.size() < *cap) picked.insert(rng() % count);
  return {picked.begin(), picked.end()};
}

inline Vector<ModP> digits_of(const PrimeField& field, std::uint64_t index, std::size_t m) {
  Vector<ModP> c;
  for (std::size_t s = 0; s < m; ++s) {
    c.push_back(field.element(index % field.order()));
    index /= field.order();
  }
  return c;
}

}  // namespace detail

/// Visits every algebra of the stream in order: dimension 1, then 2, ...,
/// then max_dim, for each field of the budget in turn.
inline void for_each_soluble(const EnumerationBudget& budget,
                             const std::function<void(const EnumeratedAlgebra&)>& visit) {
  if (budget.max_dim < 1) throw ParseError("max_dim must be at least 1");
  if (budget.per_step_cap && *budget.per_step_cap == 0) throw ParseError("per_step_cap must be positive");
  for (const auto& spec : budget.fields) {
    if (!spec.is_prime_field()) throw UnsupportedField("algebra enumeration requires a prime field");
    PrimeField field(spec.p);
    std::vector<EnumeratedAlgebra> level{{LieAlgebra<ModP>(field, 1), spec.to_string() + ":0"}};
    visit(level.front());
    for (std::size_t dim = 2; dim <= budget.max_dim; ++dim) {
      std::vector<EnumeratedAlgebra> next;
      const bool last = dim == budget.max_dim;
      for (std::uint64_t parent = 0; parent < level.size(); ++parent) {
        const auto& K = level[parent];
        auto der = derivation_algebra(K.algebra);
        auto count = detail::checked_pow(field.order(), der.dim());
        for (auto idx : detail::derivation_indices(count, budget.per_step_cap, budget.seed, parent)) {
          auto d = der.combine(detail::digits_of(field, idx, der.dim()));
          EnumeratedAlgebra child{split_extension_by_derivation(K.algebra, d).result,
                                  K.tag + "/" + std::to_string(idx)};
          require_valid(child.algebra);
          visit(child);
          if (!last) next.push_back(std::move(child));
        }
      }
      level = std::move(next);
    }
  }
}

inline std::vector<EnumeratedAlgebra> enumerate_soluble(const EnumerationBudget& budget) {
  std::vector<EnumeratedAlgebra> out;
  for_each_soluble(budget, [&](const EnumeratedAlgebra& a) { out.push_back(a); });
  return out;
}

}  // namespace lieform
