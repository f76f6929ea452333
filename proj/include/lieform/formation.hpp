#pragma once

// Formations given by membership predicates, F-central chief factors,
// F-normal / F-abnormal / F-critical maximal subalgebras, F-normalisers by
// critical chains, the cover/avoid check and a brute-force projector test.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieform/chief.hpp"

namespace lieform {

template <FieldElement K>
struct Formation {
  std::string name;
  std::function<bool(const LieAlgebra<K>&)> membership;

  bool contains(const LieAlgebra<K>& L) const { return membership(L); }
};

namespace formations {

template <FieldElement K>
Formation<K> nilpotent() {
  return {"nilpotent", [](const LieAlgebra<K>& L) { return is_nilpotent(L); }};
}

template <FieldElement K>
Formation<K> all_soluble() {
  return {"soluble", [](const LieAlgebra<K>&) { return true; }};
}

/// Every chief factor 1-dimensional. Over Q a factor of larger dimension
/// surfaces as UnsupportedField from chief_series.
template <FieldElement K>
Formation<K> supersoluble() {
  return {"supersoluble", [](const LieAlgebra<K>& L) {
            if (L.dim() == 0) return true;
            for (const auto& f : chief_series(L).factors)
              if (f.dim() != 1) return false;
            return true;
          }};
}

/// "nilpotent", "supersoluble" or "soluble" (alias "all-soluble").
template <FieldElement K>
Formation<K> by_name(std::string_view name) {
  if (name == "nilpotent") return nilpotent<K>();
  if (name == "supersoluble") return supersoluble<K>();
  if (name == "soluble" || name == "all-soluble" || name == "allsoluble") return all_soluble<K>();
  throw ParseError("unknown formation: '" + std::string(name) + "'");
}

}  // namespace formations

template <FieldElement K>
bool is_member(const Formation<K>& F, const LieAlgebra<K>& L) {
  return F.contains(L);
}

/// Membership of the subalgebra U of L, as an algebra.
template <FieldElement K>
bool is_member(const Formation<K>& F, const LieAlgebra<K>& L, const Subspace<K>& u) {
  return F.contains(restrict_to(L, u).algebra);
}

namespace detail {

/// Membership of the split extension of a module by acting/C, where C is an
/// ideal of the acting algebra that acts trivially.
template <FieldElement K>
bool factor_extension_in(const Formation<K>& F, const LieAlgebra<K>& acting, const LModule<K>& m,
                         const Subspace<K>& kernel_ideal) {
  auto q = quotient(acting, kernel_ideal);
  LModule<K> induced{m.field, m.dim, {}};
  for (std::size_t a = 0; a < q.algebra.dim(); ++a) induced.action.push_back(m.act(q.section.column(a)));
  return F.contains(split_extension(q.algebra, induced).result);
}

/// Complement criterion for the maximal M against factor f: M acting on
/// A/B modulo C_M(A/B).
template <FieldElement K>
bool complement_central(const LieAlgebra<K>& L, const Subspace<K>& m, const ChiefFactor<K>& f,
                        const Formation<K>& F) {
  auto r = restrict_to(L, m);
  auto module = factor_module(L, f.upper.space(), f.lower.space(), m.basis_vectors());
  auto c_m = intersect(centralizer_of_factor(L, f.upper, f.lower).space(), m);
  return factor_extension_in(F, r.algebra, module, r.to_local(c_m));
}

}  // namespace detail

/// The split extension of A/B by L/C_L(A/B) lies in F.
template <FieldElement K>
bool is_f_central(const LieAlgebra<K>& L, const ChiefFactor<K>& f, const Formation<K>& F) {
  return detail::factor_extension_in(F, L, f.module, centralizer_of_factor(L, f.upper, f.lower).space());
}

/// Maximal elements of the proper subalgebras, in canonical order.
template <FieldElement K>
std::vector<Subalgebra<K>> maximal_subalgebras(const LieAlgebra<K>& L) {
  auto subs = enumerate_subalgebras(L);
  std::vector<Subalgebra<K>> out;
  for (const auto& m : subs) {
    if (m.space().is_full()) continue;
    bool maximal = true;
    for (const auto& s : subs)
      if (!s.space().is_full() && s.dim() > m.dim() && s.space().contains(m.space())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  return out;
}

enum class Verdict { FNormal, FAbnormal };

inline const char* to_string(Verdict v) { return v == Verdict::FNormal ? "normal" : "abnormal"; }

template <FieldElement K>
struct MaximalClassification {
  Subspace<K> subalgebra;
  Verdict verdict;
  std::optional<ChiefFactor<K>> witness;  // complemented F-central factor when FNormal
};

/// Classifies the maximal subalgebra M by L/core(M) ∈ F and cross-checks the
/// verdict against the complemented-chief-factor criterion on `cs`.
template <FieldElement K>
MaximalClassification<K> classify_maximal(const LieAlgebra<K>& L, const Subspace<K>& m, const Formation<K>& F,
                                          const ChiefSeries<K>& cs) {
  const bool by_core = F.contains(quotient(L, core(L, m)).algebra);
  std::optional<ChiefFactor<K>> witness;
  for (const auto& f : cs.factors) {
    if (!sum(m, f.upper.space()).is_full() || intersect(m, f.upper.space()) != f.lower.space()) continue;
    if (detail::complement_central(L, m, f, F)) {
      witness = f;
      break;
    }
  }
  if (by_core != witness.has_value())
    throw CriteriaDisagree("core criterion says " + std::string(by_core ? "normal" : "abnormal") +
                           " but complement criterion disagrees for " + to_string(m));
  return {m, by_core ? Verdict::FNormal : Verdict::FAbnormal, std::move(witness)};
}

template <FieldElement K>
MaximalClassification<K> classify_maximal(const LieAlgebra<K>& L, const Subspace<K>& m, const Formation<K>& F) {
  return classify_maximal(L, m, F, chief_series(L));
}

/// F-abnormal and M + N(L) = L.
template <FieldElement K>
bool is_f_critical(const LieAlgebra<K>& L, const Subspace<K>& m, const Formation<K>& F, const ChiefSeries<K>& cs,
                   const Subspace<K>& nil) {
  return classify_maximal(L, m, F, cs).verdict == Verdict::FAbnormal && sum(m, nil).is_full();
}

template <FieldElement K>
bool is_f_critical(const LieAlgebra<K>& L, const Subspace<K>& m, const Formation<K>& F) {
  auto cs = chief_series(L);
  auto nil = nilradical(L, cs);
  return is_f_critical(L, m, F, cs, nil.space());
}

/// L = M_0 > M_1 > ... > M_n = V, all in coordinates of L.
template <FieldElement K>
struct NormaliserChain {
  std::vector<Subspace<K>> members;

  std::size_t steps() const { return members.empty() ? 0 : members.size() - 1; }
  const Subspace<K>& result() const { return members.back(); }
};

template <FieldElement K>
struct NormaliserResult {
  Subspace<K> normaliser;
  NormaliserChain<K> chain;
};

namespace detail {

template <FieldElement K>
std::map<Subspace<K>, NormaliserChain<K>> normaliser_search(const LieAlgebra<K>& L, const Formation<K>& F) {
  std::map<Subspace<K>, NormaliserChain<K>> found;
  const auto all = whole(L);
  if (F.contains(L)) {
    found.emplace(all, NormaliserChain<K>{{all}});
    return found;
  }
  const auto cs = chief_series(L);
  const auto nil = nilradical(L, cs);
  bool descended = false;
  for (const auto& m : maximal_subalgebras(L)) {
    if (!is_f_critical(L, m.space(), F, cs, nil.space())) continue;
    descended = true;
    auto r = restrict_to(L, m.space());
    for (const auto& [v, chain] : normaliser_search(r.algebra, F)) {
      auto v_parent = r.to_parent(v);
      if (found.count(v_parent)) continue;
      NormaliserChain<K> lifted{{all}};
      for (const auto& s : chain.members) lifted.members.push_back(r.to_parent(s));
      found.emplace(std::move(v_parent), std::move(lifted));
    }
  }
  if (!descended)
    throw NoCriticalDescent("algebra lies outside the " + F.name + " formation but has no critical maximal subalgebra");
  return found;
}

}  // namespace detail

/// Every V ∈ F at the end of a chain of F-critical maximal subalgebras,
/// deduplicated and in canonical order, each with one witnessing chain.
template <FieldElement K>
std::vector<NormaliserResult<K>> f_normalisers(const LieAlgebra<K>& L, const Formation<K>& F) {
  detail::require_finite<K>("normaliser computation");
  std::vector<NormaliserResult<K>> out;
  for (auto& [v, chain] : detail::normaliser_search(L, F)) out.push_back({v, std::move(chain)});
  return out;
}

struct ChainVerdict {
  bool ok = true;
  std::size_t step = 0;  // first failing member index when !ok
  std::string reason;
};

/// Checks a user-supplied chain step by step. Works over any field on which
/// chief series can be computed (maximality is decided via complemented chief
/// factors, not enumeration).
template <FieldElement K>
ChainVerdict verify_chain(const LieAlgebra<K>& L, const NormaliserChain<K>& chain, const Formation<K>& F) {
  if (chain.members.empty()) return {false, 0, "empty chain"};
  if (chain.members.front() != whole(L)) return {false, 0, "chain does not start at L"};
  for (std::size_t i = 1; i < chain.members.size(); ++i) {
    const auto& parent = chain.members[i - 1];
    const auto& child = chain.members[i];
    if (child.ambient_dim() != L.dim()) return {false, i, "member lives in the wrong ambient space"};
    if (!parent.contains(child) || child == parent) return {false, i, "member is not a proper subspace of its predecessor"};
    if (!is_subalgebra(L, child)) return {false, i, "member is not a subalgebra"};
    auto r = restrict_to(L, parent);
    auto local = r.to_local(child);
    auto cs = chief_series(r.algebra);
    if (!is_maximal_subalgebra(r.algebra, local, cs)) return {false, i, "member is not maximal in its predecessor"};
    auto nil = nilradical(r.algebra, cs);
    if (!is_f_critical(r.algebra, local, F, cs, nil.space())) return {false, i, "member is not critical in its predecessor"};
  }
  if (!is_member(F, L, chain.result()))
    return {false, chain.members.size() - 1, "final member is not in the formation"};
  return {};
}

struct CoverAvoidEntry {
  std::size_t index = 0;  // factor position, bottom = 0
  std::size_t dim = 0;
  bool central = false;
  bool covers = false;
  bool avoids = false;
  bool ok() const { return central ? covers : avoids; }
};

struct CoverAvoidReport {
  std::vector<CoverAvoidEntry> entries;
  bool passed() const {
    for (const auto& e : entries)
      if (!e.ok()) return false;
    return true;
  }
};

/// U must cover every F-central factor and avoid every F-eccentric one.
template <FieldElement K>
CoverAvoidReport cover_avoid_check(const LieAlgebra<K>& L, const Subspace<K>& u, const Formation<K>& F,
                                   const ChiefSeries<K>& cs) {
  CoverAvoidReport report;
  for (std::size_t i = 0; i < cs.factors.size(); ++i) {
    const auto& f = cs.factors[i];
    report.entries.push_back({i, f.dim(), is_f_central(L, f, F), covers(u, f), avoids(u, f)});
  }
  return report;
}

template <FieldElement K>
CoverAvoidReport cover_avoid_check(const LieAlgebra<K>& L, const Subspace<K>& u, const Formation<K>& F) {
  return cover_avoid_check(L, u, F, chief_series(L));
}

/// Brute force: U ∈ F and for every ideal I, (U + I)/I is a maximal
/// F-subalgebra of L/I.
template <FieldElement K>
bool is_f_projector(const LieAlgebra<K>& L, const Subspace<K>& u, const Formation<K>& F) {
  detail::require_finite<K>("projector check");
  if (!is_member(F, L, u)) return false;
  for (const auto& ideal : enumerate_ideals(L)) {
    auto q = quotient(L, ideal);
    auto w = q.image(u);
    if (!is_member(F, q.algebra, w)) return false;
    for (const auto& s : enumerate_subalgebras(q.algebra)) {
      if (s.dim() <= w.dim() || !s.space().contains(w)) continue;
      if (is_member(F, q.algebra, s.space())) return false;
    }
  }
  return true;
}

}  // namespace lieform
