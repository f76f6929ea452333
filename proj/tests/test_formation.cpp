#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace lieform;
using namespace lieform::testing;

namespace {

using F2 = Formation<ModP>;

// Largest ideal inside m, by enumeration.
Subspace<ModP> core_oracle(const LieAlgebra<ModP>& L, const Subspace<ModP>& m) {
  Subspace<ModP> best = zero_subspace(L);
  for (const auto& I : enumerate_ideals(L))
    if (m.contains(I.space()) && I.dim() > best.dim()) best = I.space();
  return best;
}

Subspace<ModP> nilradical_oracle(const LieAlgebra<ModP>& L) {
  Subspace<ModP> best = zero_subspace(L);
  for (const auto& I : enumerate_ideals(L))
    if (is_nilpotent(restrict_to(L, I.space()).algebra) && I.dim() > best.dim()) best = I.space();
  return best;
}

// Normalisers by definition: descend through every maximal subalgebra M with
// L/core(M) outside F and M + N(L) = L, until an algebra in F is reached.
void normaliser_oracle(const LieAlgebra<ModP>& L, const F2& F, const Subspace<ModP>& here,
                       std::set<Subspace<ModP>>& out) {
  auto r = restrict_to(L, here);
  const auto& A = r.algebra;
  if (F.contains(A)) {
    out.insert(here);
    return;
  }
  auto nil = nilradical_oracle(A);
  for (const auto& m : maximal_subalgebras(A)) {
    if (F.contains(quotient(A, core_oracle(A, m.space())).algebra)) continue;
    if (!sum(m.space(), nil).is_full()) continue;
    normaliser_oracle(L, F, r.to_parent(m.space()), out);
  }
}

std::set<Subspace<ModP>> normalisers_by_definition(const LieAlgebra<ModP>& L, const F2& F) {
  std::set<Subspace<ModP>> out;
  normaliser_oracle(L, F, whole(L), out);
  return out;
}

std::vector<F2> all_formations() {
  return {formations::nilpotent<ModP>(), formations::all_soluble<ModP>(), formations::supersoluble<ModP>()};
}

}  // namespace

TEST(Formations, MembershipTable) {
  PrimeField f3(3);
  auto nil = formations::nilpotent<ModP>();
  auto sol = formations::all_soluble<ModP>();
  auto sup = formations::supersoluble<ModP>();
  auto r = r2<ModP>(f3);
  auto h = h3<ModP>(f3);
  EXPECT_FALSE(is_member(nil, r));
  EXPECT_TRUE(is_member(sup, r));
  EXPECT_TRUE(is_member(sol, r));
  EXPECT_TRUE(is_member(nil, h));
  EXPECT_TRUE(is_member(sup, h));
  EXPECT_TRUE(is_member(nil, r, span_of<ModP>(f3, 2, {{1, 0}})));
  EXPECT_EQ(formations::by_name<ModP>("soluble").name, "soluble");
  EXPECT_EQ(formations::by_name<ModP>("all-soluble").name, "soluble");
  EXPECT_THROW(formations::by_name<ModP>("abelian"), ParseError);
}

TEST(Formations, CentralFactorsOfR2) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto cs = chief_series(r);
  auto nil = formations::nilpotent<ModP>();
  EXPECT_FALSE(is_f_central(r, cs.factors[0], nil));
  EXPECT_TRUE(is_f_central(r, cs.factors[1], nil));
  auto sup = formations::supersoluble<ModP>();
  EXPECT_TRUE(is_f_central(r, cs.factors[0], sup));
}

TEST(Maximal, Counts) {
  PrimeField f3(3), f2(2);
  EXPECT_EQ(maximal_subalgebras(r2<ModP>(f3)).size(), 4u);
  EXPECT_EQ(maximal_subalgebras(LieAlgebra<ModP>(f2, 2)).size(), 3u);
}

TEST(Maximal, ClassificationOfR2) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto nil = formations::nilpotent<ModP>();
  auto y = span_of<ModP>(f3, 2, {{0, 1}});
  auto x = span_of<ModP>(f3, 2, {{1, 0}});
  EXPECT_EQ(classify_maximal(r, y, nil).verdict, Verdict::FNormal);
  EXPECT_TRUE(classify_maximal(r, y, nil).witness.has_value());
  EXPECT_EQ(classify_maximal(r, x, nil).verdict, Verdict::FAbnormal);
  EXPECT_TRUE(is_f_critical(r, x, nil));
  EXPECT_FALSE(is_f_critical(r, y, nil));
}

TEST(Normalisers, R2OverGF3) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto res = f_normalisers(r, formations::nilpotent<ModP>());
  ASSERT_EQ(res.size(), 3u);
  for (std::uint64_t c = 0; c < 3; ++c) {
    EXPECT_EQ(res[c].normaliser, span_of<ModP>(f3, 2, {{1, static_cast<long long>(c)}}));
    EXPECT_EQ(res[c].chain.steps(), 1u);
  }
  auto sup = f_normalisers(r, formations::supersoluble<ModP>());
  ASSERT_EQ(sup.size(), 1u);
  EXPECT_TRUE(sup[0].normaliser.is_full());
}

TEST(Normalisers, NilpotentAlgebraIsItsOwnNormaliser) {
  PrimeField f2(2);
  auto h = h3<ModP>(f2);
  auto res = f_normalisers(h, formations::nilpotent<ModP>());
  ASSERT_EQ(res.size(), 1u);
  EXPECT_TRUE(res[0].normaliser.is_full());
  EXPECT_EQ(res[0].chain.steps(), 0u);
}

TEST(Normalisers, RationalFieldIsUnsupported) {
  RationalField q;
  EXPECT_THROW(f_normalisers(r2<Rational>(q), formations::nilpotent<Rational>()), UnsupportedField);
}

TEST(VerifyChain, AcceptsAndRejects) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto nil = formations::nilpotent<ModP>();
  auto all = whole(r);
  EXPECT_TRUE(verify_chain(r, NormaliserChain<ModP>{{all, span_of<ModP>(f3, 2, {{1, 2}})}}, nil).ok);
  auto normal = verify_chain(r, NormaliserChain<ModP>{{all, span_of<ModP>(f3, 2, {{0, 1}})}}, nil);
  EXPECT_FALSE(normal.ok);
  EXPECT_EQ(normal.step, 1u);
  EXPECT_FALSE(verify_chain(r, NormaliserChain<ModP>{{all}}, nil).ok);
  EXPECT_FALSE(verify_chain(r, NormaliserChain<ModP>{{all, zero_subspace(r)}}, nil).ok);
  EXPECT_FALSE(verify_chain(r, NormaliserChain<ModP>{}, nil).ok);
  EXPECT_FALSE(verify_chain(r, NormaliserChain<ModP>{{span_of<ModP>(f3, 2, {{1, 0}})}}, nil).ok);
}

TEST(VerifyChain, RationalField) {
  RationalField q;
  auto r = r2<Rational>(q);
  auto nil = formations::nilpotent<Rational>();
  EXPECT_TRUE(verify_chain(r, NormaliserChain<Rational>{{whole(r), span_of<Rational>(q, 2, {{2, 7}})}}, nil).ok);
  EXPECT_FALSE(verify_chain(r, NormaliserChain<Rational>{{whole(r), span_of<Rational>(q, 2, {{0, 1}})}}, nil).ok);
}

TEST(Projector, Examples) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto nil = formations::nilpotent<ModP>();
  EXPECT_TRUE(is_f_projector(r, span_of<ModP>(f3, 2, {{1, 0}}), nil));
  EXPECT_TRUE(is_f_projector(r, span_of<ModP>(f3, 2, {{1, 1}}), nil));
  EXPECT_FALSE(is_f_projector(r, zero_subspace(r), nil));
  EXPECT_FALSE(is_f_projector(r, span_of<ModP>(f3, 2, {{0, 1}}), nil));
  EXPECT_FALSE(is_f_projector(r, whole(r), nil));
  EXPECT_TRUE(is_f_projector(r, whole(r), formations::supersoluble<ModP>()));
}

TEST(CoverAvoid, R2Normalisers) {
  PrimeField f3(3);
  auto r = r2<ModP>(f3);
  auto nil = formations::nilpotent<ModP>();
  auto rep = cover_avoid_check(r, span_of<ModP>(f3, 2, {{1, 1}}), nil);
  ASSERT_EQ(rep.entries.size(), 2u);
  EXPECT_FALSE(rep.entries[0].central);
  EXPECT_TRUE(rep.entries[0].avoids);
  EXPECT_TRUE(rep.entries[1].central);
  EXPECT_TRUE(rep.entries[1].covers);
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(cover_avoid_check(r, span_of<ModP>(f3, 2, {{0, 1}}), nil).passed());
}

TEST(FormationProperty, QuotientClosed) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& e : small_universe(p, 3))
      for (const auto& F : all_formations()) {
        if (!F.contains(e.algebra)) continue;
        for (const auto& I : enumerate_ideals(e.algebra))
          EXPECT_TRUE(F.contains(quotient(e.algebra, I).algebra)) << e.tag << " " << F.name;
      }
}

TEST(FormationProperty, ClassificationMatchesCoreOracle) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& e : small_universe(p, 3)) {
      auto cs = chief_series(e.algebra);
      for (const auto& F : all_formations())
        for (const auto& m : maximal_subalgebras(e.algebra)) {
          auto c = classify_maximal(e.algebra, m.space(), F, cs);
          bool normal = F.contains(quotient(e.algebra, core_oracle(e.algebra, m.space())).algebra);
          EXPECT_EQ(c.verdict == Verdict::FNormal, normal) << e.tag << " " << F.name;
        }
    }
}

TEST(FormationProperty, NormalisersMatchDefinition) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& e : small_universe(p, 3))
      for (const auto& F : all_formations()) {
        std::set<Subspace<ModP>> got;
        for (const auto& res : f_normalisers(e.algebra, F)) {
          got.insert(res.normaliser);
          EXPECT_TRUE(verify_chain(e.algebra, res.chain, F).ok) << e.tag;
          EXPECT_EQ(res.chain.result(), res.normaliser);
          EXPECT_TRUE(is_member(F, e.algebra, res.normaliser));
          EXPECT_TRUE(cover_avoid_check(e.algebra, res.normaliser, F).passed()) << e.tag;
        }
        EXPECT_EQ(got, normalisers_by_definition(e.algebra, F)) << e.tag << " " << F.name;
      }
}

TEST(FormationProperty, SolubleFormationNormaliserIsWhole) {
  for (const auto& e : small_universe(2, 3)) {
    auto res = f_normalisers(e.algebra, formations::all_soluble<ModP>());
    ASSERT_EQ(res.size(), 1u);
    EXPECT_TRUE(res[0].normaliser.is_full());
  }
}

TEST(FormationExamples, MembersHaveOnlyNormalMaximals) {
  PrimeField f2(2);
  auto h = h3<ModP>(f2);
  auto nil = formations::nilpotent<ModP>();
  for (const auto& m : maximal_subalgebras(h)) {
    EXPECT_EQ(classify_maximal(h, m.space(), nil).verdict, Verdict::FNormal);
    EXPECT_FALSE(is_f_critical(h, m.space(), nil));
  }
  EXPECT_TRUE(cover_avoid_check(h, whole(h), nil).passed());
  EXPECT_TRUE(is_f_projector(h, whole(h), nil));
  auto one = maximal_subalgebras(LieAlgebra<ModP>(f2, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].dim(), 0u);
  auto cs = chief_series(h);
  for (const auto& f : cs.factors) EXPECT_TRUE(is_f_central(h, f, nil));
}
