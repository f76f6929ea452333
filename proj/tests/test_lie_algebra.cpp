#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace lieform;
using namespace lieform::testing;

TEST(Validate, AbelianIsValid) {
  PrimeField f2(2);
  auto r = validate(LieAlgebra<ModP>(f2, 3));
  EXPECT_TRUE(r.ok());
}

TEST(Validate, Sl2IsNotSoluble) {
  auto r = validate(sl2());
  EXPECT_TRUE(r.jacobi_violations.empty());
  EXPECT_FALSE(r.soluble);
  EXPECT_THROW(require_valid(sl2()), NotSoluble);
  EXPECT_THROW(require_valid(so3_like()), NotSoluble);
}

TEST(Validate, JacobiViolationNamesTriple) {
  RationalField q;
  LieAlgebra<Rational> L(q, 3);
  L.set_bracket(0, 1, vec<Rational>(q, {0, 0, 1}));
  L.set_bracket(0, 2, vec<Rational>(q, {1, 0, 0}));
  auto r = validate(L);
  ASSERT_EQ(r.jacobi_violations.size(), 1u);
  EXPECT_EQ(r.jacobi_violations[0], (JacobiTriple{1, 2, 3}));  // 1-based
  try {
    require_valid(L);
    FAIL();
  } catch (const JacobiViolation& e) {
    EXPECT_NE(std::string(e.what()).find("(1, 2, 3)"), std::string::npos);
  }
}

TEST(Bracket, AntisymmetryAndTable) {
  RationalField q;
  auto L = r2<Rational>(q);
  EXPECT_EQ(L.basis_bracket(0, 1), vec<Rational>(q, {0, 1}));
  EXPECT_EQ(L.basis_bracket(1, 0), vec<Rational>(q, {0, -1}));
  EXPECT_TRUE(is_zero_vector(L.basis_bracket(0, 0)));
  auto x = vec<Rational>(q, {2, 3}), y = vec<Rational>(q, {-1, 5});
  EXPECT_EQ(L.bracket(x, y), vec<Rational>(q, {0, 13}));
  EXPECT_EQ(L.ad(x).apply(y), L.bracket(x, y));
}

TEST(Closure, Heisenberg) {
  PrimeField f2(2);
  auto L = h3<ModP>(f2);
  auto s = span_of<ModP>(f2, 3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_FALSE(is_subalgebra(L, s));
  EXPECT_TRUE(subalgebra_closure(L, s).space().is_full());
  auto e1 = span_of<ModP>(f2, 3, {{1, 0, 0}});
  EXPECT_EQ(ideal_closure(L, e1).space(), span_of<ModP>(f2, 3, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_THROW(Subalgebra<ModP>::checked(L, s), NotASubalgebra);
  EXPECT_THROW(Ideal<ModP>::checked(L, e1), NotAnIdeal);
}

TEST(Series, R2AndH3) {
  RationalField q;
  auto r = r2<Rational>(q);
  auto ds = derived_series(r);
  ASSERT_EQ(ds.size(), 3u);
  EXPECT_EQ(ds[1], span_of<Rational>(q, 2, {{0, 1}}));
  EXPECT_EQ(ds[2].dim(), 0u);
  EXPECT_TRUE(is_soluble(r));
  EXPECT_FALSE(is_nilpotent(r));
  auto lcs = lower_central_series(r);
  EXPECT_EQ(lcs.back(), span_of<Rational>(q, 2, {{0, 1}}));

  auto h = h3<Rational>(q);
  EXPECT_TRUE(is_nilpotent(h));
  auto hl = lower_central_series(h);
  EXPECT_EQ(hl.back().dim(), 0u);
  EXPECT_EQ(hl[1], span_of<Rational>(q, 3, {{0, 0, 1}}));
}

TEST(Centralizers, Examples) {
  PrimeField f3(3);
  auto h = h3<ModP>(f3);
  EXPECT_EQ(centre(h), span_of<ModP>(f3, 3, {{0, 0, 1}}));
  auto r = r2<ModP>(f3);
  EXPECT_EQ(centre(r).dim(), 0u);
  EXPECT_EQ(centralizer(r, span_of<ModP>(f3, 2, {{0, 1}})), span_of<ModP>(f3, 2, {{0, 1}}));
  EXPECT_EQ(normalizer(r, span_of<ModP>(f3, 2, {{1, 0}})).space(), span_of<ModP>(f3, 2, {{1, 0}}));
  EXPECT_TRUE(normalizer(r, span_of<ModP>(f3, 2, {{0, 1}})).space().is_full());
  EXPECT_EQ(core(r, span_of<ModP>(f3, 2, {{1, 0}})).dim(), 0u);
  EXPECT_EQ(core(r, span_of<ModP>(f3, 2, {{0, 1}})).dim(), 1u);
}

TEST(Quotients, R2ByDerivedAlgebra) {
  RationalField q;
  auto r = r2<Rational>(q);
  auto qt = quotient(r, span_of<Rational>(q, 2, {{0, 1}}));
  EXPECT_EQ(qt.algebra.dim(), 1u);
  EXPECT_TRUE(qt.algebra.is_abelian());
  EXPECT_THROW(quotient(r, span_of<Rational>(q, 2, {{1, 0}})), NotAnIdeal);
}

// Brute-force oracle for centralizer/normalizer/core/ideal checks on small
// algebras over GF(p): test every vector.
template <class Pred>
Subspace<ModP> collect(const PrimeField& f, std::size_t n, Pred pred) {
  std::vector<Vector<ModP>> vs;
  for_each_vector<ModP>(f, n, [&](const Vector<ModP>& v) {
    if (pred(v)) vs.push_back(v);
  });
  return Subspace<ModP>::span(f, n, vs);
}

TEST(LieProperty, StructuralOperationsAgainstBruteForce) {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& e : small_universe(p, 3)) {
      const auto& L = e.algebra;
      const auto n = L.dim();
      for (const auto& sub : enumerate_subalgebras(L)) {
        const auto& u = sub.space();
        auto cen = collect(f, n, [&](const Vector<ModP>& x) {
          for (const auto& b : u.basis_vectors())
            if (!is_zero_vector(L.bracket(x, b))) return false;
          return true;
        });
        EXPECT_EQ(centralizer(L, u), cen) << e.tag;
        auto nor = collect(f, n, [&](const Vector<ModP>& x) {
          for (const auto& b : u.basis_vectors())
            if (!u.contains(L.bracket(x, b))) return false;
          return true;
        });
        EXPECT_EQ(normalizer(L, u).space(), nor) << e.tag;
        // core: the largest ideal inside u, by enumeration
        Subspace<ModP> best = zero_subspace(L);
        for (const auto& I : enumerate_ideals(L))
          if (u.contains(I.space()) && I.dim() > best.dim()) best = I.space();
        EXPECT_EQ(core(L, u).space(), best) << e.tag;
      }
    }
  }
}

TEST(LieProperty, QuotientProjectionIsHomomorphism) {
  for (const auto& e : small_universe(2, 3)) {
    const auto& L = e.algebra;
    for (const auto& I : enumerate_ideals(L)) {
      auto q = quotient(L, I);
      ASSERT_EQ(validate(q.algebra).ok(), true);
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
          auto x = unit_vector<ModP>(L.field(), L.dim(), i), y = unit_vector<ModP>(L.field(), L.dim(), j);
          EXPECT_EQ(q.projection.apply(L.bracket(x, y)),
                    q.algebra.bracket(q.projection.apply(x), q.projection.apply(y)));
        }
    }
  }
}

TEST(LieProperty, DerivedSeriesTermsAreIdeals) {
  for (const auto& e : small_universe(3, 3)) {
    for (const auto& t : derived_series(e.algebra)) EXPECT_TRUE(is_ideal(e.algebra, t));
    for (const auto& t : lower_central_series(e.algebra)) EXPECT_TRUE(is_ideal(e.algebra, t));
  }
}

TEST(LieProperty, RestrictionIsIsomorphicCopy) {
  for (const auto& e : small_universe(2, 3)) {
    for (const auto& sub : enumerate_subalgebras(e.algebra)) {
      auto r = restrict_to(e.algebra, sub.space());
      EXPECT_TRUE(validate(r.algebra).ok());
      auto full = whole(r.algebra);
      EXPECT_EQ(r.to_parent(full), sub.space());
      EXPECT_EQ(r.to_local(sub.space()), full);
    }
  }
}

TEST(LieExamples, BracketsClosuresSeries) {
  RationalField q;
  auto r = r2<Rational>(q);
  auto x = vec<Rational>(q, {1, 0}), y = vec<Rational>(q, {0, 1});
  EXPECT_EQ(r.bracket(x, y), y);
  EXPECT_EQ(r.bracket(vec<Rational>(q, {1, 1}), y), y);
  EXPECT_TRUE(is_zero_vector(r.bracket(x, x)));
  auto sx = span_of<Rational>(q, 2, {{1, 0}});
  EXPECT_EQ(subalgebra_closure(r, sx).space(), sx);

  LieAlgebra<Rational> ab(q, 2);
  auto ds = derived_series(ab);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[1].dim(), 0u);
  EXPECT_EQ(lower_central_series(ab).back().dim(), 0u);
}

TEST(LieExamples, CentralisersNormalisersCoresQuotients) {
  RationalField q;
  auto r = r2<Rational>(q);
  auto y = span_of<Rational>(q, 2, {{0, 1}});
  EXPECT_TRUE(centralizer(r, zero_subspace(r)).is_full());
  auto Y = Ideal<Rational>::checked(r, y);
  auto Z = Ideal<Rational>::checked(r, zero_subspace(r));
  auto W = Ideal<Rational>::checked(r, whole(r));
  EXPECT_EQ(centralizer_of_factor(r, Y, Z).space(), y);
  EXPECT_TRUE(centralizer_of_factor(r, W, Y).space().is_full());
  EXPECT_THROW(centralizer_of_factor(r, Y, W), NotNested);
  EXPECT_TRUE(normalizer(r, y).space().is_full());
  // [e2, e1] = -e3 leaves span{e1}, so e2 is not in the normaliser
  EXPECT_EQ(normalizer(h3<Rational>(q), span_of<Rational>(q, 3, {{1, 0, 0}})).space(),
            span_of<Rational>(q, 3, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(core(r, y).space(), y);
  EXPECT_EQ(quotient(r, zero_subspace(r)).algebra, r);
  EXPECT_EQ(quotient(r, whole(r)).algebra.dim(), 0u);
}
