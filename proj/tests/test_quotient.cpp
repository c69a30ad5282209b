#include <gtest/gtest.h>

#include <random>

#include "letterplace/quotient.hpp"

using namespace letterplace;

namespace {

IsotoneMap M(std::vector<int> v) { return {std::move(v)}; }

PairSet source_of(const MonomialIdeal& I) { return vars_to_pairs(I.universe()); }

// Oracle for the Hilbert factor: count standard monomials degreewise in both
// rings up to degree 6 and compare HS_S (1-t)^(|S|-|R|) with HS_R.
bool hilbert_factor_by_counting(const MonomialIdeal& I, const FiberMap& f) {
  MonomialIdeal J = project_ideal(I, f);
  auto count = [](const MonomialIdeal& K, int d) {
    const auto& vars = K.universe();
    long c = 0;
    std::vector<Exponent> e(vars.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k == vars.size()) {
        if (left != 0) return;
        std::vector<Monomial::Entry> en;
        for (std::size_t j = 0; j < vars.size(); ++j) en.emplace_back(vars[j], e[j]);
        if (!K.contains(Monomial(en))) ++c;
        return;
      }
      for (int x = 0; x <= left; ++x) {
        e[k] = x;
        rec(k + 1, left - x);
      }
      e[k] = 0;
    };
    rec(0, d);
    return c;
  };
  const int D = 6;
  std::vector<long> hs(D + 1), hr(D + 1);
  for (int d = 0; d <= D; ++d) {
    hs[d] = count(I, d);
    hr[d] = count(J, d);
  }
  std::size_t drop = I.universe().size() - J.universe().size();
  for (std::size_t k = 0; k < drop; ++k)
    for (int d = D; d >= 1; --d) hs[d] -= hs[d - 1];
  return hs == hr;
}

}  // namespace

TEST(Quotient, FiberKindExamples) {
  HomIdeal J = HomIdeal::principal(chain_poset(3), M({1, 1, 2}));
  PairSet S = support(J);
  EXPECT_EQ(fiber_kind(J.poset(), projection_p1(S)), FiberKind::RightStrict);
  EXPECT_EQ(fiber_kind(J.poset(), projection_p2(S)), FiberKind::LeftStrict);
  EXPECT_EQ(fiber_kind(J.poset(), identity_map(S)), FiberKind::Both);
  FiberMap merge{{{0, 0}, {1, 0}}, {VarIndex::target(0), VarIndex::target(0)}};
  EXPECT_EQ(fiber_kind(antichain_poset(2), merge), FiberKind::Neither);
}

TEST(Quotient, ProjectExamples) {
  HomIdeal J = HomIdeal::principal(chain_poset(3), M({1, 1, 2}));
  MonomialIdeal L = letterplace_ideal(J);
  EXPECT_TRUE(project_ideal(L, identity_map(source_of(L))).gens().size() == L.gens().size());
  MonomialIdeal sq({Monomial::squarefree({VarIndex::x(0, 0), VarIndex::x(0, 1)})});
  EXPECT_EQ(project_ideal(sq, projection_p1(source_of(sq))).gens()[0], Monomial::var(VarIndex::elem(0), 2));
  auto x = [](int p, Exponent e) { return Monomial::var(VarIndex::elem(p), e); };
  MonomialIdeal expect({x(0, 2), x(0, 1) * x(1, 1), x(1, 2), x(0, 1) * x(2, 2), x(1, 1) * x(2, 2), x(2, 3)});
  EXPECT_TRUE(project_ideal(L, projection_p1(source_of(L))).same_generators(expect));
  FiberMap partial = projection_p1({{0, 0}});
  try {
    project_ideal(L, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VariableOutsideSource);
  }
}

TEST(Quotient, RegularCheckExamples) {
  HomIdeal J = HomIdeal::principal(chain_poset(3), M({1, 1, 2}));
  MonomialIdeal L = letterplace_ideal(J), C = coletterplace_ideal(J);
  EXPECT_TRUE(regular_quotient_check(L, identity_map(source_of(L))).holds);
  EXPECT_TRUE(regular_quotient_check(L, projection_p1(source_of(L))).holds);
  EXPECT_TRUE(regular_quotient_check(C, projection_p2(source_of(C))).holds);
  EXPECT_TRUE(hilbert_factor_by_counting(L, projection_p1(source_of(L))));
  EXPECT_TRUE(hilbert_factor_by_counting(C, projection_p2(source_of(C))));
}

TEST(Quotient, NonStrictMergeFails) {
  HomIdeal J = HomIdeal::principal(antichain_poset(2), M({0, 0}));
  MonomialIdeal L = letterplace_ideal(J);
  FiberMap merge{{{0, 0}, {1, 0}}, {VarIndex::target(0), VarIndex::target(0)}};
  EXPECT_FALSE(regular_quotient_check(L, merge).holds);
  EXPECT_FALSE(hilbert_factor_by_counting(L, merge));
}

TEST(Quotient, IsotoneOrderOnTargets) {
  // (0,0) < (0,1) in P x N; sending them to r0, r1 and (0,1)->r0 via a merge
  // with (0,0)->r1 forces r0 <= r1 <= r0 with distinct r: a cycle.
  Poset P = chain_poset(1);
  FiberMap ok{{{0, 0}, {0, 1}}, {VarIndex::target(0), VarIndex::target(1)}};
  EXPECT_TRUE(admits_isotone_order(P, ok));
  FiberMap cyc{{{0, 0}, {0, 1}, {0, 2}}, {VarIndex::target(0), VarIndex::target(1), VarIndex::target(0)}};
  EXPECT_FALSE(admits_isotone_order(P, cyc));
}

TEST(QuotientProperty, StrictMapsGiveRegularQuotients) {
  std::mt19937_64 rng(59);
  for (int n = 1; n <= 4; ++n)
    for (const Poset& P : enumerate_posets(n))
      for (const auto& a : enumerate_isotone(P, n <= 3 ? 2 : 1)) {
        HomIdeal J = HomIdeal::principal(P, a);
        MonomialIdeal L = letterplace_ideal(J), C = coletterplace_ideal(J);
        if (L.is_zero() || C.is_zero()) continue;
        ASSERT_TRUE(regular_quotient_check(L, projection_p1(source_of(L))).holds);
        for (int k = 0; k < 3; ++k) {
          FiberMap r = random_strict_merge(P, source_of(L), true, rng);
          ASSERT_NE(fiber_kind(P, r), FiberKind::Neither);
          ASSERT_TRUE(regular_quotient_check(L, r).holds);
          FiberMap l = random_strict_merge(P, source_of(C), false, rng);
          ASSERT_TRUE(regular_quotient_check(C, l).holds);
        }
      }
}

TEST(QuotientProperty, CheckMatchesCounting) {
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 2; ++n)
    for (const Poset& P : enumerate_posets(n))
      for (const auto& a : enumerate_isotone(P, 1)) {
        HomIdeal J = HomIdeal::principal(P, a);
        MonomialIdeal L = letterplace_ideal(J);
        FiberMap r = random_strict_merge(P, source_of(L), true, rng);
        ASSERT_EQ(regular_quotient_check(L, r).holds, hilbert_factor_by_counting(L, r));
      }
}
