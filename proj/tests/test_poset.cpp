#include <gtest/gtest.h>

#include "letterplace/poset.hpp"

using namespace letterplace;

namespace {

// a<c, b<c, b<d with a=0, b=1, c=2, d=3.
Poset sec3_poset() { return poset_from_covers(4, {{0, 2}, {1, 2}, {1, 3}}); }

ElementMask mask_of(std::initializer_list<int> xs) {
  ElementMask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

}  // namespace

TEST(Poset, TwoElementChainAndAntichain) {
  Poset c = poset_from_covers(2, {{0, 1}});
  EXPECT_TRUE(c.lt(0, 1));
  EXPECT_FALSE(c.leq(1, 0));
  Poset a = poset_from_covers(2, {});
  EXPECT_FALSE(a.comparable(0, 1));
  EXPECT_TRUE(a.leq(0, 0));
}

TEST(Poset, Section3Poset) {
  Poset P = sec3_poset();
  EXPECT_TRUE(P.lt(0, 2));
  EXPECT_TRUE(P.lt(1, 2));
  EXPECT_TRUE(P.lt(1, 3));
  EXPECT_FALSE(P.comparable(0, 1));
  EXPECT_FALSE(P.comparable(0, 3));
  EXPECT_FALSE(P.comparable(2, 3));
}

TEST(Poset, TransitiveClosure) {
  Poset P = poset_from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(P.lt(0, 2));
  // The redundant relation is not a cover.
  EXPECT_EQ(P.covers(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  Poset Q = poset_from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(Q.covers(), P.covers());
}

TEST(Poset, Errors) {
  try {
    poset_from_covers(2, {{0, 1}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CycleDetected);
  }
  try {
    poset_from_covers(2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IdentifierOutOfRange);
  }
  EXPECT_THROW(poset_from_covers(1, {{0, 0}}), Error);
}

TEST(Poset, ClosureExamples) {
  Poset c = chain_poset(2);
  EXPECT_EQ(closure(c, bit(1), Direction::Down).members, mask_of({0, 1}));
  EXPECT_EQ(closure(c, bit(1), Direction::Up).members, mask_of({1}));
  Poset P = sec3_poset();
  // Oracle: direct scan of the order table.
  ElementMask expect = 0;
  for (int p = 0; p < 4; ++p)
    if (P.leq(p, 2)) expect |= bit(p);
  EXPECT_EQ(expect, mask_of({0, 1, 2}));
  EXPECT_EQ(closure(P, bit(2), Direction::Down).members, expect);
}

TEST(Poset, MinElementsExamples) {
  Poset P = sec3_poset();
  EXPECT_EQ(min_elements(P, 0).members, 0U);
  EXPECT_EQ(min_elements(chain_poset(2), mask_of({0, 1})).members, mask_of({0}));
  EXPECT_EQ(min_elements(P, mask_of({1, 2, 3})).members, mask_of({1}));
  EXPECT_EQ(max_elements(P, P.all()).members, mask_of({2, 3}));
}

TEST(Poset, OppositeIsSwappedView) {
  Poset P = sec3_poset();
  OppositePoset op(P);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) EXPECT_EQ(op.leq(p, q), P.leq(q, p));
}

TEST(PosetProperty, ClosureIdempotentAndIdealFilterComplement) {
  for (int n = 0; n <= 5; ++n)
    for (const Poset& P : enumerate_posets(n))
      for (ElementMask s = 0; s <= P.all(); ++s) {
        auto down = closure(P, s, Direction::Down).members;
        auto up = closure(P, s, Direction::Up).members;
        ASSERT_EQ(closure(P, down, Direction::Down).members, down);
        ASSERT_EQ(closure(P, up, Direction::Up).members, up);
        ASSERT_EQ(is_ideal(P, s), is_filter(P, P.all() & ~s));
        if (is_filter(P, s)) {
          ASSERT_EQ(closure(P, min_elements(P, s).members, Direction::Up).members, s);
          ASSERT_TRUE(is_antichain(P, min_elements(P, s).members));
        }
        if (s == P.all()) break;
      }
}

TEST(PosetProperty, IsomorphismClassCounts) {
  // Number of unlabelled posets, OEIS A000112.
  const std::vector<std::size_t> expect{1, 1, 2, 5, 16, 63};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_posets(n).size(), expect[n]) << n;
}

TEST(PosetProperty, AllIdealsMatchesSubsetScan) {
  for (int n = 0; n <= 5; ++n)
    for (const Poset& P : enumerate_posets(n)) {
      std::vector<ElementMask> scan;
      for (ElementMask s = 0; s <= P.all(); ++s) {
        if (is_ideal(P, s)) scan.push_back(s);
        if (s == P.all()) break;
      }
      ASSERT_EQ(all_poset_ideals(P), scan);
    }
}

TEST(Poset, ForestTest) {
  EXPECT_TRUE(is_top_rooted_forest(chain_poset(3)));
  EXPECT_TRUE(is_top_rooted_forest(antichain_poset(3)));
  EXPECT_FALSE(is_top_rooted_forest(poset_from_covers(3, {{0, 1}, {0, 2}})));
  EXPECT_TRUE(is_top_rooted_forest(poset_from_covers(3, {{0, 2}, {1, 2}})));
}
