#include <gtest/gtest.h>

#include <random>

#include "letterplace/determinantal.hpp"

using namespace letterplace;

namespace {

LSequence L(std::vector<int> v, int a = 0) { return {a, std::move(v)}; }
Monomial Y(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<VarIndex> v;
  for (auto [p, i] : pairs) v.push_back(VarIndex::y(p, i));
  return Monomial::squarefree(v);
}

LSequence random_l(std::mt19937_64& rng, int len, int step, int a = 0) {
  LSequence l{a, {}};
  int x = a + static_cast<int>(rng() % 2);
  for (int k = 0; k < len; ++k) {
    l.vals.push_back(x);
    x += rng() % (step + 1);
  }
  return l;
}

LSequence segment(const LSequence& l, int from, int to) {
  LSequence s{from, {}};
  for (int c = from; c <= to; ++c) s.vals.push_back(l[c]);
  return s;
}

// Every element of `F` lies in the ideal with Groebner basis G.
bool all_reduce(const std::vector<Polynomial>& F, const std::vector<Polynomial>& G, const TermOrder& ord) {
  return std::all_of(F.begin(), F.end(), [&](const Polynomial& f) { return reduce(f, G, ord).is_zero(); });
}

std::vector<VarIndex> union_vars(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<VarIndex> v;
  for (const auto* F : {&a, &b})
    for (const auto& f : *F)
      for (const auto& x : f.variables()) v.push_back(x);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST(Determinantal, MatrixShapes) {
  DetMatrix M(L({0, 0, 3, 4, 6}));
  EXPECT_EQ(M.variables().size(), 17U);
  EXPECT_EQ(M.diagram(), "....**\n...***\n******\n******\n");
  DetMatrix N(L({0, 2}));
  EXPECT_EQ(N.variables(), (std::vector<VarIndex>{VarIndex::y(1, 0), VarIndex::y(2, 0)}));
  DetMatrix T(L({3, 3, 5, 7, 8, 11}, 2));
  EXPECT_EQ(T.diagram(), ".....***\n....****\n..******\n********\n********\n");
}

TEST(Determinantal, SequenceValidation) {
  EXPECT_THROW(DetMatrix(L({2, 1})), Error);
  EXPECT_THROW(DetMatrix(L({1})), Error);
  EXPECT_THROW(DetMatrix(L({0, 1}, -1)), Error);
  try {
    i_sequence(L({0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotTerrace);
  }
}

TEST(Determinantal, GeneratingMinorCounts) {
  // 3 + 4 + 15 candidates; 4 vanish structurally.
  auto ms = generating_minors(L({0, 0, 3, 4, 6}));
  EXPECT_EQ(ms.size(), 18U);
  std::map<int, int> per_c;
  for (const auto& m : ms) ++per_c[m.c];
  EXPECT_EQ(per_c, (std::map<int, int>{{2, 3}, {3, 3}, {4, 12}}));
  auto lin = ideal_gens(L({0, 2}));
  ASSERT_EQ(lin.size(), 2U);
  // (0,1,2): y10 and det [[y10, y20], [0, y21]] = y10 y21.
  auto g = ideal_gens(L({0, 1, 2}));
  ASSERT_EQ(g.size(), 2U);
  EXPECT_EQ(g[0], Polynomial(Y({{1, 0}})));
  EXPECT_EQ(g[1], Polynomial(Y({{1, 0}, {2, 1}})));
}

TEST(Determinantal, TerraceAndISequence) {
  EXPECT_EQ(terrace(L({3, 3, 5, 7, 8, 11}, 2)).vals, (std::vector<int>{3, 3, 5, 7, 7, 11}));
  EXPECT_EQ(i_sequence(L({3, 3, 5, 7, 7, 11}, 2)).vals, (std::vector<int>{1, 1, 2, 3, 3, 5}));
  EXPECT_EQ(terrace(L({0, 0, 3, 4, 6})).vals, (std::vector<int>{0, 0, 3, 3, 6}));
  EXPECT_EQ(i_sequence(L({0, 0, 3, 3, 6})).vals, (std::vector<int>{0, 0, 2, 2, 3}));
  EXPECT_EQ(terrace(L({0, 1, 2})).vals, (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(i_sequence(L({0, 1, 1})).vals, (std::vector<int>{0, 1, 1}));
}

TEST(Determinantal, LyIdealExamples) {
  EXPECT_TRUE(ly_ideal(L({0, 2})).same_generators(MonomialIdeal({Y({{1, 0}}), Y({{2, 0}})})));
  EXPECT_TRUE(ly_ideal(L({0, 1, 1})).same_generators(MonomialIdeal({Y({{1, 0}})})));
  EXPECT_EQ(height(ly_ideal(L({1, 1, 2, 3, 3, 5}, 2))).value, 4U);
}

TEST(Determinantal, CodimensionFormula) {
  EXPECT_EQ(codim_formula(L({0, 2})), 2);
  EXPECT_EQ(codim_formula(L({0, 1, 2})), 1);
  EXPECT_EQ(codim_formula(L({0, 0, 4})), 3);
  EXPECT_EQ(codim_formula(L({0, 1, 3})), 2);
  EXPECT_EQ(codim_formula(L({0, 0, 3, 4, 6})), 3);
}

TEST(Determinantal, VerifyMainSmall) {
  struct Case {
    LSequence l;
    int codim;
  };
  for (const auto& [l, codim] : {Case{L({0, 2}), 2}, Case{L({0, 1, 2}), 1}, Case{L({0, 0, 4}), 3},
                                 Case{L({0, 1, 3}), 2}, Case{L({0, 0, 2, 4}), 2}}) {
    DetReport r = verify_main(l);
    EXPECT_TRUE(r.ok()) << to_string(l);
    EXPECT_EQ(r.codim_i, codim) << to_string(l);
    EXPECT_EQ(static_cast<int>(r.height), codim);
  }
  // 2x4 maximal minors: in(I) = the six diagonals y[p,0]y[q,1], p < q.
  DetReport r = verify_main(L({0, 0, 4}));
  std::vector<Monomial> diag;
  for (int p = 1; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q) diag.push_back(Y({{p, 0}, {q, 1}}));
  EXPECT_TRUE(r.raw.initial.same_generators(MonomialIdeal(diag)));
}

TEST(Determinantal, ReductionLemmaExample) {
  auto big = ideal_gens(L({0, 1, 2})), small = ideal_gens(L({0, 1}));
  TermOrder ord = diagonal_order(union_vars(big, small));
  EXPECT_TRUE(all_reduce(big, buchberger(small, ord), ord));
  EXPECT_TRUE(all_reduce(small, buchberger(big, ord), ord));
}

TEST(Determinantal, BudgetExceeded) {
  GroebnerOptions opt;
  opt.max_pairs = 2;
  try {
    verify_main(L({0, 0, 3, 4, 6}), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(DeterminantalProperty, ISequenceRoundTrip) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 300; ++t) {
    int a = rng() % 3;
    LSequence l = random_l(rng, 2 + rng() % 5, 3, a);
    LSequence lp = terrace(l);
    ASSERT_TRUE(is_terrace(lp));
    for (int c = l.a; c <= l.b(); ++c) ASSERT_LE(lp[c], l[c]);
    LSequence i = i_sequence(lp);
    ASSERT_EQ(l_from_i(i), lp);
    ASSERT_EQ(i[i.b()] - i[i.a], codim_formula(l)) << to_string(l);
  }
}

TEST(DeterminantalProperty, DiagonalLeadsAndLiesInLy) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 60; ++t) {
    LSequence l = random_l(rng, 2 + rng() % 3, 3);
    if (l[l.b()] == l[l.a]) continue;
    DetMatrix M(l);
    TermOrder ord = diagonal_order(M.variables());
    MonomialIdeal ly = ly_ideal(i_sequence(terrace(l)));
    for (const auto& m : generating_minors(l)) {
      Monomial lt = m.value.leading_monomial(ord);
      auto diag = diagonal_product(M, m.cols);
      ASSERT_TRUE(diag.has_value());
      ASSERT_EQ(lt, *diag);
      ASSERT_TRUE(ly.contains(lt)) << to_string(l);
    }
  }
}

TEST(DeterminantalProperty, VerifyMainRandom) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 25; ++t) {
    LSequence l = random_l(rng, 2 + rng() % 3, 2);
    if (l[l.b()] == l[l.a]) continue;
    ASSERT_TRUE(verify_main(l).ok()) << to_string(l);
  }
}

TEST(DeterminantalProperty, ReductionLemma) {
  std::mt19937_64 rng(113);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 15; ++t) {
    LSequence l = random_l(rng, 3 + rng() % 2, 2);
    for (int c = l.a + 1; c < l.b(); ++c) {
      bool cond = true;
      for (int d = c; d <= l.b(); ++d) cond &= l[d] - l[c] <= d - c;
      if (!cond || l[c] == l[l.a]) continue;
      auto big = ideal_gens(l), small = ideal_gens(segment(l, l.a, c));
      TermOrder ord = diagonal_order(union_vars(big, small));
      ASSERT_TRUE(all_reduce(big, buchberger(small, ord), ord)) << to_string(l) << " c=" << c;
      ASSERT_TRUE(all_reduce(small, buchberger(big, ord), ord)) << to_string(l) << " c=" << c;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(DeterminantalProperty, SegmentInclusionsForI) {
  // I^(l_a..l_c) in I(l) in I^(l_a..l_c) + I^(l_c..l_b).
  std::mt19937_64 rng(127);
  for (int t = 0; t < 20; ++t) {
    LSequence l = random_l(rng, 3 + rng() % 2, 2);
    if (l[l.b()] == l[l.a]) continue;
    int c = l.a + 1 + rng() % (l.b() - l.a - 1);
    auto full = ideal_gens(l), left = ideal_gens(segment(l, l.a, c)), right = ideal_gens(segment(l, c, l.b()));
    auto both = left;
    both.insert(both.end(), right.begin(), right.end());
    TermOrder ord = diagonal_order(union_vars(full, both));
    ASSERT_TRUE(all_reduce(left, buchberger(full, ord), ord)) << to_string(l);
    if (both.empty()) {
      ASSERT_TRUE(full.empty());
      continue;
    }
    ASSERT_TRUE(all_reduce(full, buchberger(both, ord), ord)) << to_string(l) << " c=" << c;
  }
}

TEST(DeterminantalProperty, SegmentInclusionsForL) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 200; ++t) {
    LSequence i = random_l(rng, 3 + rng() % 3, 2);
    int c = i.a + 1 + rng() % (i.b() - i.a - 1);
    MonomialIdeal full = ly_ideal(i), left = ly_ideal(segment(i, i.a, c)), right = ly_ideal(segment(i, c, i.b()));
    for (const auto& g : left.gens()) ASSERT_TRUE(full.contains(g));
    for (const auto& g : full.gens()) ASSERT_TRUE(left.contains(g) || right.contains(g)) << to_string(i);
  }
}

TEST(DeterminantalProperty, NewColumnTopVariableAvoidsGenerators) {
  // l_c < l_{c+1} with a < c: y[l_c + 1, c] is in no minimal generator of L^Y(i).
  std::mt19937_64 rng(137);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    LSequence l = random_l(rng, 3 + rng() % 3, 3);
    MonomialIdeal ly = ly_ideal(i_sequence(terrace(l)));
    for (int c = l.a + 1; c < l.b(); ++c) {
      if (l[c] >= l[c + 1]) continue;
      VarIndex y = VarIndex::y(l[c] + 1, c);
      for (const auto& g : ly.gens()) ASSERT_EQ(g.exponent(y), 0U) << to_string(l) << " c=" << c;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}
