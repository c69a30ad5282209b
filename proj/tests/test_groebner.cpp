#include <gtest/gtest.h>

#include <random>

#include "letterplace/groebner.hpp"

using namespace letterplace;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

std::vector<VarIndex> nat_vars(int n) {
  std::vector<VarIndex> v;
  for (int i = 0; i < n; ++i) v.push_back(VarIndex::nat(i));
  return v;
}

Polynomial random_poly(std::mt19937_64& rng, int n, int terms, int maxdeg) {
  Polynomial f;
  for (int k = 0; k < terms; ++k) {
    std::vector<Monomial::Entry> e;
    int left = 1 + rng() % maxdeg;
    for (int v = 0; v < n && left > 0; ++v) {
      int x = rng() % (left + 1);
      if (x) e.emplace_back(VarIndex::nat(v), x);
      left -= x;
    }
    int c = static_cast<int>(rng() % 7) - 3;
    if (c == 0) c = 1;
    f += Polynomial(Monomial(e), c);
  }
  return f;
}

}  // namespace

// x = x[0], y = x[1]; x > y.
TEST(Groebner, ReduceExample) {
  TermOrder lex = lex_order(nat_vars(2));
  EXPECT_EQ(reduce(P("x[0]^2 - x[1]"), {P("x[0] - x[1]^2")}, lex), P("x[1]^4 - x[1]"));
  EXPECT_TRUE(reduce(P("x[0]*x[1] - x[0]"), {P("x[0]")}, lex).is_zero());
}

TEST(Groebner, BuchbergerExample) {
  TermOrder lex = lex_order(nat_vars(2));
  auto G = buchberger({P("x[0]^2 - x[1]"), P("x[0]*x[1] - 1")}, lex);
  ASSERT_EQ(G.size(), 2U);
  EXPECT_EQ(G[0], P("x[1]^3 - 1"));
  EXPECT_EQ(G[1], P("x[0] - x[1]^2"));
  EXPECT_TRUE(initial_ideal(G, lex).same_generators(MonomialIdeal({Monomial::var(VarIndex::nat(0)),
                                                                    Monomial::var(VarIndex::nat(1), 3)})));
}

TEST(Groebner, MaximalMinorsOfGenericTwoByThree) {
  // [[a,b,c],[d,e,f]] with a > b > ... > f: the minors are already a Groebner
  // basis with initial terms ae, af, bf.
  std::vector<Polynomial> F{P("x[0]*x[4] - x[1]*x[3]"), P("x[0]*x[5] - x[2]*x[3]"), P("x[1]*x[5] - x[2]*x[4]")};
  TermOrder lex = lex_order(nat_vars(6));
  auto G = buchberger(F, lex);
  EXPECT_EQ(G.size(), 3U);
  MonomialIdeal expect({parse_monomial("x[0]*x[4]"), parse_monomial("x[0]*x[5]"), parse_monomial("x[1]*x[5]")});
  EXPECT_TRUE(initial_ideal(G, lex).same_generators(expect));
  for (const auto& f : F) EXPECT_TRUE(reduce(f, G, lex).is_zero());
}

TEST(Groebner, BudgetExceeded) {
  GroebnerOptions opt;
  opt.max_pairs = 1;
  try {
    buchberger({P("x[0]^2 - x[1]"), P("x[0]*x[1] - 1"), P("x[1]^2 - x[0]")}, grevlex_order(nat_vars(2)), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Groebner, TermOrderExamples) {
  auto m = [](const char* s) { return parse_monomial(s); };
  TermOrder lex = lex_order(nat_vars(3)), grl = grevlex_order(nat_vars(3));
  EXPECT_TRUE(lex.less(m("x[1]^5"), m("x[0]")));
  EXPECT_TRUE(grl.less(m("x[0]"), m("x[1]^5")));
  // grevlex: x0*x2 < x1^2 in degree 2.
  EXPECT_TRUE(grl.less(m("x[0]*x[2]"), m("x[1]^2")));
  EXPECT_TRUE(lex.less(m("x[1]^2"), m("x[0]*x[2]")));
}

TEST(GroebnerProperty, TermOrderLaws) {
  std::mt19937_64 rng(83);
  for (auto ord : {lex_order(nat_vars(3)), grevlex_order(nat_vars(3))})
    for (int t = 0; t < 500; ++t) {
      auto rm = [&]() {
        std::vector<Monomial::Entry> e;
        for (int v = 0; v < 3; ++v)
          if (int x = rng() % 3) e.emplace_back(VarIndex::nat(v), x);
        return Monomial(e);
      };
      Monomial a = rm(), b = rm(), c = rm();
      ASSERT_EQ(ord.compare(a, b), -ord.compare(b, a));
      ASSERT_EQ(ord.compare(a, b), ord.compare(a * c, b * c));
      ASSERT_FALSE(ord.less(a * c, a));
      if (ord.less(a, b) && ord.less(b, c)) {
        ASSERT_TRUE(ord.less(a, c));
      }
    }
}

TEST(GroebnerProperty, ReducedBasisIsCanonical) {
  // Independent of generator order and of chain criterion; members reduce to 0.
  std::mt19937_64 rng(89);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + rng() % 2;
    std::vector<Polynomial> F;
    for (int k = 0; k < 3; ++k) F.push_back(random_poly(rng, n, 1 + rng() % 3, 2));
    TermOrder ord = t % 2 ? grevlex_order(nat_vars(n)) : lex_order(nat_vars(n));
    GroebnerOptions opt;
    opt.degree_cap = 12;
    std::vector<Polynomial> G;
    try {
      G = buchberger(F, ord, opt);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::BudgetExceeded);
      continue;
    }
    auto S = F;
    std::shuffle(S.begin(), S.end(), rng);
    GroebnerOptions noc = opt;
    noc.chain_criterion = false;
    ASSERT_EQ(buchberger(S, ord, noc), G);
    Polynomial combo = F[0] * random_poly(rng, n, 2, 2) + F[1] * random_poly(rng, n, 2, 1);
    ASSERT_TRUE(reduce(combo, G, ord).is_zero());
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j)
        if (i != j) {
          ASSERT_FALSE(G[j].leading_monomial(ord).divides(G[i].leading_monomial(ord)));
        }
  }
}

TEST(GroebnerProperty, HilbertSeriesIndependentOfOrder) {
  // Homogeneous ideals: in_<(I) has the same Hilbert series for every order.
  std::mt19937_64 rng(97);
  for (int t = 0; t < 20; ++t) {
    const int n = 3;
    std::vector<Polynomial> F;
    for (int k = 0; k < 2 + static_cast<int>(rng() % 2); ++k) {
      Polynomial f;
      for (int j = 0; j < 3; ++j) {
        int a = rng() % 3, b = rng() % (3 - a);
        std::vector<Monomial::Entry> e;
        if (a) e.emplace_back(VarIndex::nat(0), a);
        if (b) e.emplace_back(VarIndex::nat(1), b);
        if (2 - a - b) e.emplace_back(VarIndex::nat(2), 2 - a - b);
        f += Polynomial(Monomial(e), 1 + static_cast<int>(rng() % 3));
      }
      if (!f.is_zero()) F.push_back(f);
    }
    GroebnerOptions opt;
    opt.degree_cap = 10;
    auto lex = lex_order(nat_vars(n)), grl = grevlex_order(nat_vars(n));
    auto a = initial_ideal(buchberger(F, lex, opt), lex).with_universe(nat_vars(n));
    auto b = initial_ideal(buchberger(F, grl, opt), grl).with_universe(nat_vars(n));
    ASSERT_EQ(hilbert_numerator(a), hilbert_numerator(b));
  }
}

TEST(GroebnerProperty, PolynomialTextRoundTrip) {
  std::mt19937_64 rng(101);
  TermOrder ord = grevlex_order(nat_vars(3));
  for (int t = 0; t < 100; ++t) {
    Polynomial f = random_poly(rng, 3, 1 + rng() % 4, 3);
    f = f.scaled(mpq_class(1, 1 + static_cast<int>(rng() % 4)));
    ASSERT_EQ(parse_polynomial(f.to_string(ord)), f) << f.to_string(ord);
  }
  EXPECT_TRUE(parse_polynomial("0").is_zero());
  EXPECT_THROW(parse_polynomial("1/0*x[1]"), Error);
  EXPECT_THROW(parse_polynomial(""), Error);
}
