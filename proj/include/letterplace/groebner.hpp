#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "letterplace/polynomial.hpp"

namespace letterplace {

struct GroebnerOptions {
  std::optional<std::uint64_t> degree_cap;  // default: 3 + max generator degree
  std::size_t max_pairs = 500'000;
  bool chain_criterion = true;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t zero_reductions = 0;
  std::uint64_t degree_cap = 0;
  std::uint64_t max_pair_degree = 0;
};

namespace gb {

/// Sparse exponent vector: (rank position, exponent), positions ascending.
struct Exp {
  std::vector<std::pair<std::uint16_t, std::uint32_t>> e;
  std::uint64_t deg = 0;
  bool operator==(const Exp& o) const { return e == o.e; }
};

inline bool divides(const Exp& a, const Exp& b) {
  if (a.deg > b.deg) return false;
  std::size_t j = 0;
  for (const auto& [p, x] : a.e) {
    while (j < b.e.size() && b.e[j].first < p) ++j;
    if (j == b.e.size() || b.e[j].first != p || b.e[j].second < x) return false;
  }
  return true;
}

template <typename Op>
Exp merge(const Exp& a, const Exp& b, Op op) {
  Exp r;
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    std::uint16_t p;
    std::uint32_t x;
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      p = a.e[i].first;
      x = op(a.e[i++].second, 0u);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      p = b.e[j].first;
      x = op(0u, b.e[j++].second);
    } else {
      p = a.e[i].first;
      x = op(a.e[i++].second, b.e[j++].second);
    }
    if (x) {
      r.e.emplace_back(p, x);
      r.deg += x;
    }
  }
  return r;
}

inline Exp mul(const Exp& a, const Exp& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}
inline Exp lcm(const Exp& a, const Exp& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}
/// a / b, assuming b | a.
inline Exp quo(const Exp& a, const Exp& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return x - y; });
}
inline bool coprime(const Exp& a, const Exp& b) {
  std::size_t j = 0;
  for (const auto& [p, x] : a.e) {
    while (j < b.e.size() && b.e[j].first < p) ++j;
    if (j < b.e.size() && b.e[j].first == p) return false;
  }
  return true;
}

/// Position 0 is the largest variable.
inline int cmp(TermOrder::Kind kind, const Exp& a, const Exp& b) {
  if (kind == TermOrder::Kind::GrevLex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    std::size_t i = a.e.size(), j = b.e.size();
    while (i > 0 && j > 0) {
      auto x = a.e[i - 1], y = b.e[j - 1];
      if (x.first != y.first) return x.first > y.first ? -1 : 1;
      if (x.second != y.second) return x.second > y.second ? -1 : 1;
      --i;
      --j;
    }
    return 0;
  }
  std::size_t i = 0;
  for (; i < a.e.size() && i < b.e.size(); ++i) {
    if (a.e[i].first != b.e[i].first) return a.e[i].first < b.e[i].first ? 1 : -1;
    if (a.e[i].second != b.e[i].second) return a.e[i].second > b.e[i].second ? 1 : -1;
  }
  if (i < a.e.size()) return 1;
  if (i < b.e.size()) return -1;
  return 0;
}

/// Terms in strictly descending order.
struct Poly {
  std::vector<std::pair<Exp, mpq_class>> t;
  bool zero() const { return t.empty(); }
  const Exp& lm() const { return t.front().first; }
  const mpq_class& lc() const { return t.front().second; }
};

class Ring {
 public:
  explicit Ring(const TermOrder& ord) : ord_(ord) {}

  Exp to_exp(const Monomial& m) const {
    Exp r;
    for (const auto& [v, x] : m.terms()) r.e.emplace_back(static_cast<std::uint16_t>(ord_.position(v)), x);
    std::sort(r.e.begin(), r.e.end());
    for (const auto& pe : r.e) r.deg += pe.second;
    return r;
  }

  Monomial to_monomial(const Exp& e) const {
    std::vector<Monomial::Entry> entries;
    for (const auto& [p, x] : e.e) entries.emplace_back(ord_.ranking()[p], x);
    return Monomial(std::move(entries));
  }

  Poly to_poly(const Polynomial& f) const {
    Poly r;
    for (const auto& [m, c] : f.terms()) r.t.emplace_back(to_exp(m), c);
    std::sort(r.t.begin(), r.t.end(), [&](const auto& a, const auto& b) { return compare(a.first, b.first) > 0; });
    return r;
  }

  Polynomial to_polynomial(const Poly& f) const {
    Polynomial r;
    for (const auto& [e, c] : f.t) r += Polynomial(to_monomial(e), c);
    return r;
  }

  int compare(const Exp& a, const Exp& b) const { return cmp(ord_.kind(), a, b); }

  /// f - c * m * g, with both operands sorted descending.
  Poly sub_mul(const Poly& f, const mpq_class& c, const Exp& m, const Poly& g) const {
    Poly r;
    r.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    std::optional<Exp> gj;
    auto next_g = [&]() {
      if (j < g.t.size()) gj = mul(m, g.t[j].first);
      else gj.reset();
    };
    next_g();
    while (i < f.t.size() || gj) {
      int s = !gj ? 1 : (i == f.t.size() ? -1 : compare(f.t[i].first, *gj));
      if (s > 0) {
        r.t.push_back(f.t[i++]);
      } else if (s < 0) {
        r.t.emplace_back(*gj, -c * g.t[j].second);
        ++j;
        next_g();
      } else {
        mpq_class x = f.t[i].second - c * g.t[j].second;
        if (x != 0) r.t.emplace_back(f.t[i].first, std::move(x));
        ++i;
        ++j;
        next_g();
      }
    }
    return r;
  }

  /// Full normal form; reducers are tried in list order.
  Poly normal_form(Poly f, const std::vector<Poly>& G) const {
    Poly rest;
    while (!f.zero()) {
      const Poly* red = nullptr;
      for (const auto& g : G)
        if (divides(g.lm(), f.lm())) {
          red = &g;
          break;
        }
      if (red) {
        mpq_class c = f.lc() / red->lc();
        Exp m = quo(f.lm(), red->lm());
        f = sub_mul(f, c, m, *red);
      } else {
        rest.t.push_back(std::move(f.t.front()));
        f.t.erase(f.t.begin());
      }
    }
    return rest;
  }

  static void make_monic(Poly& f) {
    if (f.zero()) return;
    mpq_class c = f.lc();
    for (auto& [e, x] : f.t) x /= c;
  }

 private:
  const TermOrder& ord_;
};

}  // namespace gb

/// Normal form of f modulo G (division algorithm, reducers in listed order).
inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& ord) {
  gb::Ring R(ord);
  std::vector<gb::Poly> g;
  for (const auto& h : G)
    if (!h.is_zero()) g.push_back(R.to_poly(h));
  return R.to_polynomial(R.normal_form(R.to_poly(f), g));
}

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending leading
/// term. Throws BudgetExceeded when a pair past the degree cap or the pair
/// budget would have to be processed.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const TermOrder& ord,
                                          const GroebnerOptions& opt = {}, GroebnerStats* stats = nullptr) {
  using gb::Exp;
  using gb::Poly;
  gb::Ring R(ord);
  GroebnerStats st;
  std::vector<Poly> G;
  std::uint64_t maxdeg = 0;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    Poly p = R.to_poly(f);
    for (const auto& [e, c] : p.t) maxdeg = std::max(maxdeg, e.deg);
    gb::Ring::make_monic(p);
    G.push_back(std::move(p));
  }
  st.degree_cap = opt.degree_cap ? *opt.degree_cap : 3 + maxdeg;

  struct Pair {
    std::size_t i, j;
    Exp lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> done;  // done[i][j], i < j: pair treated or discarded
  auto add_pairs_for = [&](std::size_t k) {
    for (auto& row : done) row.resize(G.size(), false);
    done.emplace_back(G.size(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if (gb::coprime(G[i].lm(), G[k].lm())) {
        ++st.coprime_skipped;
        done[i][k] = true;
        continue;
      }
      pairs.push_back({i, k, gb::lcm(G[i].lm(), G[k].lm())});
      if (++st.pairs_created > opt.max_pairs) throw Error(Errc::BudgetExceeded, "pair budget exhausted");
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) add_pairs_for(k);

  auto is_done = [&](std::size_t a, std::size_t b) { return a < b ? done[a][b] : done[b][a]; };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, earliest pair on ties.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (R.compare(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    if (opt.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < G.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (gb::divides(G[k].lm(), pr.lcm) && is_done(pr.i, k) && is_done(pr.j, k)) skip = true;
      }
      if (skip) {
        ++st.chain_skipped;
        done[pr.i][pr.j] = true;
        continue;
      }
    }
    if (pr.lcm.deg > st.degree_cap)
      throw Error(Errc::BudgetExceeded, "S-pair of degree " + std::to_string(pr.lcm.deg) +
                                            " exceeds the degree cap " + std::to_string(st.degree_cap));
    st.max_pair_degree = std::max(st.max_pair_degree, pr.lcm.deg);
    ++st.pairs_reduced;
    const Poly& a = G[pr.i];
    const Poly& b = G[pr.j];
    Poly s = R.sub_mul(Poly{}, -1, gb::quo(pr.lcm, a.lm()), a);
    s = R.sub_mul(s, 1, gb::quo(pr.lcm, b.lm()), b);
    done[pr.i][pr.j] = true;
    Poly h = R.normal_form(std::move(s), G);
    if (h.zero()) {
      ++st.zero_reductions;
      continue;
    }
    gb::Ring::make_monic(h);
    G.push_back(std::move(h));
    add_pairs_for(G.size() - 1);
  }

  // Minimalize leading terms, then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < G.size() && !redundant; ++l) {
      if (l == k || !gb::divides(G[l].lm(), G[k].lm())) continue;
      // Equal leading terms: keep the earliest.
      redundant = !(G[l].lm() == G[k].lm()) || l < k;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::vector<Poly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Poly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Poly head;
    head.t.push_back(minimal[k].t.front());
    Poly tail = minimal[k];
    tail.t.erase(tail.t.begin());
    Poly nf = R.normal_form(std::move(tail), others);
    head.t.insert(head.t.end(), nf.t.begin(), nf.t.end());
    gb::Ring::make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& x, const Poly& y) { return R.compare(x.lm(), y.lm()) < 0; });
  std::vector<Polynomial> out;
  for (const auto& p : reduced) out.push_back(R.to_polynomial(p));
  if (stats) *stats = st;
  return out;
}

inline MonomialIdeal initial_ideal(const std::vector<Polynomial>& G, const TermOrder& ord) {
  std::vector<Monomial> lt;
  for (const auto& g : G)
    if (!g.is_zero()) lt.push_back(g.leading_monomial(ord));
  return MonomialIdeal(std::move(lt));
}

}  // namespace letterplace
