#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "letterplace/letterplace.hpp"

namespace letterplace {

/// Exponent vector of a monomial over the element variables x[p] of P.
inline std::vector<Exponent> elem_exponents(const Poset& P, const Monomial& m) {
  std::vector<Exponent> a(P.size(), 0);
  for (const auto& [v, e] : m.terms()) {
    if (v.family != VarFamily::Elem) throw Error(Errc::InvalidInput, "expected x[p] variables");
    if (v.p < 0 || v.p >= P.size())
      throw Error(Errc::IdentifierOutOfRange, "variable " + var_to_string(v) + " outside P");
    a[v.p] = e;
  }
  return a;
}

inline Monomial elem_monomial(const std::vector<Exponent>& a) {
  std::vector<Monomial::Entry> entries;
  for (std::size_t p = 0; p < a.size(); ++p) entries.emplace_back(VarIndex::elem(static_cast<int>(p)), a[p]);
  return Monomial(std::move(entries));
}

/// Image of the ascent under (p,i) -> p: prod x[p]^(phi(p) - max_{q<p} phi(q)).
inline Monomial lambda_bar(const Poset& P, const IsotoneMap& phi) {
  check_isotone(P, phi);
  std::vector<Exponent> a(P.size(), 0);
  for (int p = 0; p < P.size(); ++p) {
    int floor = 0;
    for (int q : mask_members(P.down_set(p) & ~bit(p))) floor = std::max(floor, phi(q));
    a[p] = static_cast<Exponent>(std::max(0, phi(p) - floor));
  }
  return elem_monomial(a);
}

/// Inverse of lambda_bar: peel off A_1 = min supp(m), A_2 = min supp(m - A_1), ...
/// and count for each p how many of the filters generated by the A_i contain it.
inline IsotoneMap lambda_bar_inv(const Poset& P, const Monomial& m) {
  std::vector<Exponent> a = elem_exponents(P, m);
  IsotoneMap phi{std::vector<int>(P.size(), 0)};
  for (;;) {
    ElementMask supp = 0;
    for (int p = 0; p < P.size(); ++p)
      if (a[p] > 0) supp |= bit(p);
    if (supp == 0) break;
    ElementMask A = min_elements(P, supp).members;
    for (int p : mask_members(closure(P, A, Direction::Up).members)) ++phi.values[p];
    for (int p : mask_members(A)) --a[p];
  }
  return phi;
}

struct BChain {
  int length = 0;
  std::vector<int> witness;  // one longest multichain, bottom to top
  ElementMask through = 0;   // a <= b admitting insertion into some longest chain
};

namespace detail {

/// Heaviest chain inside `cand` with weights w; returns weight and the chain.
inline std::pair<int, std::vector<int>> heaviest_chain(const Poset& P, ElementMask cand,
                                                       const std::vector<Exponent>& w) {
  std::vector<int> order = mask_members(cand);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::popcount(P.down_set(x)) < std::popcount(P.down_set(y));
  });
  std::vector<int> best(P.size(), 0), prev(P.size(), -1);
  int top = -1, top_val = 0;
  for (int p : order) {
    best[p] = static_cast<int>(w[p]);
    for (int q : mask_members(P.down_set(p) & cand & ~bit(p)))
      if (static_cast<int>(w[p]) + best[q] > best[p]) {
        best[p] = static_cast<int>(w[p]) + best[q];
        prev[p] = q;
      }
    if (best[p] > top_val) {
      top_val = best[p];
      top = p;
    }
  }
  std::vector<int> chain;
  for (int p = top; p != -1; p = prev[p])
    for (Exponent k = 0; k < w[p]; ++k) chain.push_back(p);
  std::reverse(chain.begin(), chain.end());
  return {top_val, chain};
}

}  // namespace detail

/// Longest multichain p_1 <= ... <= p_r <= b with prod x[p_j] dividing m. A
/// longest chain always uses every copy of its elements, so this is the
/// heaviest chain in supp(m) below b weighted by exponents.
inline BChain longest_b_chain(const Poset& P, const Monomial& m, int b) {
  std::vector<Exponent> w = elem_exponents(P, m);
  ElementMask supp = 0;
  for (int p = 0; p < P.size(); ++p)
    if (w[p] > 0) supp |= bit(p);
  ElementMask cand = supp & P.down_set(b);
  BChain out;
  std::tie(out.length, out.witness) = detail::heaviest_chain(P, cand, w);
  for (int a : mask_members(P.down_set(b))) {
    ElementMask comp = 0;
    for (int q : mask_members(cand))
      if (P.comparable(a, q)) comp |= bit(q);
    if (detail::heaviest_chain(P, comp, w).first == out.length) out.through |= bit(a);
  }
  return out;
}

/// Subset enumeration oracle for longest_b_chain.
inline BChain longest_b_chain_bruteforce(const Poset& P, const Monomial& m, int b) {
  std::vector<Exponent> w = elem_exponents(P, m);
  ElementMask cand = 0;
  for (int p = 0; p < P.size(); ++p)
    if (w[p] > 0 && P.leq(p, b)) cand |= bit(p);
  BChain out;
  std::vector<ElementMask> best_sets;
  for (ElementMask s = cand;; s = (s - 1) & cand) {
    if (is_chain(P, s)) {
      int wt = 0;
      for (int p : mask_members(s)) wt += static_cast<int>(w[p]);
      if (wt > out.length) {
        out.length = wt;
        best_sets.clear();
      }
      if (wt == out.length) best_sets.push_back(s);
    }
    if (s == 0) break;
  }
  for (int a : mask_members(P.down_set(b)))
    for (ElementMask s : best_sets)
      if (is_chain(P, s | bit(a))) {
        out.through |= bit(a);
        break;
      }
  return out;
}

namespace detail {

/// Membership in I for dense exponent vectors. For an artinian ideal with
/// x[p]^k_p in I, every minimal generator lies in the box prod [0, k_p], and a
/// vector is in I iff its clamp to the box is; small boxes get a lookup table.
class DenseMembership {
 public:
  DenseMembership(const Poset& P, const MonomialIdeal& I) : I_(I), n_(P.size()) {
    if (I.is_unit() || n_ == 0) return;
    std::vector<Exponent> k(n_, 0);
    for (const auto& g : I.gens())
      if (g.terms().size() == 1) {
        int p = g.terms()[0].first.p;
        if (p >= 0 && p < n_) k[p] = k[p] ? std::min(k[p], g.terms()[0].second) : g.terms()[0].second;
      }
    std::uint64_t size = 1;
    for (int p = 0; p < n_; ++p) {
      if (k[p] == 0) return;
      size *= k[p] + 1;
      if (size > (std::uint64_t{1} << 20)) return;
    }
    cap_ = k;
    stride_.assign(n_, 1);
    for (int p = n_ - 1; p > 0; --p) stride_[p - 1] = stride_[p] * (cap_[p] + 1);
    table_.assign(size, 0);
    for (const auto& g : I.gens()) table_[index(elem_exponents(P, g))] = 1;
    // Indices grow with every coordinate, so predecessors are already final.
    std::vector<Exponent> a(n_, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::size_t r = idx;
      for (int p = 0; p < n_; ++p) {
        a[p] = static_cast<Exponent>(r / stride_[p]);
        r %= stride_[p];
      }
      if (table_[idx]) continue;
      for (int p = 0; p < n_; ++p)
        if (a[p] > 0 && table_[idx - stride_[p]]) {
          table_[idx] = 1;
          break;
        }
    }
  }

  bool contains(const std::vector<Exponent>& a) const {
    if (table_.empty()) return I_.contains(elem_monomial(a));
    return table_[index(a)] != 0;
  }

 private:
  std::size_t index(const std::vector<Exponent>& a) const {
    std::size_t idx = 0;
    for (int p = 0; p < n_; ++p) idx += std::min(a[p], cap_[p]) * stride_[p];
    return idx;
  }

  const MonomialIdeal& I_;
  int n_;
  std::vector<Exponent> cap_;
  std::vector<std::size_t> stride_;
  std::vector<char> table_;
};

template <typename Contains, typename Visit>
void for_each_standard_dense(int n, std::optional<std::uint64_t> max_deg, const Contains& in_I, Visit&& visit) {
  std::vector<Exponent> a(n, 0);
  std::function<void(int, std::uint64_t)> rec = [&](int p, std::uint64_t deg) {
    if (p == n) {
      visit(a);
      return;
    }
    for (Exponent e = 0;; ++e) {
      a[p] = e;
      if (max_deg && deg + e > *max_deg) break;
      if (in_I(a)) break;
      rec(p + 1, deg + e);
    }
    a[p] = 0;
  };
  rec(0, 0);
}

}  // namespace detail

/// Visits every monomial outside I of degree <= max_deg (all of them if max_deg
/// is empty and I is artinian). Standard monomials are closed under division,
/// so the search stops along a variable as soon as it enters I.
template <typename Visit>
void for_each_standard(const Poset& P, const MonomialIdeal& I, std::optional<std::uint64_t> max_deg,
                       Visit&& visit) {
  detail::DenseMembership mem(P, I);
  detail::for_each_standard_dense(P.size(), max_deg, [&](const std::vector<Exponent>& a) { return mem.contains(a); },
                                  std::forward<Visit>(visit));
}

inline bool is_artinian(const Poset& P, const MonomialIdeal& I) {
  for (int p = 0; p < P.size(); ++p) {
    bool pure = std::any_of(I.gens().begin(), I.gens().end(), [&](const Monomial& g) {
      return g.terms().size() == 1 && g.terms()[0].first == VarIndex::elem(p);
    });
    bool unit = I.is_unit();
    if (!pure && !unit) return false;
  }
  return true;
}

enum class StableMode { Exact, Bounded };

struct StableOptions {
  StableMode mode = StableMode::Exact;
  std::optional<std::uint64_t> bound;  // bounded mode degree D; default maxdeg + 2
};

namespace detail {

/// Lambda-bar preimage of the standard monomials must be closed under lower
/// covers of Hom(P,N) (lower one value by one where isotonicity allows).
inline bool p_stable_exact(const Poset& P, const MonomialIdeal& I) {
  if (!is_artinian(P, I)) throw Error(Errc::NotArtinian, "exact P-stability needs an artinian ideal");
  const int np = P.size();
  DenseMembership mem(P, I);
  std::vector<ElementMask> strictly_below(np);
  for (int p = 0; p < np; ++p) strictly_below[p] = P.down_set(p) & ~bit(p);
  bool ok = true;
  std::vector<Exponent> lowered(np);
  for_each_standard_dense(np, std::nullopt, [&](const std::vector<Exponent>& a) { return mem.contains(a); },
                          [&](const std::vector<Exponent>& a) {
    if (!ok) return;
    IsotoneMap phi = lambda_bar_inv(P, elem_monomial(a));
    for (int p = 0; p < np && ok; ++p) {
      IsotoneMap lower = phi;
      if (--lower.values[p] < 0 || !is_isotone(P, lower.values, P.all())) continue;
      for (int q = 0; q < np; ++q) {
        int floor = 0;
        for (int r : mask_members(strictly_below[q])) floor = std::max(floor, lower(r));
        lowered[q] = static_cast<Exponent>(std::max(0, lower(q) - floor));
      }
      if (mem.contains(lowered)) ok = false;
    }
  });
  return ok;
}

/// Weight of the heaviest chain inside `cand`; `topo` is a linear extension.
inline int chain_weight(const Poset& P, const std::vector<int>& topo, ElementMask cand,
                        const std::vector<Exponent>& w) {
  int best[kMaxPosetSize];
  int top = 0;
  for (int p : topo) {
    if (!has(cand, p)) continue;
    int below = 0;
    for (int q : mask_members(P.down_set(p) & cand & ~bit(p))) below = std::max(below, best[q]);
    best[p] = below + static_cast<int>(w[p]);
    top = std::max(top, best[p]);
  }
  return top;
}

/// The definition, restricted to monomials m in I of degree <= D. A violation
/// needs n * x_a outside I, so the search runs over standard monomials u of
/// degree <= D and rebuilds m = (u / x_a) * m_B. Membership of a in the
/// "through" set of b matches longest_b_chain.
inline bool p_stable_bounded(const Poset& P, const MonomialIdeal& I, std::uint64_t D) {
  const int np = P.size();
  std::vector<ElementMask> antichains;
  for (ElementMask B = 1; B <= P.all() && B != 0; ++B)
    if (is_antichain(P, B)) antichains.push_back(B);
  std::vector<int> topo(np);
  for (int p = 0; p < np; ++p) topo[p] = p;
  std::sort(topo.begin(), topo.end(),
            [&](int x, int y) { return std::popcount(P.down_set(x)) < std::popcount(P.down_set(y)); });
  std::vector<ElementMask> comparable(np, 0);
  for (int a = 0; a < np; ++a) comparable[a] = P.down_set(a) | P.up_set(a);
  DenseMembership mem(P, I);
  auto in_I = [&](const std::vector<Exponent>& a) { return mem.contains(a); };
  bool ok = true;
  std::vector<Exponent> n(np), m(np);
  for_each_standard_dense(np, D, in_I, [&](const std::vector<Exponent>& u) {
    if (!ok) return;
    for (int a = 0; a < np && ok; ++a) {
      if (u[a] == 0) continue;
      n = u;
      --n[a];
      std::uint64_t deg_n = 0;
      for (auto e : n) deg_n += e;
      for (ElementMask B : antichains) {
        if (deg_n + std::popcount(B) > D) continue;
        // a must lie below every b in B to be insertable into a b-chain.
        if ((B & ~P.up_set(a)) != 0) continue;
        m = n;
        for (int b : mask_members(B)) ++m[b];
        if (!in_I(m)) continue;
        ElementMask supp = 0;
        for (int p = 0; p < np; ++p)
          if (m[p] > 0) supp |= bit(p);
        bool all_through = true;
        for (int b : mask_members(B)) {
          ElementMask cand = supp & P.down_set(b);
          if (chain_weight(P, topo, cand & comparable[a], m) != chain_weight(P, topo, cand, m)) {
            all_through = false;
            break;
          }
        }
        if (all_through) {
          ok = false;
          return;
        }
      }
    }
  });
  return ok;
}

}  // namespace detail

inline bool is_p_stable(const Poset& P, const MonomialIdeal& I, const StableOptions& opt = {}) {
  for (const auto& v : I.support()) {
    if (v.family != VarFamily::Elem) throw Error(Errc::InvalidInput, "expected x[p] variables");
    if (v.p < 0 || v.p >= P.size()) throw Error(Errc::IdentifierOutOfRange, "variable outside P");
  }
  if (opt.mode == StableMode::Exact) return detail::p_stable_exact(P, I);
  std::uint64_t D = opt.bound ? *opt.bound : I.max_degree() + 2;
  return detail::p_stable_bounded(P, I, D);
}

/// All monomials of degree d in the element variables.
inline MonomialIdeal max_ideal_power(const Poset& P, unsigned d) {
  std::vector<Monomial> gens;
  std::vector<Exponent> a(P.size(), 0);
  std::function<void(int, unsigned)> rec = [&](int p, unsigned left) {
    if (p == P.size() - 1) {
      a[p] = left;
      gens.push_back(elem_monomial(a));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      a[p] = e;
      rec(p + 1, left - e);
    }
  };
  if (P.size() == 0) return MonomialIdeal::zero();
  rec(0, d);
  return MonomialIdeal(std::move(gens));
}

struct PowerStability {
  bool stable = false;  // exact P-stability of m^d
  bool forest = false;  // every element has at most one upper cover
};

inline PowerStability max_ideal_power_stable(const Poset& P, unsigned d) {
  if (d < 2) throw Error(Errc::InvalidInput, "power must be at least 2");
  return {is_p_stable(P, max_ideal_power(P, d)), is_top_rooted_forest(P)};
}

/// The prime generated by the variables of S.
inline MonomialIdeal prime_of(ElementMask S) {
  std::vector<Monomial> gens;
  for (int p : mask_members(S)) gens.push_back(Monomial::var(VarIndex::elem(p)));
  return MonomialIdeal(std::move(gens));
}

/// The ideal generated by lambda_bar of the complement maps with values <= nmax.
inline MonomialIdeal lambda_bar_image(const HomIdeal& J) {
  std::vector<Monomial> gens;
  if (J.complement_gens().empty()) return MonomialIdeal::zero();
  for_each_isotone(J.poset(), J.poset().all(), J.nmax(), [&](const std::vector<int>& v) {
    IsotoneMap psi{v};
    if (!J.member(psi)) gens.push_back(lambda_bar(J.poset(), psi));
  });
  return MonomialIdeal(std::move(gens));
}

struct WeakeningWitness {
  Poset P;
  Poset Q;
  IsotoneMap alpha;   // principal ideal J(alpha) in Hom(P,N)
  IsotoneMap image;   // an element of the transported set
  IsotoneMap below;   // a map below `image` in Hom(Q,N) missing from the set
};

/// Looks for an order weakening Q of P (same elements, fewer relations) and a
/// principal ideal J of Hom(P,N) such that lambda_bar_Q^-1(lambda_bar_P(J)) is not
/// a poset ideal of Hom(Q,N). Diagnostic only.
inline std::optional<WeakeningWitness> find_weakening_counterexample(int n, int max_value) {
  for (const Poset& P : enumerate_natural_posets(n)) {
    const auto& rel = P.covers();
    // Weakenings: drop any subset of the cover relations.
    for (std::uint32_t keep = 0; keep + 1 < (std::uint32_t{1} << rel.size()); ++keep) {
      std::vector<std::pair<int, int>> kept;
      for (std::size_t k = 0; k < rel.size(); ++k)
        if ((keep >> k) & 1U) kept.push_back(rel[k]);
      Poset Q(n, kept);
      for (const auto& alpha : enumerate_isotone(P, max_value)) {
        std::vector<IsotoneMap> image;
        for_each_isotone(P, P.all(), max_value, [&](const std::vector<int>& v) {
          if (leq_pointwise(v, alpha.values)) image.push_back(lambda_bar_inv(Q, lambda_bar(P, IsotoneMap{v})));
        });
        std::sort(image.begin(), image.end());
        for (const auto& phi : image)
          for (int p = 0; p < n; ++p) {
            IsotoneMap lower = phi;
            if (--lower.values[p] < 0 || !is_isotone(Q, lower.values, Q.all())) continue;
            if (!std::binary_search(image.begin(), image.end(), lower))
              return WeakeningWitness{P, Q, alpha, phi, lower};
          }
      }
    }
  }
  return std::nullopt;
}

}  // namespace letterplace
