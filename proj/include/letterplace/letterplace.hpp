#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "letterplace/homset.hpp"
#include "letterplace/monomial.hpp"

namespace letterplace {

/// A finite subset of P x N, sorted.
using PairSet = std::vector<std::pair<int, int>>;

/// {(p,i) : phi(q) <= i < phi(p) for all q < p}
inline PairSet ascent(const Poset& P, const IsotoneMap& phi) {
  check_isotone(P, phi);
  PairSet out;
  for (int p = 0; p < P.size(); ++p) {
    int floor = 0;
    for (int q : mask_members(P.down_set(p) & ~bit(p))) floor = std::max(floor, phi(q));
    for (int i = floor; i < phi(p); ++i) out.emplace_back(p, i);
  }
  return out;
}

inline PairSet graph(const IsotoneMap& phi) {
  PairSet out;
  for (int p = 0; p < phi.size(); ++p) out.emplace_back(p, phi(p));
  return out;
}

inline PairSet graph(const Marker& m) { return marker_graph(m); }

/// m_S, the squarefree monomial on the x-variables indexed by S.
inline Monomial pair_monomial(const PairSet& S) {
  std::vector<VarIndex> vars;
  for (auto [p, i] : S) vars.push_back(VarIndex::x(p, i));
  return Monomial::squarefree(vars);
}

inline std::vector<VarIndex> pair_vars(const PairSet& S) {
  std::vector<VarIndex> out;
  for (auto [p, i] : S) out.push_back(VarIndex::x(p, i));
  return out;
}

inline PairSet vars_to_pairs(const std::vector<VarIndex>& vars) {
  PairSet out;
  for (const auto& v : vars) {
    if (v.family != VarFamily::X) throw Error(Errc::InvalidInput, "expected x[p,i] variables");
    out.emplace_back(v.p, v.i);
  }
  return out;
}

/// Display labels of P for the p index of x[p,i].
inline LabelFn poset_labels(const Poset& P) {
  return [P](int p) { return P.label(p); };
}

namespace detail {

inline std::vector<Monomial> letterplace_monomials(const HomIdeal& J) {
  const Poset& P = J.poset();
  std::vector<Monomial> gens;
  if (J.complement_gens().empty()) return gens;
  // Only maps with values <= nmax can have inclusion minimal ascents.
  for_each_isotone(P, P.all(), J.nmax(), [&](const std::vector<int>& v) {
    IsotoneMap psi{v};
    if (!J.member(psi)) gens.push_back(pair_monomial(ascent(P, psi)));
  });
  return gens;
}

inline std::vector<Monomial> coletterplace_monomials(const HomIdeal& J) {
  std::vector<Monomial> gens;
  for (const auto& m : minimal_markers(J)) gens.push_back(pair_monomial(marker_graph(m)));
  return gens;
}

}  // namespace detail

/// Variables of the minimal generators of the letterplace ideal.
inline PairSet support(const HomIdeal& J) {
  return vars_to_pairs(MonomialIdeal(detail::letterplace_monomials(J)).support());
}

/// L(J,P): generated by the ascent monomials of the maps in the complement of J.
/// Empty J gives the unit ideal (the zero map has empty ascent); J = Hom(P,N)
/// gives the zero ideal.
inline MonomialIdeal letterplace_ideal(const HomIdeal& J) {
  MonomialIdeal I(detail::letterplace_monomials(J));
  return I.with_universe(I.support());
}

/// L(P,J): generated by the graph monomials of the minimal markers.
inline MonomialIdeal coletterplace_ideal(const HomIdeal& J) {
  MonomialIdeal I(detail::coletterplace_monomials(J));
  return I.with_universe(I.support());
}

/// {(p,i) : i <= alpha(p)}, the support of a finite ideal with hull alpha.
inline PairSet hull_support(const IsotoneMap& alpha) {
  PairSet out;
  for (int p = 0; p < alpha.size(); ++p)
    for (int i = 0; i <= alpha(p); ++i) out.emplace_back(p, i);
  return out;
}

/// Generators of L(alpha, P) read off multichains p_0 <= ... <= p_r with
/// alpha(p_r) = r and alpha(p_j) > j for j < r; the monomial is prod x[p_j, j].
inline MonomialIdeal principal_letterplace_gens(const Poset& P, const IsotoneMap& alpha) {
  check_isotone(P, alpha);
  std::vector<Monomial> gens;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int p) {
    int j = static_cast<int>(chain.size());
    chain.push_back(p);
    if (alpha(p) == j) {
      std::vector<VarIndex> vars;
      for (int k = 0; k <= j; ++k) vars.push_back(VarIndex::x(chain[k], k));
      gens.push_back(Monomial::squarefree(vars));
    } else {
      for (int q : mask_members(P.up_set(p))) extend(q);
    }
    chain.pop_back();
  };
  for (int p = 0; p < P.size(); ++p) extend(p);
  MonomialIdeal I(std::move(gens));
  return I.with_universe(I.support());
}

}  // namespace letterplace
