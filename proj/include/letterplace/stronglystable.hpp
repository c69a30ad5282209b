#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "letterplace/pstable.hpp"
#include "letterplace/quotient.hpp"

namespace letterplace {

/// Position of a variable in the total order x_1 < x_2 < ... (Elem, index p) or
/// x_0 < x_1 < ... (Nat, index i). Smaller position means "earlier" variable.
inline int ss_rank(const VarIndex& v) {
  if (v.family == VarFamily::Elem) return v.p;
  if (v.family == VarFamily::Nat) return v.i;
  throw Error(Errc::InvalidInput, "strong stability needs x[p] or x[i] variables");
}

inline VarIndex ss_var(VarFamily fam, int rank) {
  return fam == VarFamily::Elem ? VarIndex::elem(rank) : VarIndex::nat(rank);
}

/// x_j | g, g in I, i < j  =>  x_i g / x_j in I, checked on minimal generators.
inline bool is_strongly_stable(const MonomialIdeal& I) {
  std::optional<VarFamily> fam;
  for (const auto& v : I.support()) {
    ss_rank(v);
    if (fam && *fam != v.family) throw Error(Errc::InvalidInput, "mixed variable families");
    fam = v.family;
  }
  for (const auto& g : I.gens())
    for (const auto& [v, e] : g.terms()) {
      Monomial rest = g / Monomial::var(v);
      for (int i = 0; i < ss_rank(v); ++i)
        if (!I.contains(rest * Monomial::var(ss_var(v.family, i)))) return false;
    }
  return true;
}

inline void require_chain(const Poset& P) {
  if (!is_chain(P, P.all())) throw Error(Errc::NotAChain, "poset is not a chain");
}

/// Projection p1 of the letterplace ideal, on x_1..x_m indexed by chain rank.
inline MonomialIdeal ss_from_homideal(const HomIdeal& J) {
  const Poset& P = J.poset();
  require_chain(P);
  auto rank = *chain_ranks(P);
  MonomialIdeal L = letterplace_ideal(J);
  FiberMap f;
  for (int p = 0; p < P.size(); ++p)
    for (int i = 0; i <= J.nmax(); ++i) {
      f.source.emplace_back(p, i);
      f.target.push_back(VarIndex::elem(rank[p]));
    }
  MonomialIdeal out = project_ideal(L, f);
  if (!is_strongly_stable(out)) throw std::logic_error("projected letterplace ideal is not strongly stable");
  return out;
}

/// Inverse of ss_from_homideal. On a chain, u | w implies lambda_bar_inv(u) <=
/// lambda_bar_inv(w) (values are partial degrees), so the complement filter is
/// generated by the preimages of the generators.
inline HomIdeal homideal_from_ss(const MonomialIdeal& I, int m) {
  Poset P = chain_poset(m);
  for (const auto& v : I.support())
    if (v.family != VarFamily::Elem || v.p < 0 || v.p >= m)
      throw Error(Errc::IdentifierOutOfRange, var_to_string(v) + " is not one of x_1..x_m");
  if (!is_strongly_stable(I)) throw Error(Errc::NotStronglyStable, "ideal is not strongly stable");
  std::vector<IsotoneMap> gens;
  for (const auto& g : I.gens()) gens.push_back(lambda_bar_inv(P, g));
  return HomIdeal::cofinite(std::move(P), std::move(gens));
}

/// Projection p2 of a co-letterplace ideal over a chain, into x_0, x_1, ...
inline MonomialIdeal p2_of_coletterplace(const HomIdeal& J) {
  MonomialIdeal C = coletterplace_ideal(J);
  return project_ideal(C, projection_p2(vars_to_pairs(C.universe())));
}

/// Strongly stable ideal in x_1..x_m  ->  m-regular strongly stable ideal in x_0, x_1, ...
inline MonomialIdeal dualize_ss(const MonomialIdeal& I, int m) {
  MonomialIdeal out = p2_of_coletterplace(homideal_from_ss(I, m));
  if (!is_strongly_stable(out)) throw std::logic_error("projected co-letterplace ideal is not strongly stable");
  return out;
}

/// prod_a x[phi(a)], the projected graph monomial.
inline Monomial gamma_bar(const IsotoneMap& phi) {
  std::vector<Monomial::Entry> entries;
  for (int v : phi.values) entries.emplace_back(VarIndex::nat(v), 1);
  return Monomial(std::move(entries));
}

/// Hom([m],[n]_0) = Hom([n],[m]_0): phi'(k) = #{a : phi(a) >= n + 1 - k}.
inline IsotoneMap conjugate(const IsotoneMap& phi, int n) {
  IsotoneMap out{std::vector<int>(n, 0)};
  for (int k = 1; k <= n; ++k)
    for (int v : phi.values)
      if (v >= n + 1 - k) ++out.values[k - 1];
  return out;
}

/// The finite duality on Hom([m],[n]_0). Input: a strongly stable ideal in
/// x_0..x_n whose generators have degree <= m; it is read through its degree m
/// part J = {phi : gamma_bar(phi) in I}. Output: the p2 projection of the
/// co-letterplace ideal of the conjugate ideal J' in Hom([n],[m]_0), a strongly
/// stable ideal in x_0..x_m generated in degree n. Applying it twice returns the
/// ideal generated by the degree m part of the input.
inline MonomialIdeal dualize_bounded(const MonomialIdeal& I, int m, int n) {
  for (const auto& v : I.support())
    if (v.family != VarFamily::Nat || v.i < 0 || v.i > n)
      throw Error(Errc::IdentifierOutOfRange, var_to_string(v) + " is not one of x_0..x_n");
  if (I.max_degree() > static_cast<std::uint64_t>(m))
    throw Error(Errc::InvalidInput, "generators must have degree <= m");
  if (!is_strongly_stable(I)) throw Error(Errc::NotStronglyStable, "ideal is not strongly stable");
  std::vector<IsotoneMap> dual;
  for (const auto& phi : enumerate_isotone(chain_poset(m), n))
    if (I.contains(gamma_bar(phi))) dual.push_back(conjugate(phi, n));
  MonomialIdeal out = p2_of_coletterplace(HomIdeal::finite(chain_poset(n), std::move(dual)));
  return out;
}

/// All strongly stable ideals of x_0..x_n generated in degree m, i.e. poset
/// ideals of Hom([m],[n]_0), as generator lists (the zero ideal included).
inline std::vector<MonomialIdeal> all_ss_in_degree(int m, int n) {
  Poset H;
  auto maps = enumerate_isotone(chain_poset(m), n);
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = 0; b < maps.size(); ++b)
      if (a != b && leq(maps[a], maps[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  H = Poset(static_cast<int>(maps.size()), rel);
  std::vector<MonomialIdeal> out;
  for (ElementMask ideal : all_poset_ideals(H)) {
    std::vector<Monomial> gens;
    for (int k : mask_members(ideal)) gens.push_back(gamma_bar(maps[k]));
    out.emplace_back(std::move(gens));
  }
  return out;
}

}  // namespace letterplace
