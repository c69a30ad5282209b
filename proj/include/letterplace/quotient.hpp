#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "letterplace/letterplace.hpp"

namespace letterplace {

/// A map from a finite S in P x N to target variables. `target[k]` is the image
/// of `source[k]`.
struct FiberMap {
  PairSet source;
  std::vector<VarIndex> target;
};

enum class FiberKind { RightStrict, LeftStrict, Both, Neither };

inline std::string fiber_kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::RightStrict: return "RightStrict";
    case FiberKind::LeftStrict: return "LeftStrict";
    case FiberKind::Both: return "Both";
    case FiberKind::Neither: return "Neither";
  }
  return "?";
}

inline FiberMap identity_map(const PairSet& S) {
  FiberMap f{S, {}};
  for (std::size_t k = 0; k < S.size(); ++k) f.target.push_back(VarIndex::target(static_cast<int>(k)));
  return f;
}

/// (p,i) -> x[p]
inline FiberMap projection_p1(const PairSet& S) {
  FiberMap f{S, {}};
  for (auto [p, i] : S) f.target.push_back(VarIndex::elem(p));
  return f;
}

/// (p,i) -> x[i]
inline FiberMap projection_p2(const PairSet& S) {
  FiberMap f{S, {}};
  for (auto [p, i] : S) f.target.push_back(VarIndex::nat(i));
  return f;
}

inline std::map<VarIndex, std::vector<std::pair<int, int>>> fibers(const FiberMap& f) {
  std::map<VarIndex, std::vector<std::pair<int, int>>> out;
  for (std::size_t k = 0; k < f.source.size(); ++k) out[f.target[k]].push_back(f.source[k]);
  return out;
}

/// Comparable in P^op x N.
inline bool comparable_op(const Poset& P, std::pair<int, int> s, std::pair<int, int> t) {
  bool s_le_t = P.leq(t.first, s.first) && s.second <= t.second;
  bool t_le_s = P.leq(s.first, t.first) && t.second <= s.second;
  return s_le_t || t_le_s;
}

inline bool fiber_is_strict(const Poset& P, const std::vector<std::pair<int, int>>& fib, bool right) {
  for (std::size_t a = 0; a < fib.size(); ++a)
    for (std::size_t b = a + 1; b < fib.size(); ++b) {
      if (!comparable_op(P, fib[a], fib[b])) return false;
      if (right ? fib[a].second == fib[b].second : fib[a].first == fib[b].first) return false;
    }
  return true;
}

inline FiberKind fiber_kind(const Poset& P, const FiberMap& f) {
  bool right = true, left = true;
  for (const auto& [r, fib] : fibers(f)) {
    right = right && fiber_is_strict(P, fib, true);
    left = left && fiber_is_strict(P, fib, false);
  }
  if (right && left) return FiberKind::Both;
  if (right) return FiberKind::RightStrict;
  if (left) return FiberKind::LeftStrict;
  return FiberKind::Neither;
}

/// A partial order on the target exists making f isotone iff the relation
/// induced from the product order on S has no cycle through distinct targets.
inline bool admits_isotone_order(const Poset& P, const FiberMap& f) {
  std::map<VarIndex, int> id;
  for (const auto& t : f.target) id.emplace(t, 0);
  int n = 0;
  for (auto& [t, k] : id) k = n++;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < f.source.size(); ++a)
    for (std::size_t b = 0; b < f.source.size(); ++b) {
      auto [p, i] = f.source[a];
      auto [q, j] = f.source[b];
      if (P.leq(p, q) && i <= j) reach[id[f.target[a]]][id[f.target[b]]] = true;
    }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (reach[a][k])
        for (int b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (reach[a][b] && reach[b][a]) return false;
  return true;
}

/// Substitutes x[s] -> x[f(s)] in each generator and minimalizes.
inline MonomialIdeal project_ideal(const MonomialIdeal& I, const FiberMap& f) {
  std::map<VarIndex, VarIndex> sub;
  for (std::size_t k = 0; k < f.source.size(); ++k)
    sub.emplace(VarIndex::x(f.source[k].first, f.source[k].second), f.target[k]);
  auto image = [&](const VarIndex& v) {
    auto it = sub.find(v);
    if (it == sub.end())
      throw Error(Errc::VariableOutsideSource, var_to_string(v) + " is not in the source of the map");
    return it->second;
  };
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : g.terms()) entries.emplace_back(image(v), e);
    gens.emplace_back(std::move(entries));
  }
  std::vector<VarIndex> universe;
  for (const auto& v : I.universe()) universe.push_back(image(v));
  return MonomialIdeal(std::move(gens), std::move(universe));
}

struct RegularCheck {
  bool holds = false;
  KPoly source_numerator;
  KPoly target_numerator;
  std::size_t source_vars = 0;
  std::size_t target_vars = 0;
};

/// Cutting by a regular sequence of |S| - |R| linear forms keeps the Hilbert
/// series numerator: HS_S(I) (1-t)^(|S|-|R|) = HS_R(image) with
/// HS = K / (1-t)^vars, i.e. K_R(image) = K_S(I).
inline RegularCheck regular_quotient_check(const MonomialIdeal& I, const FiberMap& f) {
  RegularCheck r;
  MonomialIdeal J = project_ideal(I, f);
  r.source_numerator = hilbert_numerator(I);
  r.target_numerator = hilbert_numerator(J);
  r.source_vars = f.source.size();
  std::vector<VarIndex> t = f.target;
  std::sort(t.begin(), t.end());
  r.target_vars = static_cast<std::size_t>(std::unique(t.begin(), t.end()) - t.begin());
  r.holds = r.source_numerator == r.target_numerator;
  return r;
}

/// Merges singleton fibers at random, keeping a merge only if every fiber stays
/// strict of the requested kind and the map stays isotone for some order on R.
inline FiberMap random_strict_merge(const Poset& P, const PairSet& S, bool right, std::mt19937_64& rng,
                                    int attempts = 64) {
  FiberMap f = identity_map(S);
  if (S.size() < 2) return f;
  std::uniform_int_distribution<std::size_t> pick(0, S.size() - 1);
  for (int k = 0; k < attempts; ++k) {
    std::size_t a = pick(rng), b = pick(rng);
    VarIndex ta = f.target[a], tb = f.target[b];
    if (ta == tb) continue;
    FiberMap g = f;
    for (auto& t : g.target)
      if (t == tb) t = ta;
    std::vector<std::pair<int, int>> fib;
    for (std::size_t s = 0; s < S.size(); ++s)
      if (g.target[s] == ta) fib.push_back(S[s]);
    if (fiber_is_strict(P, fib, right) && admits_isotone_order(P, g)) f = std::move(g);
  }
  return f;
}

}  // namespace letterplace
