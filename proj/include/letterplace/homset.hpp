#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "letterplace/error.hpp"
#include "letterplace/poset.hpp"

namespace letterplace {

/// A total isotone map P -> N, stored as its value sequence.
struct IsotoneMap {
  std::vector<int> values;

  int operator()(int p) const { return values[p]; }
  int size() const { return static_cast<int>(values.size()); }
  auto operator<=>(const IsotoneMap&) const = default;
};

/// A partial isotone map defined on the poset ideal `domain`. Values outside the
/// domain are stored as -1.
struct Marker {
  ElementMask domain = 0;
  std::vector<int> values;

  auto operator<=>(const Marker&) const = default;
};

inline bool leq_pointwise(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool leq(const IsotoneMap& a, const IsotoneMap& b) { return leq_pointwise(a.values, b.values); }

inline bool is_isotone(const Poset& P, const std::vector<int>& v, ElementMask domain) {
  for (auto [lo, hi] : P.covers())
    if (has(domain, lo) && has(domain, hi) && v[lo] > v[hi]) return false;
  return true;
}

inline void check_isotone(const Poset& P, const IsotoneMap& phi) {
  if (phi.size() != P.size())
    throw Error(Errc::MixedPosets, "map has " + std::to_string(phi.size()) +
                                       " values, poset has " + std::to_string(P.size()));
  for (int v : phi.values)
    if (v < 0) throw Error(Errc::InvalidInput, "negative value in isotone map");
  if (!is_isotone(P, phi.values, P.all())) throw Error(Errc::NotIsotone, "map is not order preserving");
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Calls `visit` on every isotone map domain -> [0,N] (values outside the domain
/// are -1), in lexicographic order of value sequences.
template <typename Visit>
void for_each_isotone(const Poset& P, ElementMask domain, int N, Visit&& visit,
                      std::uint64_t cap = kDefaultEnumerationCap) {
  const int n = P.size();
  std::vector<int> vals(n, -1);
  std::vector<int> elems = mask_members(domain);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == elems.size()) {
      if (++count > cap) throw Error(Errc::ExplosionGuard, "isotone enumeration exceeds cap");
      visit(vals);
      return;
    }
    int p = elems[k];
    int lo = 0, hi = N;
    for (std::size_t j = 0; j < k; ++j) {
      int q = elems[j];
      if (P.lt(q, p)) lo = std::max(lo, vals[q]);
      if (P.lt(p, q)) hi = std::min(hi, vals[q]);
    }
    for (int v = lo; v <= hi; ++v) {
      vals[p] = v;
      rec(k + 1);
    }
    vals[p] = -1;
  };
  if (N < 0) return;
  rec(0);
}

/// All total isotone maps P -> {0..N}, lexicographically ordered.
inline std::vector<IsotoneMap> enumerate_isotone(const Poset& P, int N,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<IsotoneMap> out;
  for_each_isotone(P, P.all(), N, [&](const std::vector<int>& v) { out.push_back({v}); }, cap);
  return out;
}

/// The pointwise-minimal elements, sorted lexicographically.
inline std::vector<IsotoneMap> minimal_of(std::vector<IsotoneMap> maps) {
  if (!maps.empty())
    for (const auto& m : maps)
      if (m.size() != maps.front().size()) throw Error(Errc::MixedPosets, "maps on different posets");
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  std::vector<IsotoneMap> out;
  for (const auto& m : maps) {
    bool dominated = false;
    for (const auto& o : maps)
      if (o != m && leq(o, m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

struct Principal {
  IsotoneMap hull;
};
struct ExplicitFinite {
  std::vector<IsotoneMap> maps;
};
struct CofiniteFilter {
  std::vector<IsotoneMap> gens;
};

/// A poset ideal of Hom(P,N).
class HomIdeal {
 public:
  using Repr = std::variant<Principal, ExplicitFinite, CofiniteFilter>;

  static HomIdeal principal(Poset P, IsotoneMap alpha) {
    check_isotone(P, alpha);
    return HomIdeal(std::move(P), Principal{std::move(alpha)});
  }

  /// Rejects sets that are not closed under lower covers.
  static HomIdeal finite(Poset P, std::vector<IsotoneMap> maps) {
    for (const auto& m : maps) check_isotone(P, m);
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    for (const auto& m : maps)
      for (int p = 0; p < P.size(); ++p) {
        IsotoneMap lower = m;
        if (--lower.values[p] < 0 || !is_isotone(P, lower.values, P.all())) continue;
        if (!std::binary_search(maps.begin(), maps.end(), lower))
          throw Error(Errc::InvalidInput, "finite set is not downward closed in Hom(P,N)");
      }
    return HomIdeal(std::move(P), ExplicitFinite{std::move(maps)});
  }

  /// The ideal whose complement filter is generated by `gens` (redundant ones dropped).
  static HomIdeal cofinite(Poset P, std::vector<IsotoneMap> gens) {
    for (const auto& g : gens) check_isotone(P, g);
    return HomIdeal(std::move(P), CofiniteFilter{minimal_of(std::move(gens))});
  }

  const Poset& poset() const { return P_; }
  const Repr& repr() const { return repr_; }
  bool is_finite() const { return !std::holds_alternative<CofiniteFilter>(repr_); }

  bool member(const IsotoneMap& phi) const {
    if (auto* pr = std::get_if<Principal>(&repr_)) return leq(phi, pr->hull);
    if (auto* fin = std::get_if<ExplicitFinite>(&repr_))
      return std::binary_search(fin->maps.begin(), fin->maps.end(), phi);
    for (const auto& g : std::get<CofiniteFilter>(repr_).gens)
      if (leq(g, phi)) return false;
    return true;
  }

  /// Minimal generators of the complement filter, lexicographically sorted.
  const std::vector<IsotoneMap>& complement_gens() const { return comp_; }

  /// Largest value over the complement generators (0 when there are none).
  int nmax() const {
    int N = 0;
    for (const auto& g : comp_)
      for (int v : g.values) N = std::max(N, v);
    return N;
  }

  /// The same ideal in cofinite-filter form.
  HomIdeal canonical() const { return HomIdeal(P_, CofiniteFilter{comp_}); }

 private:
  HomIdeal(Poset P, Repr r) : P_(std::move(P)), repr_(std::move(r)) { comp_ = compute_complement(); }

  std::vector<IsotoneMap> compute_complement() const {
    const int n = P_.size();
    if (auto* pr = std::get_if<Principal>(&repr_)) {
      std::vector<IsotoneMap> out;
      for (int p = 0; p < n; ++p) {
        IsotoneMap psi{std::vector<int>(n, 0)};
        for (int q : mask_members(P_.up_set(p))) psi.values[q] = pr->hull(p) + 1;
        out.push_back(psi);
      }
      return minimal_of(std::move(out));
    }
    if (auto* fin = std::get_if<ExplicitFinite>(&repr_)) {
      if (fin->maps.empty()) return {IsotoneMap{std::vector<int>(n, 0)}};
      int N = 0;
      for (const auto& m : fin->maps)
        for (int v : m.values) N = std::max(N, v);
      std::vector<IsotoneMap> outside;
      for_each_isotone(P_, P_.all(), N + 1, [&](const std::vector<int>& v) {
        IsotoneMap phi{v};
        if (!std::binary_search(fin->maps.begin(), fin->maps.end(), phi)) outside.push_back(phi);
      });
      return minimal_of(std::move(outside));
    }
    return std::get<CofiniteFilter>(repr_).gens;
  }

  Poset P_;
  Repr repr_;
  std::vector<IsotoneMap> comp_;
};

inline bool member(const HomIdeal& J, const IsotoneMap& phi) { return J.member(phi); }
inline std::vector<IsotoneMap> complement_filter_gens(const HomIdeal& J) { return J.complement_gens(); }

/// (I, alpha) is a marker iff every complement generator psi exceeds alpha
/// somewhere on I: values off I can be raised freely, so an extension lands in
/// the complement exactly when some psi is <= alpha on I.
inline bool is_marker(const HomIdeal& J, const Marker& m) {
  for (const auto& psi : J.complement_gens()) {
    bool escapes = false;
    for (int p : mask_members(m.domain))
      if (m.values[p] < psi(p)) {
        escapes = true;
        break;
      }
    if (!escapes) return false;
  }
  return true;
}

/// Definitional marker check: every isotone extension with values <= bound is in J.
/// Exhaustive oracle for tests.
inline bool is_marker_bruteforce(const HomIdeal& J, const Marker& m, int bound) {
  const Poset& P = J.poset();
  bool ok = true;
  for_each_isotone(P, P.all(), bound, [&](const std::vector<int>& v) {
    if (!ok) return;
    for (int p : mask_members(m.domain))
      if (v[p] != m.values[p]) return;
    if (!J.member(IsotoneMap{v})) ok = false;
  });
  return ok;
}

/// The graph {(p, alpha(p))} as a set of pairs.
inline std::vector<std::pair<int, int>> marker_graph(const Marker& m) {
  std::vector<std::pair<int, int>> g;
  for (int p : mask_members(m.domain)) g.emplace_back(p, m.values[p]);
  return g;
}

inline bool graph_contains(const Marker& big, const Marker& small) {
  if ((small.domain & ~big.domain) != 0) return false;
  for (int p : mask_members(small.domain))
    if (big.values[p] != small.values[p]) return false;
  return true;
}

/// Markers whose graphs are inclusion minimal. Candidate values are bounded by
/// nmax(): a maximal element of I with a larger value never witnesses the marker
/// condition and could be dropped.
inline std::vector<Marker> minimal_markers(const HomIdeal& J, std::uint64_t cap = kDefaultEnumerationCap) {
  const Poset& P = J.poset();
  const int N = J.nmax();
  std::vector<Marker> markers;
  std::uint64_t seen = 0;
  for (ElementMask I : all_poset_ideals(P)) {
    ElementMask tops = max_elements(P, I).members;
    for_each_isotone(
        P, I, N,
        [&](const std::vector<int>& v) {
          if (++seen > cap) throw Error(Errc::ExplosionGuard, "marker search exceeds cap");
          Marker m{I, v};
          if (!is_marker(J, m)) return;
          // Marker-ness is monotone in the domain, so it suffices to test the
          // maximal proper subideals I \ {p}, p maximal in I.
          for (int p : mask_members(tops)) {
            Marker r{I & ~bit(p), v};
            r.values[p] = -1;
            if (is_marker(J, r)) return;
          }
          markers.push_back(std::move(m));
        },
        cap);
  }
  std::vector<Marker> out;
  for (const auto& m : markers) {
    bool minimal = std::none_of(markers.begin(), markers.end(), [&](const Marker& o) {
      return o != m && graph_contains(m, o);
    });
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Marker& a, const Marker& b) {
    return std::tie(a.values, a.domain) < std::tie(b.values, b.domain);
  });
  return out;
}

/// Pointwise maximum of a finite ideal.
inline IsotoneMap hull_map(const HomIdeal& J) {
  if (auto* pr = std::get_if<Principal>(&J.repr())) return pr->hull;
  auto* fin = std::get_if<ExplicitFinite>(&J.repr());
  if (!fin) throw Error(Errc::InfiniteIdeal, "hull map needs a finite ideal");
  if (fin->maps.empty()) throw Error(Errc::InfiniteIdeal, "hull of the empty ideal is undefined");
  IsotoneMap h{std::vector<int>(J.poset().size(), 0)};
  for (const auto& m : fin->maps)
    for (int p = 0; p < h.size(); ++p) h.values[p] = std::max(h.values[p], m(p));
  if (!is_isotone(J.poset(), h.values, J.poset().all()))
    throw Error(Errc::NotIsotone, "hull map is not isotone");
  return h;
}

}  // namespace letterplace
