#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "letterplace/error.hpp"

namespace letterplace {

/// Which family a variable belongs to. Pair families are doubly indexed.
enum class VarFamily : std::uint8_t {
  X,       // x[p,i], letterplace variables over P x N
  Y,       // y[p,i], entries of the staircase matrices
  Elem,    // x[p], one variable per poset element
  Nat,     // x[i], one variable per natural number
  Target,  // z[r], generic target of a fiber map
};

/// A tagged variable identifier. Ordering: family first, then (p, i).
struct VarIndex {
  VarFamily family = VarFamily::X;
  int p = 0;
  int i = 0;

  static VarIndex x(int p, int i) { return {VarFamily::X, p, i}; }
  static VarIndex y(int p, int i) { return {VarFamily::Y, p, i}; }
  static VarIndex elem(int p) { return {VarFamily::Elem, p, 0}; }
  static VarIndex nat(int i) { return {VarFamily::Nat, 0, i}; }
  static VarIndex target(int r) { return {VarFamily::Target, r, 0}; }

  bool is_pair() const { return family == VarFamily::X || family == VarFamily::Y; }

  auto operator<=>(const VarIndex&) const = default;
};

using LabelFn = std::function<std::string(int)>;

inline std::string var_to_string(const VarIndex& v, const LabelFn& label = {}) {
  auto lab = [&](int p) { return label ? label(p) : std::to_string(p); };
  switch (v.family) {
    case VarFamily::X: return "x[" + lab(v.p) + "," + std::to_string(v.i) + "]";
    case VarFamily::Y: return "y[" + std::to_string(v.p) + "," + std::to_string(v.i) + "]";
    case VarFamily::Elem: return "x[" + lab(v.p) + "]";
    case VarFamily::Nat: return "x[" + std::to_string(v.i) + "]";
    case VarFamily::Target: return "z[" + std::to_string(v.p) + "]";
  }
  return "?";
}

using Exponent = std::uint32_t;

/// A monomial as a sparse, VarIndex-sorted list of positive exponents.
/// The empty list is the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<VarIndex, Exponent>;

  Monomial() = default;

  /// Accepts entries in any order; repeated variables accumulate, zeros vanish.
  explicit Monomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& [v, e] : entries) {
      if (e == 0) continue;
      if (!terms_.empty() && terms_.back().first == v)
        terms_.back().second = checked_add(terms_.back().second, e);
      else
        terms_.emplace_back(v, e);
    }
  }

  static Monomial var(const VarIndex& v, Exponent e = 1) {
    return Monomial(std::vector<Entry>{{v, e}});
  }

  /// Squarefree product of the given variables.
  static Monomial squarefree(const std::vector<VarIndex>& vars) {
    std::vector<Entry> entries;
    for (const auto& v : vars) entries.emplace_back(v, 1);
    return Monomial(std::move(entries));
  }

  const std::vector<Entry>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
  }

  Exponent exponent(const VarIndex& v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const Entry& a, const VarIndex& b) { return a.first < b; });
    return (it != terms_.end() && it->first == v) ? it->second : 0;
  }

  bool is_squarefree() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Entry& t) { return t.second == 1; });
  }

  std::vector<VarIndex> support() const {
    std::vector<VarIndex> out;
    for (const auto& t : terms_) out.push_back(t.first);
    return out;
  }

  bool divides(const Monomial& other) const {
    auto it = other.terms_.begin();
    for (const auto& [v, e] : terms_) {
      while (it != other.terms_.end() && it->first < v) ++it;
      if (it == other.terms_.end() || it->first != v || it->second < e) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    return merge(other, [](Exponent a, Exponent b) { return checked_add(a, b); });
  }

  Monomial lcm(const Monomial& other) const {
    return merge(other, [](Exponent a, Exponent b) { return std::max(a, b); });
  }

  Monomial gcd(const Monomial& other) const {
    return merge(other, [](Exponent a, Exponent b) { return std::min(a, b); });
  }

  /// this / other, truncating at zero: the colon quotient m : other.
  Monomial colon(const Monomial& other) const {
    return merge(other, [](Exponent a, Exponent b) { return a > b ? a - b : Exponent{0}; });
  }

  /// Exact quotient; requires other | this.
  Monomial operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw Error(Errc::InvalidInput, "inexact monomial division");
    return colon(other);
  }

  /// Radical: every exponent set to one.
  Monomial radical() const {
    Monomial out = *this;
    for (auto& t : out.terms_) t.second = 1;
    return out;
  }

  bool operator==(const Monomial&) const = default;

  std::string to_string(const LabelFn& label = {}) const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : terms_) {
      if (!out.empty()) out += "*";
      out += var_to_string(v, label);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  static Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b)
      throw Error(Errc::InvalidInput, "exponent overflow");
    return a + b;
  }

  template <typename Op>
  Monomial merge(const Monomial& other, Op op) const {
    Monomial out;
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      Exponent e;
      VarIndex v;
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        v = a->first;
        e = op(a->second, 0);
        ++a;
      } else if (a == terms_.end() || b->first < a->first) {
        v = b->first;
        e = op(0, b->second);
        ++b;
      } else {
        v = a->first;
        e = op(a->second, b->second);
        ++a;
        ++b;
      }
      if (e != 0) out.terms_.emplace_back(v, e);
    }
    return out;
  }

  std::vector<Entry> terms_;
};

/// Graded order used for emitting generator lists: lower degree first; within a
/// degree the variable sequences are compared left to right, a smaller variable
/// (or a larger exponent on the same variable) coming first.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (ta[k].first != tb[k].first) return ta[k].first < tb[k].first;
      if (ta[k].second != tb[k].second) return ta[k].second > tb[k].second;
    }
    return ta.size() < tb.size();
  }
};

/// Resolves the element index written inside x[...]; the default reads integers.
using LabelResolver = std::function<int(const std::string&)>;

/// Parses the text form produced by Monomial::to_string, e.g. "x[0,1]^2*x[2,0]",
/// "y[4,2]", "x[3]", "z[1]", "1". Single-index x[...] is read as `single_index_family`.
/// With a resolver, the element position of x[p,i] and x[p] may be a label.
inline Monomial parse_monomial(const std::string& text, VarFamily single_index_family = VarFamily::Nat,
                               const LabelResolver& resolve = {}) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "1") return Monomial{};
  std::vector<Monomial::Entry> entries;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::InvalidInput, "cannot parse monomial '" + text + "': " + why);
  };
  auto to_int = [&](const std::string& tok) {
    if (tok.empty()) fail("empty index");
    long long v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a natural number, got '" + tok + "'");
      v = v * 10 + (c - '0');
      if (v > std::numeric_limits<int>::max()) fail("integer too large");
    }
    return static_cast<int>(v);
  };
  auto read_token = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
    return s.substr(start, pos - start);
  };
  auto element = [&](const std::string& tok) { return resolve ? resolve(tok) : to_int(tok); };
  while (pos < s.size()) {
    char sym = s[pos++];
    if (sym != 'x' && sym != 'y' && sym != 'z') fail("unknown variable symbol");
    if (pos >= s.size() || s[pos] != '[') fail("expected '['");
    ++pos;
    std::string first = read_token();
    std::optional<std::string> second;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      second = read_token();
    }
    if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
    ++pos;
    Exponent e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      e = static_cast<Exponent>(to_int(s.substr(start, pos - start)));
    }
    VarIndex v;
    if (sym == 'z') {
      if (second) fail("z takes one index");
      v = VarIndex::target(to_int(first));
    } else if (second) {
      v = sym == 'x' ? VarIndex::x(element(first), to_int(*second)) : VarIndex::y(to_int(first), to_int(*second));
    } else {
      if (sym == 'y') fail("y takes two indices");
      v = single_index_family == VarFamily::Elem ? VarIndex::elem(element(first)) : VarIndex::nat(to_int(first));
    }
    entries.emplace_back(v, e);
    if (pos < s.size()) {
      if (s[pos] != '*') fail("expected '*'");
      if (++pos == s.size()) fail("trailing '*'");
    }
  }
  return Monomial(std::move(entries));
}

/// A finitely generated monomial ideal with a minimal, sorted generating set and
/// an explicit finite variable universe (which always contains the generators'
/// variables). The zero ideal has no generators; the unit ideal has gens = {1}.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::vector<Monomial> gens, std::vector<VarIndex> universe = {}) {
    // Sort by degree so every divisor of g precedes g.
    std::sort(gens.begin(), gens.end(), GradedLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
      bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                   [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
    std::set<VarIndex> u(universe.begin(), universe.end());
    for (const auto& g : gens_)
      for (const auto& t : g.terms()) u.insert(t.first);
    universe_.assign(u.begin(), u.end());
  }

  static MonomialIdeal zero(std::vector<VarIndex> universe = {}) {
    return MonomialIdeal({}, std::move(universe));
  }
  static MonomialIdeal unit(std::vector<VarIndex> universe = {}) {
    return MonomialIdeal({Monomial{}}, std::move(universe));
  }

  const std::vector<Monomial>& gens() const { return gens_; }
  const std::vector<VarIndex>& universe() const { return universe_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  std::uint64_t max_degree() const {
    std::uint64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// Variables appearing in some minimal generator.
  std::vector<VarIndex> support() const {
    std::set<VarIndex> s;
    for (const auto& g : gens_)
      for (const auto& t : g.terms()) s.insert(t.first);
    return {s.begin(), s.end()};
  }

  MonomialIdeal with_universe(std::vector<VarIndex> universe) const {
    for (const auto& v : universe_) universe.push_back(v);
    return MonomialIdeal(gens_, std::move(universe));
  }

  /// Generator sets are equal; universes are ignored.
  bool same_generators(const MonomialIdeal& other) const { return gens_ == other.gens_; }
  bool operator==(const MonomialIdeal& other) const {
    return gens_ == other.gens_ && universe_ == other.universe_;
  }

  MonomialIdeal operator+(const MonomialIdeal& other) const {
    std::vector<Monomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    std::vector<VarIndex> u = universe_;
    u.insert(u.end(), other.universe_.begin(), other.universe_.end());
    return MonomialIdeal(std::move(g), std::move(u));
  }

  MonomialIdeal colon(const Monomial& m) const {
    std::vector<Monomial> g;
    for (const auto& h : gens_) g.push_back(h.colon(m));
    return MonomialIdeal(std::move(g), universe_);
  }

  /// Newline separated text form, one generator per line in graded order.
  std::string to_text(const LabelFn& label = {}) const {
    std::string out;
    for (const auto& g : gens_) out += g.to_string(label) + "\n";
    return out;
  }

 private:
  std::vector<Monomial> gens_;
  std::vector<VarIndex> universe_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::vector<VarIndex> universe = {}) {
  return MonomialIdeal(std::move(gens), std::move(universe));
}

inline bool contains(const MonomialIdeal& I, const Monomial& m) { return I.contains(m); }

// ---------------------------------------------------------------------------
// Alexander duality

/// Minimal transversals of the generator supports, by Berge's incremental
/// method: after each edge the transversal set is extended and re-minimalized.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw Error(Errc::NotSquarefree, "Alexander dual needs a squarefree ideal");
  std::vector<Monomial> T{Monomial{}};
  for (const auto& g : I.gens()) {
    std::vector<Monomial> next;
    for (const auto& t : T) {
      if (!t.gcd(g).is_one()) {
        next.push_back(t);
        continue;
      }
      for (const auto& v : g.support()) next.push_back(t * Monomial::var(v));
    }
    T = MonomialIdeal(std::move(next)).gens();
  }
  return MonomialIdeal(std::move(T), I.universe());
}

// ---------------------------------------------------------------------------
// Hilbert series numerators

/// Integer polynomial in t, coefficient k at index k, no trailing zeros.
using KPoly = std::vector<long long>;

inline KPoly kpoly_trim(KPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline KPoly kpoly_add(const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return kpoly_trim(std::move(r));
}

inline KPoly kpoly_mul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return kpoly_trim(std::move(r));
}

/// (1 - t)^k
inline KPoly kpoly_one_minus_t_pow(unsigned k) {
  KPoly r{1};
  for (unsigned j = 0; j < k; ++j) r = kpoly_mul(r, KPoly{1, -1});
  return r;
}

inline std::string kpoly_to_string(const KPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    long long c = p[k];
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0)
      out += mag;
    else {
      if (mag != "1") out += mag + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace detail {

inline KPoly hilbert_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  std::map<VarIndex, int> freq;
  for (const auto& g : gens)
    for (const auto& t : g.terms()) ++freq[t.first];
  VarIndex pivot{};
  int best = 0;
  for (const auto& [v, c] : freq)  // map order gives the VarIndex tie-break
    if (c > best) {
      best = c;
      pivot = v;
    }
  if (best <= 1) {  // pairwise coprime: a complete intersection
    KPoly r{1};
    for (const auto& g : gens) {
      KPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = kpoly_mul(r, f);
    }
    return r;
  }
  Monomial x = Monomial::var(pivot);
  std::vector<Monomial> plus{x}, colon;
  for (const auto& g : gens) {
    if (g.exponent(pivot) == 0) plus.push_back(g);
    colon.push_back(g.colon(x));
  }
  KPoly a = hilbert_rec(MonomialIdeal(std::move(plus)).gens());
  KPoly b = hilbert_rec(MonomialIdeal(std::move(colon)).gens());
  b.insert(b.begin(), 0);
  return kpoly_add(a, b);
}

}  // namespace detail

/// Numerator by inclusion-exclusion over generator subsets: sum of
/// (-1)^|T| t^deg(lcm T). Exponential; used as an oracle.
inline KPoly hilbert_numerator_inclusion_exclusion(const MonomialIdeal& I) {
  const auto& g = I.gens();
  if (g.size() > 20) throw Error(Errc::ExplosionGuard, "inclusion-exclusion limited to 20 generators");
  KPoly r;
  const std::uint32_t total = std::uint32_t{1} << g.size();
  for (std::uint32_t s = 0; s < total; ++s) {
    Monomial l;
    int sign = 1;
    for (std::size_t k = 0; k < g.size(); ++k)
      if ((s >> k) & 1U) {
        l = l.lcm(g[k]);
        sign = -sign;
      }
    std::size_t d = l.degree();
    if (r.size() <= d) r.resize(d + 1, 0);
    r[d] += sign;
  }
  return kpoly_trim(std::move(r));
}

/// K(t) with HS(S/I) = K(t) / (1-t)^v, v = |universe|. K does not depend on v.
/// Pivot splitting K(I) = K(I + (x)) + t K(I : x) on the most frequent variable.
inline KPoly hilbert_numerator(const MonomialIdeal& I) {
  KPoly k = detail::hilbert_rec(I.gens());
  if (I.gens().size() <= 8 && k != hilbert_numerator_inclusion_exclusion(I))
    throw std::logic_error("Hilbert numerator cross-check failed for " + I.to_text());
  return k;
}

// ---------------------------------------------------------------------------
// Height and associated primes

struct Height {
  std::size_t value = 0;
  bool zero_ideal = false;  // height undefined, reported as 0
  bool unit_ideal = false;  // no prime contains the ideal
};

/// Minimum number of variables meeting every generator support.
inline Height height(const MonomialIdeal& I) {
  if (I.is_zero()) return {0, true, false};
  if (I.is_unit()) return {0, false, true};
  std::vector<Monomial> radicals;
  for (const auto& g : I.gens()) radicals.push_back(g.radical());
  MonomialIdeal dual = alexander_dual(MonomialIdeal(std::move(radicals)));
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& g : dual.gens()) best = std::min<std::size_t>(best, g.degree());
  return {best, false, false};
}

/// Every S such that (I : m) is the prime generated by S for some monomial m,
/// with m ranging over the box of exponents 0..(max exponent of each variable).
inline std::vector<std::vector<VarIndex>> associated_primes(const MonomialIdeal& I,
                                                            std::uint64_t cap = 1'000'000) {
  std::vector<VarIndex> vars = I.support();
  std::vector<Exponent> maxe(vars.size(), 0);
  for (const auto& g : I.gens())
    for (std::size_t k = 0; k < vars.size(); ++k) maxe[k] = std::max(maxe[k], g.exponent(vars[k]));
  std::uint64_t box = 1;
  for (auto e : maxe) {
    box *= (e + 1);
    if (box > cap) throw Error(Errc::ExplosionGuard, "associated prime search box too large");
  }
  std::set<std::vector<VarIndex>> found;
  std::vector<Exponent> cur(vars.size(), 0);
  for (std::uint64_t step = 0; step < box; ++step) {
    std::vector<Monomial::Entry> entries;
    for (std::size_t k = 0; k < vars.size(); ++k) entries.emplace_back(vars[k], cur[k]);
    Monomial m(std::move(entries));
    if (!I.contains(m)) {
      MonomialIdeal q = I.colon(m);
      if (!q.is_zero() && std::all_of(q.gens().begin(), q.gens().end(),
                                      [](const Monomial& g) { return g.degree() == 1; }))
        found.insert(q.support());
    }
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (++cur[k] <= maxe[k]) break;
      cur[k] = 0;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace letterplace
