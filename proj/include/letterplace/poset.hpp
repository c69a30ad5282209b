#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "letterplace/error.hpp"

namespace letterplace {

/// Bit i set means element i is a member. Posets are limited to 64 elements.
using ElementMask = std::uint64_t;

inline constexpr int kMaxPosetSize = 64;

inline ElementMask bit(int p) { return ElementMask{1} << p; }
inline ElementMask full_mask(int n) { return n >= 64 ? ~ElementMask{0} : (bit(n) - 1); }
inline bool has(ElementMask m, int p) { return (m >> p) & 1U; }

inline std::vector<int> mask_members(ElementMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// A finite partial order on the identifiers 0..n-1.
///
/// The full order relation is materialised at construction; `covers()` holds the
/// Hasse diagram (transitive reduction) regardless of what edges were supplied.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `relations` (pairs lower < upper).
  /// Throws CycleDetected if the relation graph has a directed cycle.
  Poset(int n, const std::vector<std::pair<int, int>>& relations,
        std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 0 || n > kMaxPosetSize)
      throw Error(Errc::IdentifierOutOfRange, "poset size must lie in [0,64]");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      throw Error(Errc::InvalidInput, "label count differs from element count");
    up_.assign(n, 0);
    for (int p = 0; p < n; ++p) up_[p] = bit(p);
    for (auto [lo, hi] : relations) {
      if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw Error(Errc::IdentifierOutOfRange,
                    "relation (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
      if (lo == hi) throw Error(Errc::CycleDetected, "self loop at " + std::to_string(lo));
      up_[lo] |= bit(hi);
    }
    // Warshall on rows: if q is above p then everything above q is above p.
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < n; ++p)
        if (has(up_[p], k)) up_[p] |= up_[k];
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (has(up_[p], q) && has(up_[q], p))
          throw Error(Errc::CycleDetected,
                      "elements " + std::to_string(p) + " and " + std::to_string(q) +
                          " lie on a cycle");
    down_.assign(n, 0);
    for (int p = 0; p < n; ++p)
      for (int q : mask_members(up_[p])) down_[q] |= bit(p);
    for (int p = 0; p < n; ++p) {
      ElementMask strictly_above = up_[p] & ~bit(p);
      ElementMask covers = strictly_above;
      for (int q : mask_members(strictly_above)) covers &= ~(up_[q] & ~bit(q));
      upper_covers_.push_back(covers);
      for (int q : mask_members(covers)) covers_.emplace_back(p, q);
    }
    std::sort(covers_.begin(), covers_.end());
  }

  int size() const { return n_; }
  ElementMask all() const { return full_mask(n_); }

  bool leq(int p, int q) const { return has(up_[p], q); }
  bool lt(int p, int q) const { return p != q && leq(p, q); }
  bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }

  /// Elements q with p <= q.
  ElementMask up_set(int p) const { return up_[p]; }
  /// Elements q with q <= p.
  ElementMask down_set(int p) const { return down_[p]; }
  ElementMask upper_covers(int p) const { return upper_covers_[p]; }

  /// Hasse diagram edges (lower, upper), sorted lexicographically.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int p) const {
    return labels_.empty() ? std::to_string(p) : labels_[p];
  }

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && up_ == other.up_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<ElementMask> up_;
  std::vector<ElementMask> down_;
  std::vector<ElementMask> upper_covers_;
  std::vector<std::pair<int, int>> covers_;
};

/// P^op as a view: the order is read with its arguments swapped.
class OppositePoset {
 public:
  explicit OppositePoset(const Poset& base) : base_(&base) {}
  int size() const { return base_->size(); }
  bool leq(int p, int q) const { return base_->leq(q, p); }
  bool lt(int p, int q) const { return base_->lt(q, p); }
  const Poset& base() const { return *base_; }

 private:
  const Poset* base_;
};

inline Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                               std::vector<std::string> labels = {}) {
  return Poset(n, covers, std::move(labels));
}

inline Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (int p = 0; p + 1 < n; ++p) covers.emplace_back(p, p + 1);
  for (int p = 0; p < n; ++p) labels.push_back(std::to_string(p + 1));
  return Poset(n, covers, labels);
}

inline Poset antichain_poset(int n) {
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back(std::to_string(p + 1));
  return Poset(n, {}, labels);
}

enum class SubsetKind { Plain, Ideal, Filter, Antichain };
enum class Direction { Down, Up };

struct SubsetOfP {
  ElementMask members = 0;
  SubsetKind kind = SubsetKind::Plain;

  std::vector<int> elements() const { return mask_members(members); }
  bool operator==(const SubsetOfP&) const = default;
};

inline void check_subset(const Poset& P, ElementMask a) {
  if (a & ~P.all()) throw Error(Errc::IdentifierOutOfRange, "subset has elements outside P");
}

inline bool is_ideal(const Poset& P, ElementMask s) {
  for (int p : mask_members(s))
    if ((P.down_set(p) & ~s) != 0) return false;
  return true;
}

inline bool is_filter(const Poset& P, ElementMask s) {
  for (int p : mask_members(s))
    if ((P.up_set(p) & ~s) != 0) return false;
  return true;
}

inline bool is_antichain(const Poset& P, ElementMask s) {
  for (int p : mask_members(s))
    if ((P.up_set(p) & s) != bit(p)) return false;
  return true;
}

inline bool is_chain(const Poset& P, ElementMask s) {
  auto elems = mask_members(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!P.comparable(elems[i], elems[j])) return false;
  return true;
}

inline SubsetOfP closure(const Poset& P, ElementMask a, Direction dir) {
  check_subset(P, a);
  ElementMask out = 0;
  for (int p : mask_members(a)) out |= (dir == Direction::Down ? P.down_set(p) : P.up_set(p));
  return {out, dir == Direction::Down ? SubsetKind::Ideal : SubsetKind::Filter};
}

inline SubsetOfP min_elements(const Poset& P, ElementMask s) {
  check_subset(P, s);
  ElementMask out = 0;
  for (int p : mask_members(s))
    if ((P.down_set(p) & s) == bit(p)) out |= bit(p);
  return {out, SubsetKind::Antichain};
}

inline SubsetOfP max_elements(const Poset& P, ElementMask s) {
  check_subset(P, s);
  ElementMask out = 0;
  for (int p : mask_members(s))
    if ((P.up_set(p) & s) == bit(p)) out |= bit(p);
  return {out, SubsetKind::Antichain};
}

/// All poset ideals (down-sets) of P, ordered by mask value.
inline std::vector<ElementMask> all_poset_ideals(const Poset& P) {
  std::vector<ElementMask> out;
  // Grow ideals by adding minimal elements of the complement; a visited set keeps
  // this linear in the number of ideals rather than 2^n.
  std::vector<ElementMask> stack{0};
  std::unordered_set<ElementMask> seen{0};
  while (!stack.empty()) {
    ElementMask cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    ElementMask cand = min_elements(P, P.all() & ~cur).members;
    for (int p : mask_members(cand)) {
      ElementMask next = cur | bit(p);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True when no element has more than one upper cover: the Hasse diagram is a
/// disjoint union of trees rooted at their unique maximal elements.
inline bool is_top_rooted_forest(const Poset& P) {
  for (int p = 0; p < P.size(); ++p)
    if (std::popcount(P.upper_covers(p)) > 1) return false;
  return true;
}

/// Index of p within a chain, or nullopt if P is not a chain.
inline std::optional<std::vector<int>> chain_ranks(const Poset& P) {
  if (!is_chain(P, P.all())) return std::nullopt;
  std::vector<int> rank(P.size());
  for (int p = 0; p < P.size(); ++p) rank[p] = std::popcount(P.down_set(p)) - 1;
  return rank;
}

/// Every naturally labelled poset on n elements (p < q implies p < q as integers).
/// Each isomorphism class appears at least once. Intended for n <= 6.
inline std::vector<Poset> enumerate_natural_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) slots.emplace_back(p, q);
  if (slots.size() > 20) throw Error(Errc::ExplosionGuard, "poset enumeration limited to n <= 6");
  std::vector<Poset> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t code = 0; code < total; ++code) {
    std::vector<ElementMask> up(n);
    for (int p = 0; p < n; ++p) up[p] = bit(p);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) up[slots[s].first] |= bit(slots[s].second);
    bool transitive = true;
    for (int p = 0; p < n && transitive; ++p)
      for (int q : mask_members(up[p]))
        if ((up[q] & ~up[p]) != 0) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) rel.push_back(slots[s]);
    out.emplace_back(n, rel);
  }
  return out;
}

/// One representative per isomorphism class of posets on n elements, taken from
/// the naturally labelled ones. Canonical form: the least strict-order bit code
/// over all relabellings. Intended for n <= 6.
inline std::vector<Poset> enumerate_posets(int n) {
  std::vector<int> perm(n);
  std::vector<std::uint64_t> seen;
  std::vector<Poset> out;
  for (auto& P : enumerate_natural_posets(n)) {
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (P.lt(p, q)) code |= std::uint64_t{1} << (perm[p] * n + perm[q]);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
    seen.push_back(best);
    out.push_back(std::move(P));
  }
  return out;
}

}  // namespace letterplace
