#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "letterplace/groebner.hpp"
#include "letterplace/letterplace.hpp"

namespace letterplace {

/// A weakly increasing sequence l_a <= ... <= l_b of naturals.
struct LSequence {
  int a = 0;
  std::vector<int> vals;

  int b() const { return a + static_cast<int>(vals.size()) - 1; }
  int operator[](int c) const { return vals[c - a]; }
  bool operator==(const LSequence&) const = default;

  void validate() const {
    if (a < 0) throw Error(Errc::InvalidInput, "start index must be >= 0");
    if (vals.size() < 2) throw Error(Errc::InvalidInput, "sequence needs at least two entries");
    for (std::size_t k = 0; k < vals.size(); ++k) {
      if (vals[k] < 0) throw Error(Errc::InvalidInput, "sequence entries must be naturals");
      if (k > 0 && vals[k] < vals[k - 1]) throw Error(Errc::InvalidInput, "sequence must be weakly increasing");
    }
  }
};

inline std::string to_string(const LSequence& l) {
  std::string s = "(";
  for (std::size_t k = 0; k < l.vals.size(); ++k) s += (k ? "," : "") + std::to_string(l.vals[k]);
  return s + ")";
}

/// M(l): rows a..b-1, columns l_a+1..l_b; column p in [l_c+1, l_{c+1}] holds
/// y[p,i] for a <= i <= c and structural zeros above.
class DetMatrix {
 public:
  explicit DetMatrix(LSequence l) : l_(std::move(l)) { l_.validate(); }

  const LSequence& seq() const { return l_; }
  int first_row() const { return l_.a; }
  int last_row() const { return l_.b() - 1; }
  int first_col() const { return l_[l_.a] + 1; }
  int last_col() const { return l_[l_.b()]; }

  /// Highest row with a variable in column p.
  int height_of(int p) const {
    for (int c = l_.a; c < l_.b(); ++c)
      if (l_[c] < p && p <= l_[c + 1]) return c;
    throw Error(Errc::IdentifierOutOfRange, "column " + std::to_string(p) + " outside M(l)");
  }

  std::optional<VarIndex> entry(int p, int i) const {
    if (i < first_row() || i > last_row()) throw Error(Errc::IdentifierOutOfRange, "row outside M(l)");
    if (i <= height_of(p)) return VarIndex::y(p, i);
    return std::nullopt;
  }

  std::vector<VarIndex> variables() const {
    std::vector<VarIndex> out;
    for (int p = first_col(); p <= last_col(); ++p)
      for (int i = first_row(); i <= height_of(p); ++i) out.push_back(VarIndex::y(p, i));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Bullet diagram, top row first (highest row index at the top).
  std::string diagram() const {
    std::string s;
    for (int i = last_row(); i >= first_row(); --i) {
      for (int p = first_col(); p <= last_col(); ++p) s += entry(p, i) ? '*' : '.';
      s += '\n';
    }
    return s;
  }

 private:
  LSequence l_;
};

inline DetMatrix build_matrix(const LSequence& l) { return DetMatrix(l); }

/// A generating minor of I(l) and its columns (rows are a..c-1).
struct Minor {
  int c = 0;
  std::vector<int> cols;
  Polynomial value;
};

namespace detail {

/// Laplace expansion along the highest row, skipping structural zeros.
inline Polynomial determinant(const DetMatrix& M, std::vector<int> rows, const std::vector<int>& cols) {
  if (rows.empty()) return Polynomial::constant(1);
  int top = rows.back();
  rows.pop_back();
  Polynomial out;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto v = M.entry(cols[k], top);
    if (!v) continue;
    std::vector<int> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial sub = determinant(M, rows, rest);
    if (sub.is_zero()) continue;
    // The top row sits last, so its sign is (-1)^(k + size - 1).
    bool negative = (k + cols.size() - 1) % 2 == 1;
    Polynomial term = Polynomial::variable(*v) * sub;
    out += negative ? -term : term;
  }
  return out;
}

}  // namespace detail

/// All nonzero (c-a)-minors of rows a..c-1 and columns l_a+1..l_c, c = a+1..b.
inline std::vector<Minor> generating_minors(const LSequence& l) {
  DetMatrix M(l);
  std::vector<Minor> out;
  for (int c = l.a + 1; c <= l.b(); ++c) {
    int k = c - l.a;
    std::vector<int> rows;
    for (int i = l.a; i < c; ++i) rows.push_back(i);
    std::vector<int> all_cols;
    for (int p = l[l.a] + 1; p <= l[c]; ++p) all_cols.push_back(p);
    if (static_cast<int>(all_cols.size()) < k) continue;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (static_cast<int>(pick.size()) == k) {
        Polynomial d = detail::determinant(M, rows, pick);
        if (!d.is_zero()) out.push_back({c, pick, std::move(d)});
        return;
      }
      for (std::size_t s = from; s < all_cols.size(); ++s) {
        pick.push_back(all_cols[s]);
        rec(s + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

inline std::vector<Polynomial> ideal_gens(const LSequence& l) {
  std::vector<Polynomial> out;
  for (auto& m : generating_minors(l)) out.push_back(std::move(m.value));
  return out;
}

/// Row a+k paired with the k-th chosen column; nullopt if an entry is zero.
inline std::optional<Monomial> diagonal_product(const DetMatrix& M, const std::vector<int>& cols) {
  std::vector<VarIndex> vars;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto v = M.entry(cols[k], M.first_row() + static_cast<int>(k));
    if (!v) return std::nullopt;
    vars.push_back(*v);
  }
  return Monomial::squarefree(vars);
}

/// Successive maxima of l_a - a, l_{a+1} - a, l_{a+2} - (a+1), ..., l_b - (b-1);
/// each position inherits the value of l at the last maximum to its left.
inline LSequence terrace(const LSequence& l) {
  l.validate();
  auto diff = [&](int c) { return c == l.a ? l[c] - c : l[c] - (c - 1); };
  LSequence out = l;
  int best = diff(l.a);
  int anchor = l.a;
  for (int c = l.a + 1; c <= l.b(); ++c) {
    if (diff(c) > best) {
      best = diff(c);
      anchor = c;
    }
    out.vals[c - l.a] = l[anchor];
  }
  return out;
}

inline bool is_terrace(const LSequence& l) { return terrace(l) == l; }

inline LSequence i_sequence(const LSequence& lp) {
  lp.validate();
  if (!is_terrace(lp)) throw Error(Errc::NotTerrace, to_string(lp) + " is not a terrace sequence");
  LSequence i = lp;
  i.vals[0] = lp[lp.a] - lp.a;
  for (int c = lp.a + 1; c <= lp.b(); ++c)
    i.vals[c - lp.a] = lp[c] > lp[c - 1] ? lp[c] - c + 1 : i[c - 1];
  return i;
}

/// Inverse of i_sequence.
inline LSequence l_from_i(const LSequence& i) {
  i.validate();
  LSequence l = i;
  l.vals[0] = i[i.a] + i.a;
  for (int c = i.a + 1; c <= i.b(); ++c) l.vals[c - i.a] = i[c] > i[c - 1] ? i[c] + c - 1 : l[c - 1];
  return l;
}

/// The map phi on [i_a+1, i_b] with phi(p) = c for p in [i_c+1, i_{c+1}].
inline std::vector<int> i_sequence_map(const LSequence& i) {
  std::vector<int> phi;
  for (int c = i.a; c < i.b(); ++c)
    for (int p = i[c] + 1; p <= i[c + 1]; ++p) phi.push_back(c);
  return phi;
}

/// L(i) transported by x[p,j] -> y[p+j, j]: the principal letterplace ideal of
/// phi on the chain [i_a+1, i_b] with second indices starting at a.
inline MonomialIdeal ly_ideal(const LSequence& i) {
  i.validate();
  std::vector<int> phi = i_sequence_map(i);
  const int len = static_cast<int>(phi.size());
  if (len == 0) return MonomialIdeal::zero();
  IsotoneMap alpha{std::vector<int>(len)};
  for (int k = 0; k < len; ++k) alpha.values[k] = phi[k] - i.a;
  MonomialIdeal L = principal_letterplace_gens(chain_poset(len), alpha);
  std::vector<Monomial> gens;
  for (const auto& g : L.gens()) {
    std::vector<VarIndex> vars;
    for (const auto& [v, e] : g.terms()) {
      int p = i[i.a] + 1 + v.p;
      int j = v.i + i.a;
      vars.push_back(VarIndex::y(p + j, j));
    }
    gens.push_back(Monomial::squarefree(vars));
  }
  return MonomialIdeal(std::move(gens));
}

/// max over d of l_d - l_a - (d - a) + 1
inline int codim_formula(const LSequence& l) {
  int best = std::numeric_limits<int>::min();
  for (int d = l.a + 1; d <= l.b(); ++d) best = std::max(best, l[d] - l[l.a] - (d - l.a) + 1);
  return best;
}

struct DetInstance {
  LSequence l;
  std::size_t variables = 0;
  std::size_t minors = 0;
  std::size_t gb_size = 0;
  bool gb_ok = false;
  bool diagonal_ok = false;
  bool initial_equals_ly = false;
  MonomialIdeal initial;
  GroebnerStats stats;
};

struct DetReport {
  LSequence l, terrace_seq, i_seq;
  MonomialIdeal ly;
  int codim_i = 0;        // i_b - i_a
  int codim_max = 0;      // max formula
  std::size_t height = 0;  // height of L^Y(i)
  bool codim_ok = false;
  DetInstance raw;
  std::optional<DetInstance> reduced;  // I(l') when l is not a terrace
  bool ok() const {
    bool r = raw.gb_ok && raw.diagonal_ok && raw.initial_equals_ly && codim_ok;
    if (reduced) r = r && reduced->gb_ok && reduced->diagonal_ok && reduced->initial_equals_ly;
    return r;
  }
};

/// Every generator reduces to zero and every S-polynomial of G reduces to zero.
inline bool certify_groebner(const std::vector<Polynomial>& F, const std::vector<Polynomial>& G,
                             const TermOrder& ord) {
  for (const auto& f : F)
    if (!reduce(f, G, ord).is_zero()) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Monomial li = G[i].leading_monomial(ord), lj = G[j].leading_monomial(ord);
      if (li.gcd(lj).is_one()) continue;
      Monomial l = li.lcm(lj);
      mpq_class ci = G[i].terms().at(li), cj = G[j].terms().at(lj);
      Polynomial s = G[i].scaled(1 / ci, l / li) - G[j].scaled(1 / cj, l / lj);
      if (!reduce(s, G, ord).is_zero()) return false;
    }
  return true;
}

inline DetInstance run_instance(const LSequence& l, const MonomialIdeal& ly, const GroebnerOptions& opt) {
  DetInstance r;
  r.l = l;
  DetMatrix M(l);
  auto vars = M.variables();
  r.variables = vars.size();
  TermOrder ord = diagonal_order(vars);
  auto minors = generating_minors(l);
  r.minors = minors.size();
  r.diagonal_ok = true;
  std::vector<Polynomial> F;
  for (const auto& m : minors) {
    auto diag = diagonal_product(M, m.cols);
    if (!diag || !(m.value.leading_monomial(ord) == *diag)) r.diagonal_ok = false;
    F.push_back(m.value);
  }
  auto G = buchberger(F, ord, opt, &r.stats);
  r.gb_size = G.size();
  r.gb_ok = certify_groebner(F, G, ord);
  r.initial = initial_ideal(G, ord);
  r.initial_equals_ly = r.initial.same_generators(ly);
  return r;
}

/// in(I(l)) = L^Y(i) under the diagonal order, plus the codimension formulas.
inline DetReport verify_main(const LSequence& l, const GroebnerOptions& opt = {}) {
  DetReport rep;
  rep.l = l;
  rep.terrace_seq = terrace(l);
  rep.i_seq = i_sequence(rep.terrace_seq);
  rep.ly = ly_ideal(rep.i_seq);
  rep.codim_i = rep.i_seq[rep.i_seq.b()] - rep.i_seq[rep.i_seq.a];
  rep.codim_max = codim_formula(l);
  rep.height = height(rep.ly).value;
  rep.codim_ok = rep.codim_i == rep.codim_max && static_cast<int>(rep.height) == rep.codim_i;
  rep.raw = run_instance(l, rep.ly, opt);
  if (!(rep.terrace_seq == l)) rep.reduced = run_instance(rep.terrace_seq, rep.ly, opt);
  return rep;
}

}  // namespace letterplace
