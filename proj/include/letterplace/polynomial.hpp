#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "letterplace/monomial.hpp"

namespace letterplace {

/// A term order on a finite variable universe. `ranking[0]` is the largest
/// variable. Lex compares exponents of the largest variable first; GrevLex
/// compares degree first and then favours the smaller exponent on the smallest
/// variable.
class TermOrder {
 public:
  enum class Kind { Lex, GrevLex };

  TermOrder() = default;
  TermOrder(Kind kind, std::vector<VarIndex> ranking) : kind_(kind), ranking_(std::move(ranking)) {
    for (std::size_t k = 0; k < ranking_.size(); ++k)
      if (!pos_.emplace(ranking_[k], static_cast<int>(k)).second)
        throw Error(Errc::InvalidInput, "variable ranked twice");
  }

  Kind kind() const { return kind_; }
  const std::vector<VarIndex>& ranking() const { return ranking_; }
  std::size_t size() const { return ranking_.size(); }

  int position(const VarIndex& v) const {
    auto it = pos_.find(v);
    if (it == pos_.end()) throw Error(Errc::VariableOutsideSource, var_to_string(v) + " is not ranked");
    return it->second;
  }

  /// Exponent vector indexed by rank position.
  std::vector<Exponent> dense(const Monomial& m) const {
    std::vector<Exponent> e(ranking_.size(), 0);
    for (const auto& [v, x] : m.terms()) e[position(v)] = x;
    return e;
  }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const { return compare_dense(dense(a), dense(b)); }

  int compare_dense(const std::vector<Exponent>& a, const std::vector<Exponent>& b) const {
    if (kind_ == Kind::GrevLex) {
      std::uint64_t da = 0, db = 0;
      for (auto x : a) da += x;
      for (auto x : b) db += x;
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
      return 0;
    }
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  Kind kind_ = Kind::Lex;
  std::vector<VarIndex> ranking_;
  std::map<VarIndex, int> pos_;
};

inline TermOrder lex_order(std::vector<VarIndex> ranking) { return {TermOrder::Kind::Lex, std::move(ranking)}; }
inline TermOrder grevlex_order(std::vector<VarIndex> ranking) {
  return {TermOrder::Kind::GrevLex, std::move(ranking)};
}

/// Lex with y[p,i] above y[p',i'] iff i < i', or i = i' and p < p'. Every
/// nonzero minor of a staircase matrix then leads with its main diagonal.
inline TermOrder diagonal_order(std::vector<VarIndex> vars) {
  std::sort(vars.begin(), vars.end(), [](const VarIndex& a, const VarIndex& b) {
    return std::tie(a.i, a.p) < std::tie(b.i, b.p);
  });
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return lex_order(std::move(vars));
}

/// An exact polynomial: monomial -> nonzero rational coefficient.
class Polynomial {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, mpq_class c = 1) {
    if (c != 0) terms_.emplace(m, std::move(c));
  }

  static Polynomial constant(mpq_class c) { return Polynomial(Monomial{}, std::move(c)); }
  static Polynomial variable(const VarIndex& v) { return Polynomial(Monomial::var(v)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, mpq_class, GradedLexLess>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const { return Polynomial(*this) += o; }
  Polynomial operator-(const Polynomial& o) const { return Polynomial(*this) -= o; }
  Polynomial operator-() const { return Polynomial() - *this; }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  Polynomial scaled(const mpq_class& c, const Monomial& m = {}) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Terms in descending order under `ord`.
  std::vector<Term> sorted(const TermOrder& ord) const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.less(b.first, a.first); });
    return out;
  }

  Monomial leading_monomial(const TermOrder& ord) const {
    if (terms_.empty()) throw Error(Errc::InvalidInput, "zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
      if (!best || ord.less(*best, m)) best = &m;
    return *best;
  }

  std::vector<VarIndex> variables() const {
    std::vector<VarIndex> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.terms()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// "+c*y[p,i]^e*..." terms, descending under `ord`; "0" for the zero polynomial.
  std::string to_string(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : sorted(ord)) {
      out += c < 0 ? "-" : "+";
      mpq_class a = abs(c);
      out += a.get_str();
      if (!m.is_one()) out += "*" + m.to_string();
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, mpq_class, GradedLexLess> terms_;
};

/// Parses the text form of Polynomial::to_string. Coefficients may be omitted
/// ("+y[1,0]" means 1) and may be fractions ("-3/2*y[1,0]").
inline Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Errc::InvalidInput, "empty polynomial");
  if (s == "0") return {};
  Polynomial out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw Error(Errc::InvalidInput, "expected sign in polynomial '" + text + "'");
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < s.size() && (depth > 0 || (s[end] != '+' && s[end] != '-'))) {
      if (s[end] == '[') ++depth;
      if (s[end] == ']') --depth;
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw Error(Errc::InvalidInput, "empty term in '" + text + "'");
    mpq_class c = 1;
    std::string mono = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      std::size_t star = term.find('*');
      std::string num = term.substr(0, star);
      try {
        c = mpq_class(num);
      } catch (const std::invalid_argument&) {
        throw Error(Errc::InvalidInput, "bad coefficient '" + num + "'");
      }
      if (c.get_den() == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + num + "'");
      c.canonicalize();
      mono = star == std::string::npos ? "1" : term.substr(star + 1);
    }
    out += Polynomial(parse_monomial(mono), c * sign);
  }
  return out;
}

}  // namespace letterplace
