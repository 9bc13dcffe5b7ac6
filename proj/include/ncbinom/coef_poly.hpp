#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ncbinom {

/// Product of commuting parameters, e.g. q^2*h. Zero exponents are never
/// stored, so the empty monomial is 1.
class ParamMonomial {
public:
  ParamMonomial() = default;

  static ParamMonomial variable(const std::string &name, unsigned exponent = 1) {
    ParamMonomial m;
    if (exponent != 0)
      m.exponents_[name] = exponent;
    return m;
  }

  const std::map<std::string, unsigned> &exponents() const { return exponents_; }

  unsigned exponent(const std::string &name) const {
    auto it = exponents_.find(name);
    return it == exponents_.end() ? 0 : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto &[name, e] : exponents_)
      d += e;
    return d;
  }

  bool is_unit() const { return exponents_.empty(); }

  friend ParamMonomial operator*(const ParamMonomial &a, const ParamMonomial &b) {
    if (a.is_unit())
      return b;
    ParamMonomial r = a;
    for (const auto &[name, e] : b.exponents_)
      r.exponents_[name] += e;
    return r;
  }

  /// Copy with `name` removed.
  ParamMonomial without(const std::string &name) const {
    ParamMonomial r = *this;
    r.exponents_.erase(name);
    return r;
  }

  friend bool operator==(const ParamMonomial &, const ParamMonomial &) = default;
  friend auto operator<=>(const ParamMonomial &a, const ParamMonomial &b) {
    return a.exponents_ <=> b.exponents_;
  }

private:
  std::map<std::string, unsigned> exponents_;
};

/// Multivariate polynomial over Q in commuting parameters.
class CoefPoly {
public:
  using TermMap = std::map<ParamMonomial, Rational>;

  CoefPoly() = default;
  CoefPoly(const Rational &c) {
    if (!c.is_zero())
      terms_.emplace(ParamMonomial{}, c);
  }
  CoefPoly(long c) : CoefPoly(Rational(c)) {}

  static CoefPoly variable(const std::string &name, unsigned exponent = 1) {
    CoefPoly p;
    p.terms_.emplace(ParamMonomial::variable(name, exponent), Rational(1));
    return p;
  }

  static CoefPoly monomial(const ParamMonomial &m, const Rational &c) {
    CoefPoly p;
    if (!c.is_zero())
      p.terms_.emplace(m, c);
    return p;
  }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const {
    auto it = terms_.find(ParamMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const ParamMonomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::set<std::string> parameters() const {
    std::set<std::string> names;
    for (const auto &[m, c] : terms_)
      for (const auto &[name, e] : m.exponents())
        names.insert(name);
    return names;
  }

  void add_term(const ParamMonomial &m, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  CoefPoly operator-() const {
    CoefPoly r = *this;
    for (auto &[m, c] : r.terms_)
      c = -c;
    return r;
  }

  CoefPoly &operator+=(const CoefPoly &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  CoefPoly &operator-=(const CoefPoly &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }

  friend CoefPoly operator+(CoefPoly a, const CoefPoly &b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly &b) { return a -= b; }

  friend CoefPoly operator*(const CoefPoly &a, const CoefPoly &b) {
    CoefPoly r;
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }
  CoefPoly &operator*=(const CoefPoly &o) { return *this = *this * o; }

  CoefPoly pow(unsigned k) const {
    CoefPoly r(1);
    for (unsigned i = 0; i < k; ++i)
      r *= *this;
    return r;
  }

  /// Replaces parameter `name` by the rational `value`.
  CoefPoly substitute(const std::string &name, const Rational &value) const {
    CoefPoly r;
    for (const auto &[m, c] : terms_) {
      Rational factor = c;
      for (unsigned i = 0, e = m.exponent(name); i < e; ++i)
        factor *= value;
      r.add_term(m.without(name), factor);
    }
    return r;
  }

  /// Evaluates at a full assignment; throws if a parameter is unassigned.
  Rational evaluate(const std::map<std::string, Rational> &values) const {
    Rational sum(0);
    for (const auto &[m, c] : terms_) {
      Rational term = c;
      for (const auto &[name, e] : m.exponents()) {
        auto it = values.find(name);
        if (it == values.end())
          throw std::invalid_argument("CoefPoly::evaluate: no value for '" +
                                      name + "'");
        for (unsigned i = 0; i < e; ++i)
          term *= it->second;
      }
      sum += term;
    }
    return sum;
  }

  friend bool operator==(const CoefPoly &, const CoefPoly &) = default;

  /// Terms in display order: descending total degree, then descending
  /// exponents taken in `order` (the declaration order of the parameters).
  std::vector<std::pair<ParamMonomial, Rational>>
  sorted_terms(std::span<const std::string> order) const {
    std::vector<std::pair<ParamMonomial, Rational>> out(terms_.begin(),
                                                        terms_.end());
    std::stable_sort(out.begin(), out.end(), [&](const auto &x, const auto &y) {
      unsigned dx = x.first.degree(), dy = y.first.degree();
      if (dx != dy)
        return dx > dy;
      for (const auto &name : order) {
        unsigned ex = x.first.exponent(name), ey = y.first.exponent(name);
        if (ex != ey)
          return ex > ey;
      }
      return false;
    });
    return out;
  }

  /// Human-readable text such as "q^2 - 3/2*q*h + 1"; "0" for zero.
  std::string to_string(std::span<const std::string> order) const {
    if (terms_.empty())
      return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : sorted_terms(order)) {
      if (first)
        out += c.sign() < 0 ? "-" : "";
      else
        out += c.sign() < 0 ? " - " : " + ";
      first = false;
      out += format_unsigned_term(m, c.abs(), order);
    }
    return out;
  }

  std::string to_string() const {
    auto names = parameters();
    std::vector<std::string> order(names.begin(), names.end());
    return to_string(order);
  }

  /// `|c|*m` without a sign, dropping a unit factor on either side.
  static std::string format_unsigned_term(const ParamMonomial &m,
                                          const Rational &abs_c,
                                          std::span<const std::string> order) {
    std::string mono = format_monomial(m, order);
    if (mono.empty())
      return abs_c.to_string();
    if (abs_c == Rational(1))
      return mono;
    return abs_c.to_string() + "*" + mono;
  }

  static std::string format_monomial(const ParamMonomial &m,
                                     std::span<const std::string> order) {
    std::string out;
    auto emit = [&](const std::string &name, unsigned e) {
      if (!out.empty())
        out += "*";
      out += name;
      if (e > 1)
        out += "^" + std::to_string(e);
    };
    for (const auto &name : order)
      if (unsigned e = m.exponent(name))
        emit(name, e);
    // Parameters missing from `order` go last, alphabetically.
    for (const auto &[name, e] : m.exponents())
      if (std::find(order.begin(), order.end(), name) == order.end())
        emit(name, e);
    return out;
  }

private:
  TermMap terms_;
};

} // namespace ncbinom
