#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coef_poly.hpp"
#include "errors.hpp"

namespace ncbinom {

inline bool is_identifier(const std::string &s) {
  if (s.empty())
    return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0]))
    return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

/// Declares the non-commuting generators and commuting parameters that the
/// elements of one free algebra may use. Immutable once built.
class AlgebraContext {
public:
  static std::shared_ptr<const AlgebraContext>
  make(std::vector<std::string> generators,
       std::vector<std::string> parameters = {}) {
    std::set<std::string> seen;
    for (const auto *list : {&generators, &parameters})
      for (const auto &name : *list) {
        if (!is_identifier(name))
          throw ContextError("invalid name '" + name + "'");
        if (!seen.insert(name).second)
          throw ContextError("duplicate name '" + name + "'");
      }
    return std::shared_ptr<const AlgebraContext>(
        new AlgebraContext(std::move(generators), std::move(parameters)));
  }

  const std::vector<std::string> &generators() const { return generators_; }
  const std::vector<std::string> &parameters() const { return parameters_; }

  std::optional<std::uint32_t> generator_index(const std::string &name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end())
      return std::nullopt;
    return static_cast<std::uint32_t>(it - generators_.begin());
  }

  bool has_parameter(const std::string &name) const {
    return std::find(parameters_.begin(), parameters_.end(), name) !=
           parameters_.end();
  }

  const std::string &generator_name(std::uint32_t index) const {
    return generators_.at(index);
  }

  friend bool operator==(const AlgebraContext &, const AlgebraContext &) =
      default;

private:
  AlgebraContext(std::vector<std::string> g, std::vector<std::string> p)
      : generators_(std::move(g)), parameters_(std::move(p)) {}

  std::vector<std::string> generators_;
  std::vector<std::string> parameters_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

inline bool same_context(const ContextPtr &a, const ContextPtr &b) {
  return a == b || (a && b && *a == *b);
}

/// Generator, by its index in the owning context.
struct GeneratorId {
  std::uint32_t index = 0;
  friend auto operator<=>(const GeneratorId &, const GeneratorId &) = default;
};

/// Monomial in the free algebra; the empty word is the unit. Ordered by
/// length, then lexicographically on generator indices.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<std::uint32_t> letters)
      : letters_(std::move(letters)) {}

  static Word letter(GeneratorId g) { return Word({g.index}); }

  const std::vector<std::uint32_t> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return letters_[i]; }

  friend Word operator*(const Word &a, const Word &b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word &, const Word &) = default;
  friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<std::uint32_t> letters_;
};

/// Element of the free associative algebra over CoefPoly: a finite sum of
/// words with nonzero coefficients.
class FreeElement {
public:
  using TermMap = std::map<Word, CoefPoly>;

  explicit FreeElement(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_)
      throw ContextError("FreeElement: null context");
  }

  static FreeElement zero(ContextPtr ctx) { return FreeElement(std::move(ctx)); }

  static FreeElement unit(ContextPtr ctx) {
    return scalar(std::move(ctx), CoefPoly(1));
  }

  static FreeElement scalar(ContextPtr ctx, const CoefPoly &c) {
    FreeElement e(std::move(ctx));
    e.check_parameters(c);
    e.add_term(Word{}, c);
    return e;
  }

  static FreeElement generator(ContextPtr ctx, const std::string &name) {
    auto index = ctx->generator_index(name);
    if (!index)
      throw ContextError("unknown generator '" + name + "'");
    FreeElement e(std::move(ctx));
    e.terms_.emplace(Word({*index}), CoefPoly(1));
    return e;
  }

  static FreeElement monomial(ContextPtr ctx, const Word &w, const CoefPoly &c) {
    FreeElement e(std::move(ctx));
    for (auto letter : w.letters())
      if (letter >= e.ctx_->generators().size())
        throw ContextError("word uses a generator outside the context");
    e.check_parameters(c);
    e.add_term(w, c);
    return e;
  }

  const ContextPtr &context() const { return ctx_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  CoefPoly coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CoefPoly{} : it->second;
  }

  /// Coefficient of the empty word.
  CoefPoly constant_term() const { return coefficient(Word{}); }

  /// Largest word length among the terms; 0 for zero.
  std::size_t degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
  }

  void add_term(const Word &w, const CoefPoly &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  FreeElement operator-() const {
    FreeElement r = *this;
    for (auto &[w, c] : r.terms_)
      c = -c;
    return r;
  }

  FreeElement &operator+=(const FreeElement &o) {
    require_same_context(o);
    for (const auto &[w, c] : o.terms_)
      add_term(w, c);
    return *this;
  }
  FreeElement &operator-=(const FreeElement &o) {
    require_same_context(o);
    for (const auto &[w, c] : o.terms_)
      add_term(w, -c);
    return *this;
  }
  friend FreeElement operator+(FreeElement a, const FreeElement &b) {
    return a += b;
  }
  friend FreeElement operator-(FreeElement a, const FreeElement &b) {
    return a -= b;
  }

  friend FreeElement operator*(const FreeElement &a, const FreeElement &b) {
    a.require_same_context(b);
    FreeElement r(a.ctx_);
    for (const auto &[wa, ca] : a.terms_)
      for (const auto &[wb, cb] : b.terms_)
        r.add_term(wa * wb, ca * cb);
    return r;
  }
  FreeElement &operator*=(const FreeElement &o) { return *this = *this * o; }

  /// Multiplies every coefficient by `c`.
  FreeElement scaled(const CoefPoly &c) const {
    check_parameters(c);
    FreeElement r(ctx_);
    if (c.is_zero())
      return r;
    for (const auto &[w, coef] : terms_)
      r.add_term(w, c * coef);
    return r;
  }

  friend FreeElement operator*(const CoefPoly &c, const FreeElement &x) {
    return x.scaled(c);
  }

  /// Normal-form equality; throws ContextError across contexts.
  bool equals(const FreeElement &o) const {
    require_same_context(o);
    return terms_ == o.terms_;
  }
  friend bool operator==(const FreeElement &a, const FreeElement &b) {
    return a.equals(b);
  }

  /// Canonically smallest word whose coefficients differ, if any.
  std::optional<Word> first_difference(const FreeElement &o) const {
    require_same_context(o);
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first))
        return i->first;
      if (i == terms_.end() || j->first < i->first)
        return j->first;
      if (!(i->second == j->second))
        return i->first;
      ++i;
      ++j;
    }
    return std::nullopt;
  }

  std::set<std::uint32_t> generators_used() const {
    std::set<std::uint32_t> out;
    for (const auto &[w, c] : terms_)
      out.insert(w.letters().begin(), w.letters().end());
    return out;
  }

  void require_same_context(const FreeElement &o) const {
    if (!same_context(ctx_, o.ctx_))
      throw ContextError("elements belong to different algebra contexts");
  }

private:
  void check_parameters(const CoefPoly &c) const {
    for (const auto &name : c.parameters())
      if (!ctx_->has_parameter(name))
        throw ContextError("undeclared parameter '" + name + "'");
  }

  ContextPtr ctx_;
  TermMap terms_;
};

/// x^n by left-associated repeated multiplication; x^0 is the unit.
inline FreeElement power(const FreeElement &x, unsigned n) {
  FreeElement r = FreeElement::unit(x.context());
  for (unsigned i = 0; i < n; ++i)
    r = r * x;
  return r;
}

/// Commutator ab - ba.
inline FreeElement commutator(const FreeElement &a, const FreeElement &b) {
  return a * b - b * a;
}

} // namespace ncbinom
