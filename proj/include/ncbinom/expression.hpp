#pragma once

// Text form of free-algebra elements.
//
//   element := term (('+'|'-') term)*
//   term    := ('+'|'-')? factor ('*' factor)*
//   factor  := atom ('^' UINT)?
//   atom    := IDENT | UINT ('/' UINT)? | '(' element ')'
//
// Identifiers resolve to generators or parameters of the context. Products
// need an explicit '*'. format_element() emits terms in canonical word order
// and parses back to an equal element.

#include <cctype>
#include <string>
#include <string_view>

#include "free_element.hpp"

namespace ncbinom {

namespace detail {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, ContextPtr ctx)
      : text_(text), ctx_(std::move(ctx)) {}

  FreeElement parse() {
    skip_space();
    if (at_end())
      fail("empty expression");
    FreeElement e = element();
    skip_space();
    if (!at_end())
      fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

private:
  FreeElement element() {
    FreeElement sum = term();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-'))
        return sum;
      char op = take();
      FreeElement rhs = term();
      if (op == '+')
        sum += rhs;
      else
        sum -= rhs;
    }
  }

  FreeElement term() {
    skip_space();
    bool negate = false;
    if (!at_end() && (peek() == '+' || peek() == '-'))
      negate = take() == '-';
    FreeElement prod = factor();
    for (;;) {
      skip_space();
      if (at_end())
        break;
      char c = peek();
      if (c == '*') {
        take();
        prod = prod * factor();
      } else if (starts_atom(c)) {
        fail("expected '*' between factors");
      } else {
        break;
      }
    }
    return negate ? -prod : prod;
  }

  FreeElement factor() {
    FreeElement base = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      take();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent after '^'");
      std::size_t start = pos_;
      std::string digits = uint_token();
      if (digits.size() > 6)
        fail("exponent too large", start);
      base = power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  FreeElement atom() {
    skip_space();
    if (at_end())
      fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      take();
      FreeElement inner = element();
      skip_space();
      if (at_end() || peek() != ')')
        fail("expected ')'");
      take();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = uint_token();
      std::string den = "1";
      skip_space();
      if (!at_end() && peek() == '/') {
        take();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected denominator after '/'");
        std::size_t start = pos_;
        den = uint_token();
        if (mpz_class(den) == 0)
          fail("zero denominator", start);
      }
      return FreeElement::scalar(ctx_,
                                 Rational(mpz_class(num), mpz_class(den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (ctx_->generator_index(name))
        return FreeElement::generator(ctx_, name);
      if (ctx_->has_parameter(name))
        return FreeElement::scalar(ctx_, CoefPoly::variable(name));
      throw ContextError("unknown identifier '" + name + "' at column " +
                         std::to_string(column_of(start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string uint_token() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool starts_atom(char c) {
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::size_t line_of(std::size_t at) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i)
      line += text_[i] == '\n';
    return line;
  }
  std::size_t column_of(std::size_t at) const {
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i)
      col = text_[i] == '\n' ? 1 : col + 1;
    return col;
  }

  [[noreturn]] void fail(const std::string &msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string &msg, std::size_t at) {
    throw ParseError(msg, at, line_of(at), column_of(at));
  }

  std::string_view text_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline FreeElement parse_element(std::string_view text, const ContextPtr &ctx) {
  return detail::ExpressionParser(text, ctx).parse();
}

inline std::string format_word(const Word &w, const AlgebraContext &ctx) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += "*";
    out += ctx.generator_name(w[i]);
  }
  return out;
}

/// Canonical text: terms in word order, "0" for zero, "1" for the unit.
inline std::string format_element(const FreeElement &x) {
  if (x.is_zero())
    return "0";
  const auto &ctx = *x.context();
  const auto &order = ctx.parameters();
  std::string out;
  bool first = true;
  for (const auto &[w, c] : x.terms()) {
    bool negative = false;
    std::string body;
    if (c.terms().size() == 1) {
      const auto &[m, r] = *c.terms().begin();
      negative = r.sign() < 0;
      std::string coef = CoefPoly::format_unsigned_term(m, r.abs(), order);
      if (w.empty())
        body = coef;
      else if (coef == "1")
        body = format_word(w, ctx);
      else
        body = coef + "*" + format_word(w, ctx);
    } else {
      body = "(" + c.to_string(order) + ")";
      if (!w.empty())
        body += "*" + format_word(w, ctx);
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

} // namespace ncbinom
