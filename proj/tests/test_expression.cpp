#include <gtest/gtest.h>

#include <ncbinom/expression.hpp>
#include <ncbinom/random.hpp>

#include "oracles.hpp"

using namespace ncbinom;

namespace {

ContextPtr ab() { return AlgebraContext::make({"a", "b"}); }

std::string expand(const std::string &s, const ContextPtr &ctx) {
  return format_element(parse_element(s, ctx));
}

} // namespace

TEST(Expression, Golden) {
  auto ctx = ab();
  EXPECT_EQ(expand("(a+b)^2", ctx), "a*a + a*b + b*a + b*b");
  EXPECT_EQ(expand("1", ctx), "1");
  EXPECT_EQ(expand("a - a", ctx), "0");
  EXPECT_EQ(expand("2*a*b - b*a", ctx), "2*a*b - b*a");
  EXPECT_EQ(expand("-a", ctx), "-a");
  EXPECT_EQ(expand("3/5*a + 1/2", ctx), "1/2 + 3/5*a");
  EXPECT_EQ(expand("(a - b)^0", ctx), "1");
}

TEST(Expression, ParametersInCoefficients) {
  auto ctx = AlgebraContext::make({"a", "b"}, {"q"});
  EXPECT_EQ(expand("q*b*a - b*a", ctx), "(q - 1)*b*a");
  EXPECT_EQ(expand("3/5*q*a", ctx), "3/5*q*a");
  EXPECT_EQ(expand("a*q", ctx), "q*a");
}

TEST(Expression, ExpansionMatchesOracle) {
  auto ctx = AlgebraContext::make({"a", "b", "c"});
  for (unsigned n = 0; n <= 5; ++n) {
    auto e = parse_element("(a + 2*b - c)^" + std::to_string(n), ctx);
    auto base = oracle::StrPoly::word("a") + oracle::StrPoly::word("b", 2) -
                oracle::StrPoly::word("c");
    ASSERT_EQ(oracle::from_library(e), oracle::pow(base, n));
  }
}

TEST(Expression, RoundTripRandomized) {
  auto ctx = AlgebraContext::make({"a", "b", "c"}, {"q", "h"});
  Rng rng(17);
  RandomElementShape shape;
  shape.fractional = true;
  for (int i = 0; i < 300; ++i) {
    FreeElement x = random_element(ctx, rng, shape);
    if (i % 3 == 0)
      x = x.scaled(CoefPoly(1) - CoefPoly::variable("q") * CoefPoly::variable("h"));
    auto text = format_element(x);
    ASSERT_EQ(parse_element(text, ctx), x) << text;
    ASSERT_EQ(format_element(parse_element(text, ctx)), text);
  }
}

TEST(Expression, JuxtapositionIsAnError) {
  auto ctx = ab();
  try {
    parse_element("a b", ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_element("2a", ctx), ParseError);
}

TEST(Expression, ErrorPositions) {
  auto ctx = ab();
  try {
    parse_element("a +\n  * b", ctx);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_element("", ctx), ParseError);
  EXPECT_THROW(parse_element("(a + b", ctx), ParseError);
  EXPECT_THROW(parse_element("a^", ctx), ParseError);
  EXPECT_THROW(parse_element("a^-1", ctx), ParseError);
  EXPECT_THROW(parse_element("1/0", ctx), ParseError);
  EXPECT_THROW(parse_element("a^12345678", ctx), ParseError);
}

TEST(Expression, UnknownIdentifierIsContextError) {
  EXPECT_THROW(parse_element("a*z", ab()), ContextError);
}
