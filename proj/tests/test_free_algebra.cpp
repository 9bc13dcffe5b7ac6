#include <gtest/gtest.h>

#include <random>

#include <ncbinom/random.hpp>
#include <ncbinom/serialize.hpp>

#include "oracles.hpp"

using namespace ncbinom;

namespace {

ContextPtr abc() { return AlgebraContext::make({"a", "b", "c"}); }

} // namespace

TEST(Context, RejectsBadNames) {
  EXPECT_THROW(AlgebraContext::make({"a", "a"}), ContextError);
  EXPECT_THROW(AlgebraContext::make({"1a"}), ContextError);
  EXPECT_THROW(AlgebraContext::make({"a"}, {"a"}), ContextError);
  EXPECT_NO_THROW(AlgebraContext::make({"x_1", "Y2"}, {"q"}));
}

TEST(Word, OrderIsLengthThenLex) {
  Word a({0}), b({1}), aa({0, 0}), ab({0, 1});
  EXPECT_LT(Word{}, a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, aa);
  EXPECT_LT(aa, ab);
  EXPECT_EQ(a * b, ab);
}

TEST(FreeElement, ProductsMatchStringOracle) {
  auto ctx = abc();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_poly(rng, "abc", 4, 3);
    auto r = oracle::random_poly(rng, "abc", 4, 3);
    auto x = oracle::to_library(p, ctx);
    auto y = oracle::to_library(r, ctx);
    ASSERT_EQ(oracle::from_library(x * y), p * r);
    ASSERT_EQ(oracle::from_library(x + y), p + r);
    ASSERT_EQ(oracle::from_library(x - y), p - r);
  }
}

TEST(FreeElement, RingAxiomsRandomized) {
  auto ctx = abc();
  Rng rng(5);
  RandomElementShape shape;
  shape.fractional = true;
  auto one = FreeElement::unit(ctx);
  auto zero = FreeElement::zero(ctx);
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(ctx, rng, shape);
    auto y = random_element(ctx, rng, shape);
    auto z = random_element(ctx, rng, shape);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * one, x);
    ASSERT_EQ(one * x, x);
    ASSERT_EQ(x - x, zero);
    ASSERT_EQ(x * zero, zero);
  }
}

TEST(FreeElement, PowerAdditivity) {
  auto ctx = abc();
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    auto x = random_element(ctx, rng, {3, 2, 0, 2, false});
    for (unsigned j = 0; j <= 3; ++j)
      for (unsigned k = 0; k <= 3; ++k)
        ASSERT_EQ(power(x, j) * power(x, k), power(x, j + k));
  }
}

TEST(FreeElement, NonCommutative) {
  auto ctx = abc();
  auto a = FreeElement::generator(ctx, "a");
  auto b = FreeElement::generator(ctx, "b");
  EXPECT_FALSE(a * b == b * a);
  auto d = (a * b).first_difference(b * a);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, Word({0, 1}));
  EXPECT_EQ(commutator(a, b), a * b - b * a);
}

TEST(FreeElement, ContextMismatchThrows) {
  auto a = FreeElement::generator(abc(), "a");
  auto x = FreeElement::generator(AlgebraContext::make({"x"}), "x");
  EXPECT_THROW((void)(a + x), ContextError);
  EXPECT_THROW((void)(a * x), ContextError);
  EXPECT_THROW((void)(a == x), ContextError);
  EXPECT_THROW(FreeElement::generator(abc(), "z"), ContextError);
  EXPECT_THROW(a.scaled(CoefPoly::variable("q")), ContextError);
}

TEST(FreeElement, StructurallyEqualContextsInteroperate) {
  auto a1 = FreeElement::generator(abc(), "a");
  auto a2 = FreeElement::generator(abc(), "a");
  EXPECT_EQ(a1, a2);
}

TEST(Serialize, JsonRoundTrip) {
  auto ctx = AlgebraContext::make({"a", "b"}, {"q", "h"});
  Rng rng(13);
  RandomElementShape shape;
  shape.fractional = true;
  for (int i = 0; i < 100; ++i) {
    FreeElement x = random_element(ctx, rng, shape);
    x = x.scaled(CoefPoly::variable("q") + CoefPoly(Rational(i % 5 - 2)));
    auto j = to_json(x);
    auto back = element_from_json(nlohmann::json::parse(j.dump()), ctx);
    ASSERT_EQ(back, x) << j.dump();
  }
}

TEST(Serialize, Shape) {
  auto ctx = AlgebraContext::make({"a", "b"}, {"q"});
  auto x = FreeElement::monomial(ctx, Word({1, 0}),
                                 CoefPoly::variable("q") - CoefPoly(1));
  auto j = to_json(x);
  ASSERT_EQ(j.at("terms").size(), 1u);
  EXPECT_EQ(j["terms"][0]["word"], nlohmann::json::array({"b", "a"}));
}
