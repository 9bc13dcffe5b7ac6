#include <gtest/gtest.h>

#include <ncbinom/derivation.hpp>
#include <ncbinom/random.hpp>

#include "oracles.hpp"

using namespace ncbinom;
using oracle::StrPoly;

namespace {

ContextPtr abc() { return AlgebraContext::make({"a", "b", "c"}); }

FreeElement gen(const ContextPtr &ctx, const char *name) {
  return FreeElement::generator(ctx, name);
}

StrPoly oracle_delta(const StrPoly &l, const StrPoly &r, StrPoly x, unsigned n) {
  for (unsigned i = 0; i < n; ++i)
    x = l * x - x * r;
  return x;
}

/// sum_k C(n,k) delta_{a,b}^{n-k}(1) b^k with delta iterated, not closed form.
StrPoly oracle_theorem_rhs(const StrPoly &a, const StrPoly &b, unsigned n) {
  StrPoly sum;
  for (unsigned k = 0; k <= n; ++k)
    sum = sum + mpq_class(oracle::choose(n, k)) *
                    (oracle_delta(a, b, StrPoly::one(), n - k) * oracle::pow(b, k));
  return sum;
}

} // namespace

TEST(Derivation, SmallCasesByHand) {
  auto ctx = abc();
  auto a = gen(ctx, "a"), b = gen(ctx, "b");
  DerivationOp op(a, b);
  auto one = FreeElement::unit(ctx);
  EXPECT_EQ(format_element(op(one)), "a - b");
  EXPECT_EQ(format_element(delta_power_closed(op, one, 2)), "a*a - 2*a*b + b*b");
  EXPECT_EQ(format_element(DerivationOp::inner(a)(b)), "a*b - b*a");
}

TEST(Derivation, ClosedFormMatchesOracleIteration) {
  auto ctx = abc();
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto l = oracle::random_poly(rng, "abc", 2, 2);
    auto r = oracle::random_poly(rng, "abc", 2, 2);
    auto x = oracle::random_poly(rng, "abc", 2, 2);
    DerivationOp op(oracle::to_library(l, ctx), oracle::to_library(r, ctx));
    auto lx = oracle::to_library(x, ctx);
    for (unsigned n = 0; n <= 6; ++n) {
      auto expect = oracle_delta(l, r, x, n);
      ASSERT_EQ(oracle::from_library(delta_power_closed(op, lx, n)), expect);
      ASSERT_EQ(oracle::from_library(delta_power_iter(op, lx, n)), expect);
    }
  }
}

TEST(Derivation, LeibnizAndLinearity) {
  auto ctx = abc();
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto b = random_element(ctx, rng, {2, 2, 0, 3, false});
    auto x = random_element(ctx, rng);
    auto y = random_element(ctx, rng);
    auto d = DerivationOp::inner(b);
    ASSERT_EQ(d(x * y), d(x) * y + x * d(y));
    ASSERT_EQ(d(x + y), d(x) + d(y));
    auto c = random_element(ctx, rng, {2, 2, 0, 3, false});
    DerivationOp g(b, c);
    ASSERT_EQ(g(x.scaled(CoefPoly(Rational(3, 7))) - y),
              g(x).scaled(CoefPoly(Rational(3, 7))) - g(y));
    // delta_{b,c}(xy) = delta_{b,e}(x) y + x delta_{e,c}(y) for any e.
    auto e = random_element(ctx, rng, {2, 1, 0, 2, false});
    ASSERT_EQ(g(x * y), DerivationOp(b, e)(x) * y + x * DerivationOp(e, c)(y));
  }
}

TEST(Derivation, TheoremGeneratorsAgainstOracle) {
  auto ctx = abc();
  auto a = gen(ctx, "a"), b = gen(ctx, "b");
  for (unsigned n = 0; n <= 8; ++n) {
    auto rep = verify_theorem(a, b, n);
    EXPECT_TRUE(rep.equal) << n;
    EXPECT_EQ(oracle::from_library(rep.rhs),
              oracle_theorem_rhs(StrPoly::word("a"), StrPoly::word("b"), n));
    EXPECT_EQ(oracle::from_library(rep.lhs), oracle::pow(StrPoly::word("a"), n));
  }
}

TEST(Derivation, TheoremRandomElements) {
  auto ctx = abc();
  Rng rng(29);
  RandomElementShape shape{3, 2, 0, 3, true};
  for (int i = 0; i < 30; ++i) {
    auto a = random_element(ctx, rng, shape);
    auto b = random_element(ctx, rng, shape);
    for (unsigned n = 0; n <= 4; ++n)
      ASSERT_TRUE(verify_theorem(a, b, n).equal);
  }
}

TEST(Derivation, CorollariesAgainstOracle) {
  auto ctx = abc();
  auto a = gen(ctx, "a"), b = gen(ctx, "b"), c = gen(ctx, "c");
  StrPoly sa = StrPoly::word("a"), sb = StrPoly::word("b");
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::from_library(corollary_i_rhs(a, b, n)),
              oracle::pow(sa, n) - oracle::pow(sb, n));
    EXPECT_TRUE(verify_power_difference(a, b, n).equal);
  }
  EXPECT_THROW(corollary_i_rhs(a, b, 0), std::invalid_argument);
  for (unsigned n = 0; n <= 6; ++n) {
    auto expect = oracle::pow(sa + sb, n);
    for (const auto *m : {&a, &b, &c}) {
      EXPECT_EQ(oracle::from_library(ncbinom_rhs(a, b, *m, n)), expect);
      EXPECT_EQ(oracle::from_library(ncbinom_double_sum(a, b, *m, n)), expect);
      EXPECT_EQ(ncbinom_rhs_left(a, b, n), ncbinom_rhs(a, b, a, n));
      EXPECT_EQ(ncbinom_rhs_right(a, b, n), ncbinom_rhs(a, b, b, n));
    }
    EXPECT_EQ(oracle::from_library(wyss_rhs(a, b, n)), expect);
    EXPECT_TRUE(verify_wyss(a, b, n).equal);
  }
}

TEST(Derivation, Applications) {
  auto ctx = abc();
  auto a = gen(ctx, "a"), b = gen(ctx, "b"), c = gen(ctx, "c");
  StrPoly comm = StrPoly::word("ab") - StrPoly::word("ba");
  for (unsigned n = 0; n <= 4; ++n) {
    auto [r1, r2] = application_identities(a, b, c, n);
    EXPECT_TRUE(r1.equal);
    EXPECT_TRUE(r2.equal);
    EXPECT_EQ(oracle::from_library(r1.lhs), oracle::pow(comm, n));
    EXPECT_EQ(oracle::from_library(r2.lhs), oracle::pow(StrPoly::word("ab"), n));
  }
}

TEST(Derivation, ReportsDiscrepancy) {
  auto ctx = abc();
  auto a = gen(ctx, "a"), b = gen(ctx, "b");
  // Commutative binomial formula is false here.
  IdentityReport rep("commutative-guess", 2, {}, power(a + b, 2),
                     a * a + (a * b).scaled(CoefPoly(2)) + b * b);
  EXPECT_FALSE(rep.equal);
  ASSERT_TRUE(rep.first_discrepant_word.has_value());
  EXPECT_EQ(*rep.first_discrepant_word, Word({0, 1}));
  auto j = to_json(rep);
  EXPECT_EQ(j["firstDiscrepantWord"], nlohmann::json::array({"a", "b"}));
  EXPECT_FALSE(j["equal"].get<bool>());
  EXPECT_TRUE(to_json(verify_theorem(a, b, 3))["firstDiscrepantWord"].is_null());
}

TEST(Derivation, ContextMismatch) {
  auto a = gen(abc(), "a");
  auto x = FreeElement::generator(AlgebraContext::make({"x"}), "x");
  EXPECT_THROW(DerivationOp(a, x), ContextError);
  EXPECT_THROW(verify_theorem(a, x, 2), ContextError);
}
