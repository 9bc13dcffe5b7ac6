#include <gtest/gtest.h>

#include <random>

#include <ncbinom/coef_poly.hpp>
#include <ncbinom/rational.hpp>

using namespace ncbinom;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 3).abs(), Rational(7, 3));
  EXPECT_EQ(Rational(3, 5).to_string(), "3/5");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/5"), Rational(3, 5));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, BinomialPascalExhaustive) {
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k < n; ++k)
      ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))
          << n << "," << k;
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(5, 6), Rational(0));
  EXPECT_EQ(binomial(5, -1), Rational(0));
  EXPECT_EQ(binomial(0, 0), Rational(1));
}

TEST(Rational, BinomialMatchesFactorialQuotient) {
  for (int n = 0; n <= 30; ++n) {
    mpz_class fact_n = 1;
    for (int i = 2; i <= n; ++i)
      fact_n *= i;
    for (int k = 0; k <= n; ++k) {
      mpz_class fk = 1, fnk = 1;
      for (int i = 2; i <= k; ++i)
        fk *= i;
      for (int i = 2; i <= n - k; ++i)
        fnk *= i;
      ASSERT_EQ(binomial(n, k), Rational(mpz_class(fact_n / (fk * fnk))));
    }
  }
}

namespace {

CoefPoly random_coef(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), count(0, 3);
  CoefPoly p;
  for (int t = count(rng); t > 0; --t) {
    ParamMonomial m = ParamMonomial::variable("q", e(rng)) *
                      ParamMonomial::variable("h", e(rng));
    p.add_term(m, Rational(c(rng)));
  }
  return p;
}

} // namespace

TEST(CoefPoly, RingAxiomsRandomized) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CoefPoly a = random_coef(rng), b = random_coef(rng), c = random_coef(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, CoefPoly{});
    ASSERT_EQ(a * CoefPoly(1), a);
  }
}

TEST(CoefPoly, PowAdditivityAndEvaluation) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    CoefPoly a = random_coef(rng);
    for (unsigned j = 0; j <= 3; ++j)
      for (unsigned k = 0; k <= 3; ++k)
        ASSERT_EQ(a.pow(j) * a.pow(k), a.pow(j + k));
    std::map<std::string, Rational> point{{"q", Rational(2, 3)}, {"h", Rational(-5)}};
    CoefPoly b = random_coef(rng);
    ASSERT_EQ((a * b).evaluate(point), a.evaluate(point) * b.evaluate(point));
    ASSERT_EQ(a.substitute("q", Rational(2, 3)).substitute("h", Rational(-5)),
              CoefPoly(a.evaluate(point)));
  }
}

TEST(CoefPoly, Formatting) {
  const std::vector<std::string> order{"q", "h"};
  CoefPoly q = CoefPoly::variable("q");
  EXPECT_EQ((q - CoefPoly(1)).to_string(order), "q - 1");
  EXPECT_EQ((CoefPoly(1) + CoefPoly::variable("h")).to_string(order), "h + 1");
  EXPECT_EQ((q * q + CoefPoly(Rational(3, 5))).to_string(order), "q^2 + 3/5");
  EXPECT_EQ(CoefPoly{}.to_string(order), "0");
}
