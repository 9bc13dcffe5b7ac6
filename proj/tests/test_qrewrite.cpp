#include <gtest/gtest.h>

#include <ncbinom/qrewrite.hpp>
#include <ncbinom/random.hpp>

#include "oracles.hpp"

using namespace ncbinom;

namespace {

/// Under xy = q yx a word normalizes to q^{#(x before y pairs)} y^{#y} x^{#x}.
FreeElement oracle_normal_word(const Word &w, const ContextPtr &ctx) {
  unsigned xs = 0, ys = 0, inv = 0;
  for (auto l : w.letters()) {
    if (l == 0)
      ++xs;
    else {
      ++ys;
      inv += xs;
    }
  }
  std::vector<std::uint32_t> letters(ys, 1);
  letters.insert(letters.end(), xs, 0);
  return FreeElement::monomial(ctx, Word(std::move(letters)),
                               CoefPoly::variable("q", inv));
}

} // namespace

TEST(QRewrite, ExampleElement) {
  auto ctx = AlgebraContext::make({"a", "b"}, {"q"});
  QRelation rel(ctx, "a", "b", "q");
  auto e = parse_element("a*b - b*a", ctx);
  EXPECT_EQ(format_element(normalize(e, rel).element()), "(q - 1)*b*a");
}

TEST(QRewrite, WordsMatchInversionOracle) {
  auto ctx = q_context();
  QRelation rel(ctx, "x", "y", "q");
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto s = oracle::random_word(rng, "xy", 0, 9);
    std::vector<std::uint32_t> letters;
    for (char c : s)
      letters.push_back(c == 'x' ? 0 : 1);
    Word w(std::move(letters));
    auto nf = normalize(FreeElement::monomial(ctx, w, CoefPoly(1)), rel);
    ASSERT_EQ(nf.element(), oracle_normal_word(w, ctx)) << s;
  }
}

TEST(QRewrite, IdempotentAndMultiplicative) {
  auto ctx = q_context();
  for (bool with_h : {false, true}) {
    QRelation rel(ctx, "x", "y", "q",
                  with_h ? std::optional<std::string>("h") : std::nullopt);
    Rng rng(with_h ? 37 : 41);
    for (int i = 0; i < 60; ++i) {
      auto u = random_element(ctx, rng, {3, 4, 0, 3, false});
      auto v = random_element(ctx, rng, {3, 4, 0, 3, false});
      auto nu = normalize(u, rel).element();
      auto nv = normalize(v, rel).element();
      ASSERT_EQ(normalize(nu, rel).element(), nu);
      for (const auto &[w, c] : nu.terms())
        ASSERT_TRUE(NormalForm::is_normal_word(w, rel.x()));
      ASSERT_EQ(normalize(u * v, rel).element(), normalize(nu * nv, rel).element());
      ASSERT_EQ(normalize(u + v, rel).element(), nu + nv);
    }
  }
}

TEST(QRewrite, GaussianAgainstLongDivision) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      ASSERT_EQ(oracle::from_library(gaussian_binomial(n, k)), oracle::gaussian(n, k))
          << n << "," << k;
  EXPECT_TRUE(gaussian_binomial(3, 4).is_zero());
  EXPECT_TRUE(gaussian_binomial(3, -1).is_zero());
  const std::vector<std::string> order{"q"};
  EXPECT_EQ(gaussian_binomial(4, 2).to_string(order), "q^4 + q^3 + 2*q^2 + q + 1");
}

TEST(QRewrite, GaussianMultiplicativeIdentity) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      ASSERT_EQ(gaussian_binomial(n, k) * q_pochhammer(k) * q_pochhammer(n - k),
                q_pochhammer(n));
}

TEST(QRewrite, ClassicalLimit) {
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      ASSERT_EQ(gaussian_binomial(n, k).substitute("q", Rational(1)),
                CoefPoly(binomial(n, k)));
}

TEST(QRewrite, BracketAndPochhammer) {
  EXPECT_TRUE(q_bracket(0).is_zero());
  EXPECT_EQ(q_bracket(3), CoefPoly(1) + CoefPoly::variable("q") +
                              CoefPoly::variable("q", 2));
  for (unsigned j = 0; j <= 8; ++j)
    ASSERT_EQ(q_bracket(j) * (CoefPoly(1) - CoefPoly::variable("q")),
              CoefPoly(1) - CoefPoly::variable("q", j));
  EXPECT_EQ(q_pochhammer(0), CoefPoly(1));
}

TEST(QRewrite, BinomialTheorems) {
  for (unsigned n = 0; n <= 10; ++n)
    EXPECT_TRUE(verify_q_binomial(n, false).equal) << n;
  for (unsigned n = 0; n <= 8; ++n)
    EXPECT_TRUE(verify_q_binomial(n, true).equal) << n;
}

TEST(QRewrite, SquareWithH) {
  auto ctx = q_context();
  QRelation rel(ctx, "x", "y", "q", "h");
  auto x = FreeElement::generator(ctx, "x"), y = FreeElement::generator(ctx, "y");
  auto nf = normalize(power(x + y, 2), rel).element();
  EXPECT_EQ(nf.coefficient(Word({1, 1})), CoefPoly(1) + CoefPoly::variable("h"));
  EXPECT_EQ(nf.coefficient(Word({1, 0})), CoefPoly(1) + CoefPoly::variable("q"));
  EXPECT_EQ(nf.coefficient(Word({0, 0})), CoefPoly(1));
  EXPECT_EQ(benaoum_coefficient(2, 2), CoefPoly(1) + CoefPoly::variable("h"));
}

TEST(QRewrite, Errors) {
  auto ctx = AlgebraContext::make({"x", "y", "z"}, {"q"});
  EXPECT_THROW(QRelation(ctx, "x", "w", "q"), ContextError);
  EXPECT_THROW(QRelation(ctx, "x", "x", "q"), ContextError);
  EXPECT_THROW(QRelation(ctx, "x", "y", "p"), ContextError);
  EXPECT_THROW(QRelation(ctx, "x", "y", "q", "h"), ContextError);
  QRelation rel(ctx, "x", "y", "q");
  EXPECT_THROW(normalize(FreeElement::generator(ctx, "z"), rel), ContextError);
  auto other = FreeElement::generator(q_context(), "x");
  EXPECT_THROW(normalize(other, rel), ContextError);
}
