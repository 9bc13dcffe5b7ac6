#include <gtest/gtest.h>

#include <ncbinom/suites.hpp>

using namespace ncbinom;

namespace {

nlohmann::json run_json(Suite s, std::uint64_t seed = kDefaultSeed) {
  SuiteConfig cfg;
  cfg.suite = s;
  cfg.seed = seed;
  auto j = to_json(run_suite(cfg));
  j.erase("wallTimeMs");
  return j;
}

} // namespace

TEST(Suites, EveryNamedSuitePasses) {
  for (const auto &[name, s] : suite_names()) {
    if (s == Suite::all)
      continue;
    SuiteConfig cfg;
    cfg.suite = s;
    auto report = run_suite(cfg);
    EXPECT_GT(report.pass_count, 0) << name;
    for (const auto &c : report.cases)
      EXPECT_TRUE(c.passed) << name << ": " << c.label << "\n" << c.detail.dump();
  }
}

TEST(Suites, TheoremGrid) {
  SuiteConfig cfg;
  cfg.suite = Suite::theorem;
  EXPECT_EQ(run_suite(cfg).cases.size(), 9u);
  cfg.n_max = 3;
  EXPECT_EQ(run_suite(cfg).cases.size(), 4u);
}

TEST(Suites, DeterministicUnderSeed) {
  EXPECT_EQ(run_json(Suite::prop21), run_json(Suite::prop21));
  EXPECT_EQ(run_json(Suite::negpow, 5), run_json(Suite::negpow, 5));
  EXPECT_NE(run_json(Suite::prop21, 1), run_json(Suite::prop21, 2));
}

TEST(Suites, JsonShape) {
  auto j = run_json(Suite::wyss);
  EXPECT_EQ(j["config"]["suite"], "wyss");
  EXPECT_TRUE(j["config"]["nMax"].is_null());
  EXPECT_EQ(j["failCount"], 0);
  EXPECT_EQ(j["passCount"].get<int>(), static_cast<int>(j["cases"].size()));
  for (const auto &c : j["cases"]) {
    EXPECT_TRUE(c.contains("case"));
    EXPECT_EQ(c["report"]["identity"], "wyss-binomial");
  }
}

TEST(Suites, ConfigErrors) {
  EXPECT_THROW(parse_suite("nope"), UsageError);
  EXPECT_EQ(parse_suite("qbinom"), Suite::qbinom);
  EXPECT_EQ(suite_name(Suite::all), "all");
  SuiteConfig cfg;
  cfg.tol = 0;
  EXPECT_THROW(run_suite(cfg), UsageError);
  cfg.tol = 1e-10;
  cfg.n_max = -1;
  EXPECT_THROW(run_suite(cfg), UsageError);
}

TEST(Suites, TextReport) {
  SuiteConfig cfg;
  cfg.suite = Suite::theorem;
  auto text = to_text(run_suite(cfg));
  EXPECT_NE(text.find("PASS theorem: power-expansion n=8"), std::string::npos);
  EXPECT_NE(text.find("summary: 9 passed, 0 failed"), std::string::npos);
}
