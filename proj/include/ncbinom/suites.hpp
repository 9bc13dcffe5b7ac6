#pragma once

// Verification suites behind `ncbinom verify`. Each suite walks a fixed
// parameter grid and yields one CaseResult per checked instance, in a
// deterministic order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "banach.hpp"
#include "derivation.hpp"
#include "qrewrite.hpp"
#include "random.hpp"
#include "unitization.hpp"

namespace ncbinom {

enum class Suite { theorem, corollary, wyss, qbinom, unitized, prop21, negpow, all };
enum class OutputFormat { text, json };

inline const std::vector<std::pair<std::string, Suite>> &suite_names() {
  static const std::vector<std::pair<std::string, Suite>> names = {
      {"theorem", Suite::theorem},   {"corollary", Suite::corollary},
      {"wyss", Suite::wyss},         {"qbinom", Suite::qbinom},
      {"unitized", Suite::unitized}, {"prop21", Suite::prop21},
      {"negpow", Suite::negpow},     {"all", Suite::all}};
  return names;
}

inline Suite parse_suite(const std::string &name) {
  for (const auto &[n, s] : suite_names())
    if (n == name)
      return s;
  throw UsageError("unknown suite '" + name + "'");
}

inline std::string suite_name(Suite s) {
  for (const auto &[n, v] : suite_names())
    if (v == s)
      return n;
  return "?";
}

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteConfig {
  Suite suite = Suite::all;
  std::optional<int> n_max; ///< unset: each suite's documented default
  double tol = 1e-10;
  std::uint64_t seed = kDefaultSeed;
  OutputFormat output = OutputFormat::text;

  void validate() const {
    if (n_max && *n_max < 0)
      throw UsageError("n-max must be non-negative");
    if (!(tol > 0))
      throw UsageError("tol must be positive");
  }

  int n_max_or(int fallback) const { return n_max.value_or(fallback); }
};

struct CaseResult {
  std::string suite;
  std::string label;
  bool passed = false;
  nlohmann::json detail;
};

struct RunReport {
  SuiteConfig config;
  std::vector<CaseResult> cases;
  int pass_count = 0;
  int fail_count = 0;
  double wall_time_ms = 0.0;

  bool ok() const { return fail_count == 0; }
};

namespace detail {

inline std::string label(const std::string &what, unsigned n,
                         const std::string &extra = "") {
  std::string s = what + " n=" + std::to_string(n);
  if (!extra.empty())
    s += " " + extra;
  return s;
}

class CaseSink {
public:
  explicit CaseSink(std::string suite) : suite_(std::move(suite)) {}

  void add(const IdentityReport &r, const std::string &extra = "") {
    cases.push_back({suite_, label(r.identity, static_cast<unsigned>(r.n), extra),
                     r.equal, to_json(r)});
  }
  void add(const UnitizedReport &r, const std::string &extra = "") {
    auto j = to_json(r.identity);
    j["lhsScalar"] = r.lhs.scalar_part().to_string();
    j["rhsScalar"] = r.rhs.scalar_part().to_string();
    cases.push_back({suite_,
                     label(r.identity.identity,
                           static_cast<unsigned>(r.identity.n), extra),
                     r.passed(), std::move(j)});
  }
  void add(std::string lbl, bool passed, nlohmann::json detail) {
    cases.push_back({suite_, std::move(lbl), passed, std::move(detail)});
  }

  std::vector<CaseResult> cases;

private:
  std::string suite_;
};

inline std::vector<CaseResult> run_theorem(const SuiteConfig &cfg) {
  CaseSink sink("theorem");
  auto ctx = AlgebraContext::make({"a", "b"});
  auto a = FreeElement::generator(ctx, "a");
  auto b = FreeElement::generator(ctx, "b");
  for (unsigned n = 0; n <= static_cast<unsigned>(cfg.n_max_or(8)); ++n)
    sink.add(verify_theorem(a, b, n));
  return sink.cases;
}

inline std::vector<CaseResult> run_corollary(const SuiteConfig &cfg) {
  CaseSink sink("corollary");
  auto ctx = AlgebraContext::make({"a", "b", "c"});
  auto a = FreeElement::generator(ctx, "a");
  auto b = FreeElement::generator(ctx, "b");
  auto c = FreeElement::generator(ctx, "c");
  const auto n_max = static_cast<unsigned>(cfg.n_max_or(6));
  for (unsigned n = 1; n <= n_max; ++n)
    sink.add(verify_power_difference(a, b, n));
  for (unsigned n = 0; n <= n_max; ++n)
    for (const auto *mod : {&a, &b, &c}) {
      std::string extra = "c=" + format_element(*mod);
      sink.add(verify_ncbinom(a, b, *mod, n), extra);
      sink.add(verify_ncbinom_double_sum(a, b, *mod, n), extra);
    }
  for (unsigned n = 0; n <= std::min(n_max, 4u); ++n) {
    auto [comm, prod] = application_identities(a, b, c, n);
    sink.add(comm);
    sink.add(prod);
  }
  return sink.cases;
}

inline std::vector<CaseResult> run_wyss(const SuiteConfig &cfg) {
  CaseSink sink("wyss");
  auto ctx = AlgebraContext::make({"a", "b"});
  auto a = FreeElement::generator(ctx, "a");
  auto b = FreeElement::generator(ctx, "b");
  for (unsigned n = 0; n <= static_cast<unsigned>(cfg.n_max_or(6)); ++n)
    sink.add(verify_wyss(a, b, n));
  return sink.cases;
}

/// True iff [n,k]_q (q;q)_k (q;q)_{n-k} = (q;q)_n for every 0 <= k <= n.
inline bool gaussian_multiplicative_holds(unsigned n) {
  for (unsigned k = 0; k <= n; ++k)
    if (!(gaussian_binomial(n, k) * q_pochhammer(k) * q_pochhammer(n - k) ==
          q_pochhammer(n)))
      return false;
  return true;
}

/// Setting q = 1, h = 0 in the normal-form coefficients of (x+y)^n gives C(n,k).
inline bool classical_limit_holds(const IdentityReport &rep, unsigned n) {
  auto ctx = rep.lhs.context();
  auto x = FreeElement::generator(ctx, "x");
  auto y = FreeElement::generator(ctx, "y");
  for (unsigned k = 0; k <= n; ++k) {
    auto word = (power(y, k) * power(x, n - k)).terms().begin()->first;
    Rational v = rep.lhs.coefficient(word).evaluate({{"q", 1}, {"h", 0}});
    if (!(v == binomial(n, k)))
      return false;
  }
  return true;
}

inline std::vector<CaseResult> run_qbinom(const SuiteConfig &cfg) {
  CaseSink sink("qbinom");
  const auto n_max = static_cast<unsigned>(cfg.n_max_or(10));
  for (unsigned n = 0; n <= n_max; ++n) {
    auto rep = verify_q_binomial(n, false);
    bool limit = classical_limit_holds(rep, n);
    sink.add(rep);
    sink.add(label("q-binomial-classical-limit", n), limit,
             {{"identity", "q-binomial-classical-limit"}, {"n", n}, {"equal", limit}});
  }
  for (unsigned n = 0; n <= std::min(n_max, 8u); ++n)
    sink.add(verify_q_binomial(n, true));
  for (unsigned n = 0; n <= std::max(n_max, 12u); ++n) {
    bool ok = gaussian_multiplicative_holds(n);
    sink.add(label("gaussian-multiplicative", n), ok,
             {{"identity", "gaussian-multiplicative"}, {"n", n}, {"equal", ok}});
  }
  return sink.cases;
}

inline const std::vector<Rational> &unitized_scalars() {
  static const std::vector<Rational> s = {Rational(0), Rational(1),
                                          Rational(-2), Rational(3, 5)};
  return s;
}

inline std::vector<CaseResult> run_unitized(const SuiteConfig &cfg) {
  CaseSink sink("unitized");
  auto ctx = AlgebraContext::make({"a", "b", "c"}, {"beta"});
  NonUnitalElement a(FreeElement::generator(ctx, "a"));
  NonUnitalElement b(FreeElement::generator(ctx, "b"));
  NonUnitalElement c(FreeElement::generator(ctx, "c"));
  const auto n_max = static_cast<unsigned>(cfg.n_max_or(6));
  for (unsigned n = 0; n <= n_max; ++n) {
    for (const auto &s : unitized_scalars()) {
      std::string tag = "scalar=" + s.to_string();
      sink.add(verify_unitized_power(a, b, CoefPoly(s), n), tag);
      sink.add(verify_unitized_binomial(a, b, c, CoefPoly(s), n), tag);
      for (const auto &alpha : unitized_scalars())
        sink.add(verify_unitized_power_general(a, CoefPoly(alpha), b,
                                               CoefPoly(s), n),
                 tag + " alpha=" + alpha.to_string());
    }
    sink.add(verify_unitized_power(a, b, CoefPoly::variable("beta"), n),
             "scalar=beta");
  }
  return sink.cases;
}

/// Random b1, b2, x with at most two terms of length at most two each.
struct DeltaInstance {
  FreeElement b1, b2, x;
};

inline DeltaInstance random_delta_instance(const ContextPtr &ctx, Rng &rng) {
  RandomElementShape shape;
  shape.max_terms = 2;
  shape.max_word_length = 2;
  return {random_element(ctx, rng, shape), random_element(ctx, rng, shape),
          random_element(ctx, rng, shape)};
}

inline std::vector<CaseResult> run_prop21(const SuiteConfig &cfg) {
  CaseSink sink("prop21");
  {
    Rng rng(cfg.seed);
    auto ctx = AlgebraContext::make({"a", "b", "c"});
    const auto n_max = static_cast<unsigned>(cfg.n_max_or(8));
    for (int i = 0; i < 100; ++i) {
      auto inst = random_delta_instance(ctx, rng);
      DerivationOp op(inst.b1, inst.b2);
      bool ok = true;
      FreeElement iter = inst.x;
      for (unsigned n = 0; n <= n_max && ok; ++n) {
        ok = iter == delta_power_closed(op, inst.x, n);
        iter = op(iter);
      }
      sink.add("delta-power-closed-form instance=" + std::to_string(i) +
                   " n<=" + std::to_string(n_max),
               ok,
               {{"identity", "delta-power-closed-form"},
                {"nMax", n_max},
                {"params",
                 {{"b1", format_element(inst.b1)},
                  {"b2", format_element(inst.b2)},
                  {"x", format_element(inst.x)}}},
                {"equal", ok}});
    }
  }
  Rng rng(cfg.seed + 1);
  for (int i = 0; i < 50; ++i) {
    CMatrix b1 = random_unit_disk_matrix(5, rng);
    CMatrix b2 = random_unit_disk_matrix(5, rng);
    CMatrix a = random_unit_disk_matrix(5, rng);
    auto rep = verify_prop21(b1, b2, a, cfg.tol);
    rep.params["instance"] = std::to_string(i);
    sink.add("exp-of-derivation instance=" + std::to_string(i), rep.passed,
             to_json(rep));
  }
  return sink.cases;
}

/// Gated random instance: a + b = lambda I + 0.3 R with ||R||_F = 1, and
/// a = 0.3 S with ||S||_F = 1.
struct NegPowInstance {
  CMatrix a, b;
  Complex lambda;
};

inline NegPowInstance random_negpow_instance(std::size_t dim, Complex lambda,
                                             Rng &rng) {
  CMatrix r = random_matrix_with_norm(dim, 0.3, rng);
  CMatrix a = random_matrix_with_norm(dim, 0.3, rng);
  CMatrix b = lambda * CMatrix::identity(dim) + r - a;
  return {std::move(a), std::move(b), lambda};
}

inline double relative_distance(const CMatrix &x, const CMatrix &ref) {
  double rn = frob_norm(ref);
  double d = frob_norm(x - ref);
  return rn > 0 ? d / rn : d;
}

/// Converged(exact) nilpotent demo: a + b = 2I + N with N a single Jordan
/// block, n = 1. Expected length n(dim-1)+1 terms.
struct NilpotentDemo {
  CMatrix a, b;
};

inline NilpotentDemo nilpotent_demo(std::size_t dim) {
  return {CMatrix::identity(dim) + shift_matrix(dim),
          CMatrix::identity(dim)};
}

inline std::vector<CaseResult> run_negpow(const SuiteConfig &cfg) {
  CaseSink sink("negpow");
  for (unsigned n = 1; n <= 3; ++n) {
    Complex v = scalar_negpow_check(2.0, 1.0, n, 100);
    double err = std::abs(v - std::pow(3.0, -static_cast<double>(n)));
    sink.add(label("scalar-negative-power", n, "lambda=2 z=1 K=100"),
             err <= 1e-10, {{"identity", "scalar-negative-power"}, {"n", n},
                            {"error", err}});
  }
  for (std::size_t dim = 2; dim <= 6; ++dim) {
    auto demo = nilpotent_demo(dim);
    const unsigned n = 1;
    auto res = negpow_series(demo.a, demo.b, n, 2.0, cfg.tol);
    auto oracle = negpow_lu_oracle(demo.a, demo.b, n);
    const int expected = static_cast<int>(n * (dim - 1) + 1);
    bool ok = res.converged && res.tail_bound == 0.0 &&
              res.terms_used == expected && res.value == oracle;
    sink.add("nilpotent-demo dim=" + std::to_string(dim), ok,
             {{"identity", "negative-power-nilpotent"},
              {"dim", dim},
              {"termsUsed", res.terms_used},
              {"expectedTerms", expected},
              {"exact", res.value == oracle}});
  }
  Rng rng(cfg.seed + 2);
  for (std::size_t dim = 2; dim <= 6; ++dim)
    for (unsigned n = 1; n <= 3; ++n)
      for (int rep = 0; rep < 3; ++rep) {
        auto inst = random_negpow_instance(dim, 1.0, rng);
        auto gate = negpow_gate(inst.a, inst.b, inst.lambda);
        auto series = negpow_series(inst.a, inst.b, n, inst.lambda, cfg.tol);
        auto dsum = negpow_double_sum(inst.a, inst.b, n, inst.lambda, cfg.tol);
        auto oracle = negpow_lu_oracle(inst.a, inst.b, n);
        double vs_oracle = relative_distance(series.value, oracle);
        double vs_double = frob_norm(dsum.value - series.value);
        bool ok = gate.passes() && series.converged && dsum.converged &&
                  vs_oracle <= 1e-8 && vs_double <= 1e-9;
        sink.add(label("negative-power", n,
                       "dim=" + std::to_string(dim) + " rep=" +
                           std::to_string(rep)),
                 ok,
                 {{"identity", "negative-power"},
                  {"n", n},
                  {"dim", dim},
                  {"gate", to_json(gate)},
                  {"termsUsed", series.terms_used},
                  {"tailBound", series.tail_bound},
                  {"oracleDiscrepancy", vs_oracle},
                  {"doubleSumDiscrepancy", vs_double}});
      }
  return sink.cases;
}

} // namespace detail

inline RunReport run_suite(const SuiteConfig &cfg) {
  cfg.validate();
  auto start = std::chrono::steady_clock::now();
  RunReport report{cfg, {}, 0, 0, 0.0};
  auto run_one = [&](Suite s) {
    std::vector<CaseResult> cases;
    switch (s) {
    case Suite::theorem: cases = detail::run_theorem(cfg); break;
    case Suite::corollary: cases = detail::run_corollary(cfg); break;
    case Suite::wyss: cases = detail::run_wyss(cfg); break;
    case Suite::qbinom: cases = detail::run_qbinom(cfg); break;
    case Suite::unitized: cases = detail::run_unitized(cfg); break;
    case Suite::prop21: cases = detail::run_prop21(cfg); break;
    case Suite::negpow: cases = detail::run_negpow(cfg); break;
    case Suite::all: break;
    }
    for (auto &c : cases)
      report.cases.push_back(std::move(c));
  };
  if (cfg.suite == Suite::all) {
    for (const auto &[name, s] : suite_names())
      if (s != Suite::all)
        run_one(s);
  } else {
    run_one(cfg.suite);
  }
  for (const auto &c : report.cases)
    (c.passed ? report.pass_count : report.fail_count)++;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

inline nlohmann::json to_json(const RunReport &r) {
  nlohmann::json config = {
      {"suite", suite_name(r.config.suite)},
      {"nMax", r.config.n_max ? nlohmann::json(*r.config.n_max) : nlohmann::json()},
      {"tol", r.config.tol},
      {"seed", r.config.seed}};
  auto cases = nlohmann::json::array();
  for (const auto &c : r.cases)
    cases.push_back({{"suite", c.suite},
                     {"case", c.label},
                     {"passed", c.passed},
                     {"report", c.detail}});
  return {{"config", config},
          {"cases", cases},
          {"passCount", r.pass_count},
          {"failCount", r.fail_count},
          {"wallTimeMs", r.wall_time_ms}};
}

inline std::string to_text(const RunReport &r) {
  std::ostringstream os;
  for (const auto &c : r.cases)
    os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.label << "\n";
  os << "summary: " << r.pass_count << " passed, " << r.fail_count
     << " failed (" << static_cast<long long>(r.wall_time_ms) << " ms)\n";
  return os.str();
}

} // namespace ncbinom
