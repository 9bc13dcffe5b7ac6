// Command-line front end: expand, verify, qbinom, negpow.
//
// Exit status: 0 success, 1 a verification failed or a series did not
// converge, 2 usage/parse/file error, 3 convergence gate failed.

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ncbinom/banach.hpp>
#include <ncbinom/expression.hpp>
#include <ncbinom/qrewrite.hpp>
#include <ncbinom/serialize.hpp>
#include <ncbinom/suites.hpp>

namespace {

using namespace ncbinom;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGate = 3;

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

/// Identifiers in order of first appearance.
std::vector<std::string> identifiers_in(const std::string &text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string id = text.substr(i, j - i);
      if (seen.insert(id).second)
        out.push_back(id);
      i = j;
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
        ++i;
    } else {
      ++i;
    }
  }
  return out;
}

nlohmann::json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

Complex parse_complex(const std::string &text) {
  auto parts = split_list(text);
  if (parts.empty() || parts.size() > 2)
    throw UsageError("expected RE or RE,IM, got '" + text + "'");
  try {
    double re = std::stod(parts[0]);
    double im = parts.size() == 2 ? std::stod(parts[1]) : 0.0;
    return {re, im};
  } catch (const std::exception &) {
    throw UsageError("malformed complex number '" + text + "'");
  }
}

struct ExpandArgs {
  std::string expr;
  std::string gens;
  std::string params;
  std::vector<std::string> q_normalize;
  bool with_h = false;
};

int cmd_expand(const ExpandArgs &args, OutputFormat out) {
  std::vector<std::string> params = split_list(args.params);
  auto declare_param = [&](const std::string &p) {
    if (std::find(params.begin(), params.end(), p) == params.end())
      params.push_back(p);
  };
  if (!args.q_normalize.empty()) {
    declare_param("q");
    if (args.with_h)
      declare_param("h");
  }
  std::vector<std::string> gens = split_list(args.gens);
  if (gens.empty()) {
    std::set<std::string> ids;
    for (const auto &id : identifiers_in(args.expr))
      if (std::find(params.begin(), params.end(), id) == params.end())
        ids.insert(id);
    for (const auto &g : args.q_normalize)
      if (std::find(params.begin(), params.end(), g) == params.end())
        ids.insert(g);
    gens.assign(ids.begin(), ids.end());
  }
  auto ctx = AlgebraContext::make(gens, params);
  FreeElement e = parse_element(args.expr, ctx);
  if (!args.q_normalize.empty()) {
    QRelation rel(ctx, args.q_normalize[0], args.q_normalize[1], "q",
                  args.with_h ? std::optional<std::string>("h") : std::nullopt);
    e = normalize(e, rel).element();
  }
  if (out == OutputFormat::json)
    std::cout << nlohmann::json{{"text", format_element(e)}, {"element", to_json(e)}}
                     .dump(2)
              << "\n";
  else
    std::cout << format_element(e) << "\n";
  return 0;
}

int cmd_verify(SuiteConfig cfg, const std::string &suite, OutputFormat out) {
  cfg.suite = parse_suite(suite);
  cfg.output = out;
  RunReport report = run_suite(cfg);
  if (out == OutputFormat::json)
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << to_text(report);
  return report.ok() ? 0 : kExitFail;
}

int cmd_qbinom(int n, bool with_h, OutputFormat out) {
  if (n < 0)
    throw UsageError("--n must be non-negative");
  const auto un = static_cast<unsigned>(n);
  auto rep = verify_q_binomial(un, with_h);
  const std::vector<std::string> order = {"q", "h"};
  if (out == OutputFormat::json) {
    auto coefs = nlohmann::json::array();
    for (unsigned k = 0; k <= un; ++k) {
      CoefPoly c = with_h ? benaoum_coefficient(un, k) : gaussian_binomial(un, k);
      coefs.push_back({{"k", k}, {"coef", coef_to_json(c, order)},
                       {"text", c.to_string(order)}});
    }
    std::cout << nlohmann::json{{"coefficients", coefs}, {"report", to_json(rep)}}
                     .dump(2)
              << "\n";
  } else {
    for (unsigned k = 0; k <= un; ++k) {
      CoefPoly c = with_h ? benaoum_coefficient(un, k) : gaussian_binomial(un, k);
      std::cout << (with_h ? "qhbinom(" : "qbinom(") << un << "," << k
                << ") = " << c.to_string(order) << "\n";
    }
    std::cout << rep.identity << " n=" << un << ": "
              << (rep.equal ? "equal" : "NOT equal") << "\n";
  }
  return rep.equal ? 0 : kExitFail;
}

struct NegPowArgs {
  std::string a_file, b_file;
  int n = 1;
  std::string lambda;
  double tol = 1e-10;
  int max_terms = 500;
  bool check = false;
};

int cmd_negpow(const NegPowArgs &args, OutputFormat out) {
  if (args.n < 1)
    throw UsageError("--n must be at least 1");
  if (!(args.tol > 0))
    throw UsageError("--tol must be positive");
  CMatrix a = matrix_from_json(read_json_file(args.a_file));
  CMatrix b = matrix_from_json(read_json_file(args.b_file));
  if (a.dim() != b.dim())
    throw UsageError("matrices have different dimensions");
  Complex lambda = parse_complex(args.lambda);
  const auto n = static_cast<unsigned>(args.n);

  NegPowGate gate = negpow_gate(a, b, lambda);
  nlohmann::json j;
  j["gate"] = to_json(gate);
  if (!gate.passes()) {
    std::cerr << "error: convergence gate failed: spectral radius bound "
              << gate.bound << " >= |lambda| = " << gate.abs_lambda << "\n";
    if (out == OutputFormat::json)
      std::cout << nlohmann::json{{"error", "convergence-gate"}, {"gate", j["gate"]}}
                       .dump(2)
                << "\n";
    return kExitGate;
  }
  SeriesResult res = negpow_series(a, b, n, lambda, args.tol, args.max_terms);
  j.update(to_json(res));
  if (args.check) {
    CMatrix oracle = negpow_lu_oracle(a, b, n);
    double on = frob_norm(oracle);
    double diff = frob_norm(res.value - oracle);
    j["discrepancy"] = on > 0 ? diff / on : diff;
    j["defect"] = frob_norm(mat_pow(a + b, n) * res.value -
                            CMatrix::identity(a.dim()));
  }
  if (out == OutputFormat::json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "converged: " << (res.converged ? "true" : "false") << "\n"
              << "terms used: " << res.terms_used << "\n"
              << "tail bound: " << res.tail_bound << "\n"
              << "gate: bound " << gate.bound << " < |lambda| "
              << gate.abs_lambda << "\n";
    if (args.check)
      std::cout << "discrepancy: " << j["discrepancy"].get<double>() << "\n";
  }
  return res.converged ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Non-commutative binomial identities: exact expansion and "
               "verification, q-binomials, negative powers of matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_name;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--output", output_name, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized suites");

  ExpandArgs expand;
  auto *expand_cmd = app.add_subcommand("expand", "parse and expand an element");
  expand_cmd->set_help_flag("--help", "print this help message and exit");
  expand_cmd->add_option("expr", expand.expr, "expression")->required();
  expand_cmd->add_option("--gens", expand.gens, "comma-separated generators");
  expand_cmd->add_option("--params", expand.params, "comma-separated parameters");
  expand_cmd->add_option("--q-normalize", expand.q_normalize,
                         "normal-order under x*y = q*y*x")
      ->expected(2);
  expand_cmd->add_flag("--h", expand.with_h, "add h*y^2 to the relation");

  SuiteConfig cfg;
  std::string suite = "all";
  int n_max = -1;
  auto *verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite,
                         "theorem|corollary|wyss|qbinom|unitized|prop21|negpow|all");
  verify_cmd->add_option("--n-max", n_max, "largest n (suite default if unset)");
  verify_cmd->add_option("--tol", cfg.tol, "numeric tolerance");

  int q_n = 0;
  bool q_with_h = false;
  auto *qbinom_cmd = app.add_subcommand("qbinom", "q-binomial coefficients");
  qbinom_cmd->add_option("--n", q_n, "power")->required();
  qbinom_cmd->add_flag("--with-h", q_with_h, "use x*y = q*y*x + h*y^2");

  NegPowArgs negpow;
  auto *negpow_cmd = app.add_subcommand("negpow", "(a+b)^{-n} by power series");
  negpow_cmd->add_option("--a", negpow.a_file, "matrix file")->required();
  negpow_cmd->add_option("--b", negpow.b_file, "matrix file")->required();
  negpow_cmd->add_option("--n", negpow.n, "power")->required();
  negpow_cmd->add_option("--lambda", negpow.lambda, "RE,IM")->required();
  negpow_cmd->add_option("--tol", negpow.tol, "tail tolerance");
  negpow_cmd->add_option("--max-terms", negpow.max_terms, "term limit");
  negpow_cmd->add_flag("--check", negpow.check, "compare with LU inverse");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto format_for = [&](OutputFormat fallback) {
    if (output_name.empty())
      return fallback;
    return output_name == "json" ? OutputFormat::json : OutputFormat::text;
  };

  try {
    if (*expand_cmd)
      return cmd_expand(expand, format_for(OutputFormat::text));
    if (*verify_cmd) {
      cfg.seed = seed;
      if (n_max >= 0)
        cfg.n_max = n_max;
      else if (verify_cmd->count("--n-max"))
        throw UsageError("--n-max must be non-negative");
      return cmd_verify(cfg, suite, format_for(OutputFormat::text));
    }
    if (*qbinom_cmd)
      return cmd_qbinom(q_n, q_with_h, format_for(OutputFormat::text));
    if (*negpow_cmd)
      return cmd_negpow(negpow, format_for(OutputFormat::json));
  } catch (const ConvergenceDomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGate;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
