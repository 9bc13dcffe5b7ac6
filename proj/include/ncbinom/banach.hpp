#pragma once

// Complex matrices as a concrete unital Banach algebra under the Frobenius
// norm (submultiplicative; ||I||_F = sqrt(dim)). Every series here stops on
// a rigorous bound for the discarded tail in exact arithmetic; rounding is
// not included in the bounds.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cmatrix.hpp"
#include "rational.hpp"

namespace ncbinom {

struct SeriesResult {
  CMatrix value;
  int terms_used = 0;
  double tail_bound = std::numeric_limits<double>::infinity();
  bool converged = false;
};

inline nlohmann::json to_json(const SeriesResult &r) {
  return {{"value", to_json(r.value)},
          {"termsUsed", r.terms_used},
          {"tailBound", r.tail_bound},
          {"converged", r.converged}};
}

namespace detail {

inline void require_finite(const CMatrix &a, const char *what) {
  if (!a.all_finite())
    throw NumericError(std::string(what) + ": non-finite matrix entry");
}

} // namespace detail

/// Matrix exponential by scaling and squaring around a Taylor core.
///
/// With B = A / 2^s and ||B|| <= 1/2, truncating after B^m leaves at most
/// eps = ||B||^{m+1} / ((m+1)! (1 - ||B||)). Squaring an approximation with
/// error eps of a matrix bounded by M gives error <= 2 M eps + eps^2, where
/// M = sqrt(d) - 1 + e^{||X||} bounds ||e^X||_F. Terms are added until the
/// error propagated through all s squarings is <= tol.
inline SeriesResult expm(const CMatrix &a, double tol) {
  if (!(tol > 0))
    throw std::invalid_argument("expm: tol must be positive");
  detail::require_finite(a, "expm");
  const std::size_t d = a.dim();
  const double norm = frob_norm(a);
  int s = 0;
  while (std::ldexp(norm, -s) > 0.5)
    ++s;
  const double beta = std::ldexp(norm, -s);
  const CMatrix b = std::ldexp(1.0, -s) * a;

  auto propagate = [&](double eps) {
    for (int i = 0; i < s; ++i) {
      double bound = std::sqrt(static_cast<double>(d)) - 1.0 +
                     std::exp(std::ldexp(beta, i));
      eps = 2.0 * bound * eps + eps * eps;
    }
    return eps;
  };

  constexpr int kMaxTerms = 200;
  CMatrix sum = CMatrix::identity(d);
  CMatrix term = CMatrix::identity(d);
  double tail = std::numeric_limits<double>::infinity();
  int terms = 1;
  double truncation_scale = beta; // beta^{m+1}/(m+1)! for m = 0
  for (int m = 1; m <= kMaxTerms; ++m) {
    term = (1.0 / m) * (term * b);
    sum += term;
    terms = m + 1;
    if (term.is_zero()) {
      tail = 0.0;
      break;
    }
    truncation_scale *= beta / (m + 1);
    tail = propagate(truncation_scale / (1.0 - beta));
    if (tail <= tol)
      break;
  }
  for (int i = 0; i < s; ++i)
    sum = sum * sum;
  detail::require_finite(sum, "expm");
  return SeriesResult{std::move(sum), terms, tail, tail <= tol};
}

/// b * a * c^{-1}, via the transposed system c^T X^T = (b a)^T.
inline CMatrix alpha_apply(const CMatrix &b, const CMatrix &c,
                           const CMatrix &a) {
  b.require_dim(c);
  b.require_dim(a);
  return lu_solve(c.transpose(), (b * a).transpose()).solution.transpose();
}

/// min over m in {1, 2, 4, ..., <= max_m} of ||A^m||_F^{1/m}, an upper bound
/// on the spectral radius. Powers are renormalized after every squaring and
/// their scale kept as a logarithm, so nothing overflows.
inline double spectral_radius_upper(const CMatrix &a, unsigned max_m) {
  if (max_m < 1)
    throw std::invalid_argument("spectral_radius_upper: max_m must be >= 1");
  detail::require_finite(a, "spectral_radius_upper");
  const double norm = frob_norm(a);
  if (norm == 0.0)
    return 0.0;
  CMatrix unit = (1.0 / norm) * a;
  double log_norm = std::log(norm); // log ||A^m||
  double best = norm;
  for (unsigned m = 2; m <= max_m; m *= 2) {
    unit = unit * unit;
    const double nu = frob_norm(unit);
    if (nu == 0.0)
      return 0.0;
    if (!std::isfinite(nu))
      throw NumericError("spectral_radius_upper: overflow; largest finite m = " +
                         std::to_string(m / 2));
    log_norm = 2.0 * log_norm + std::log(nu);
    unit *= 1.0 / nu;
    best = std::min(best, std::exp(log_norm / m));
  }
  return best;
}

/// Numeric counterpart of IdentityReport.
struct NumericReport {
  std::string identity;
  std::map<std::string, std::string> params;
  double discrepancy = 0.0; ///< relative Frobenius distance between sides
  double tol = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
  bool passed = false;
};

inline nlohmann::json to_json(const NumericReport &r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto &[k, v] : r.params)
    params[k] = v;
  return {{"identity", r.identity},   {"params", params},
          {"discrepancy", r.discrepancy}, {"tol", r.tol},
          {"termsUsed", r.terms_used}, {"tailBound", r.tail_bound},
          {"passed", r.passed}};
}

/// Compares sum_n delta^n(a)/n!, with delta(x) = b1 x - x b2, against
/// e^{b1} a e^{-b2}. Since ||delta|| <= ||b1|| + ||b2|| = L, the tail after
/// N terms is at most L^{N+1} ||a|| / (N+1)! / (1 - L/(N+2)); the series runs
/// until that is <= tol/100 relative to the right-hand side.
inline NumericReport verify_prop21(const CMatrix &b1, const CMatrix &b2,
                                   const CMatrix &a, double tol) {
  if (!(tol > 0))
    throw std::invalid_argument("verify_prop21: tol must be positive");
  b1.require_dim(b2);
  b1.require_dim(a);
  const double inner_tol = 1e-3 * tol;
  CMatrix rhs = expm(b1, inner_tol).value * a * expm(-b2, inner_tol).value;
  const double rhs_norm = frob_norm(rhs);
  const double a_norm = frob_norm(a);
  const double lip = frob_norm(b1) + frob_norm(b2);
  const double target = 1e-2 * tol * (rhs_norm > 0 ? rhs_norm : 1.0);

  constexpr int kMaxTerms = 1000;
  CMatrix term = a;
  CMatrix lhs = a;
  double tail = std::numeric_limits<double>::infinity();
  double scale = a_norm * lip; // L^{N+1} ||a|| / (N+1)! at N = 0
  int terms = 1;
  for (int n = 1; n <= kMaxTerms; ++n) {
    if (scale == 0.0 || term.is_zero()) {
      tail = 0.0;
      break;
    }
    if (lip < n + 1) {
      tail = scale / (1.0 - lip / (n + 1));
      if (tail <= target)
        break;
    }
    term = (1.0 / n) * (b1 * term - term * b2);
    lhs += term;
    terms = n + 1;
    scale *= lip / (n + 1);
  }
  detail::require_finite(lhs, "verify_prop21");
  const double diff = frob_norm(lhs - rhs);
  NumericReport rep;
  rep.identity = "exp-of-derivation";
  rep.params = {{"dim", std::to_string(a.dim())}};
  rep.discrepancy = rhs_norm > 0 ? diff / rhs_norm : diff;
  rep.tol = tol;
  rep.terms_used = terms;
  rep.tail_bound = tail;
  rep.passed = rep.discrepancy <= tol;
  return rep;
}

/// Generalized binomial coefficient C(-n, k) = (-1)^k n(n+1)...(n+k-1) / k!.
struct GenBinom {
  unsigned n;
  unsigned k;
  Rational value;
};

inline GenBinom gen_binom(unsigned n, unsigned k) {
  if (n < 1)
    throw std::invalid_argument("gen_binom: n must be >= 1");
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n + i;
    den *= i + 1;
  }
  if (k % 2)
    num = -num;
  return GenBinom{n, k, Rational(num, den)};
}

/// sum_{k=0}^{K} C(-n,k) lambda^{-n-k} z^k, a partial sum of (lambda+z)^{-n}.
inline Complex scalar_negpow_check(Complex lambda, Complex z, unsigned n,
                                   unsigned terms_k) {
  if (!(std::abs(z) < std::abs(lambda)))
    throw ConvergenceDomainError(
        "scalar_negpow_check: need |z| < |lambda| (|z| = " +
            std::to_string(std::abs(z)) +
            ", |lambda| = " + std::to_string(std::abs(lambda)) + ")",
        std::abs(z), std::abs(lambda));
  if (n < 1)
    throw std::invalid_argument("scalar_negpow_check: n must be >= 1");
  Complex term = 1.0 / std::pow(lambda, static_cast<int>(n));
  Complex sum = term;
  const Complex ratio = z / lambda;
  for (unsigned k = 0; k < terms_k; ++k) {
    term *= -static_cast<double>(n + k) / static_cast<double>(k + 1) * ratio;
    sum += term;
  }
  return sum;
}

/// trace(a+b)/dim, the centroid of the spectrum of a+b.
inline Complex suggest_lambda(const CMatrix &a, const CMatrix &b) {
  return (a + b).trace() / static_cast<double>(a.dim());
}

/// Outcome of the convergence gate nu(a + b - lambda I) < |lambda|.
struct NegPowGate {
  double bound = 0.0; ///< certified upper bound on nu(a + b - lambda I)
  double abs_lambda = 0.0;
  bool passes() const { return bound < abs_lambda; }
};

inline nlohmann::json to_json(const NegPowGate &g) {
  return {{"bound", g.bound}, {"absLambda", g.abs_lambda}, {"passes", g.passes()}};
}

constexpr unsigned kDefaultGateMaxM = 32;

inline NegPowGate negpow_gate(const CMatrix &a, const CMatrix &b, Complex lambda,
                              unsigned max_m = kDefaultGateMaxM) {
  a.require_dim(b);
  CMatrix m = a + b - lambda * CMatrix::identity(a.dim());
  return NegPowGate{spectral_radius_upper(m, max_m), std::abs(lambda)};
}

namespace detail {

inline void require_gate(const NegPowGate &g) {
  if (!g.passes())
    throw ConvergenceDomainError(
        "convergence gate failed: spectral radius bound " +
            std::to_string(g.bound) + " is not below |lambda| = " +
            std::to_string(g.abs_lambda),
        g.bound, g.abs_lambda);
}

/// Tail bound for sum_{k} C(-n,k) lambda^{-n-k} M^k after the first K+1 terms.
///
/// From norms of M^1..M^m, with rho = ||M^m||^{1/m} and
/// C = max_{s<=m} ||M^s|| / rho^s, every power satisfies ||M^k|| <= C rho^k.
/// Writing x = rho/|lambda| and t_j = C(n+j-1, j) x^j, the ratio
/// t_{j+1}/t_j = (n+j)/(j+1) x is non-increasing in j, hence
///   sum_{j>K} t_j <= t_{K+1} / (1 - (n+K+1)/(K+2) x)
/// whenever the denominator is positive, and the tail is at most
/// C |lambda|^{-n} times that.
class NegPowTail {
public:
  NegPowTail(const CMatrix &m, unsigned n, double abs_lambda, unsigned max_m)
      : n_(n), abs_lambda_(abs_lambda) {
    std::vector<double> norms{0.0};
    CMatrix p = m;
    for (unsigned s = 1; s <= max_m; ++s) {
      if (s > 1)
        p = p * m;
      norms.push_back(frob_norm(p));
      if (!std::isfinite(norms.back()))
        throw NumericError("negpow: overflow in powers of a + b - lambda I");
      if (norms.back() == 0.0)
        break;
    }
    // Best rho over the doubling schedule, as in spectral_radius_upper.
    unsigned best_m = 1;
    rho_ = norms[1];
    for (unsigned s = 2; s < norms.size(); s *= 2) {
      double r = std::pow(norms[s], 1.0 / s);
      if (r < rho_) {
        rho_ = r;
        best_m = s;
      }
    }
    nilpotent_index_ = 0;
    if (rho_ == 0.0) {
      nilpotent_index_ = best_m;
      return;
    }
    double log_c = 0.0;
    for (unsigned s = 1; s <= best_m; ++s)
      log_c = std::max(log_c, std::log(norms[s]) - s * std::log(rho_));
    log_growth_ = log_c;
  }

  double rho() const { return rho_; }

  /// Bound on the discarded tail once terms 0..K have been summed.
  double after(unsigned big_k) const {
    if (nilpotent_index_ != 0)
      return big_k + 1 >= nilpotent_index_
                 ? 0.0
                 : std::numeric_limits<double>::infinity();
    const double x = rho_ / abs_lambda_;
    const double ratio = (n_ + big_k + 1.0) / (big_k + 2.0) * x;
    if (!(ratio < 1.0))
      return std::numeric_limits<double>::infinity();
    // log t_{K+1} = log C(n+K, K+1) + (K+1) log x
    const double log_binom = std::lgamma(n_ + big_k + 1.0) -
                             std::lgamma(big_k + 2.0) - std::lgamma(n_ + 0.0);
    const double log_t = log_binom + (big_k + 1.0) * std::log(x);
    return std::exp(log_growth_ - n_ * std::log(abs_lambda_) + log_t) /
           (1.0 - ratio);
  }

private:
  unsigned n_;
  double abs_lambda_;
  double rho_ = 0.0;
  double log_growth_ = 0.0;
  unsigned nilpotent_index_ = 0;
};

/// Pascal row k as doubles.
inline std::vector<double> binomial_row(unsigned k) {
  std::vector<double> row{1.0};
  for (unsigned i = 1; i <= k; ++i) {
    std::vector<double> next(i + 1, 1.0);
    for (unsigned j = 1; j < i; ++j)
      next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

/// Drives both negative-power evaluations: coefficient C(-n,k) lambda^{-n-k}
/// for term k, exact-zero detection on M^{k+1}, and the tail stop rule.
template <class TermFn>
SeriesResult negpow_driver(const CMatrix &a, const CMatrix &b, unsigned n,
                           Complex lambda, double tol, int max_terms,
                           unsigned gate_max_m, TermFn &&term_k) {
  if (n < 1)
    throw std::invalid_argument("negpow: n must be >= 1");
  if (!(tol > 0))
    throw std::invalid_argument("negpow: tol must be positive");
  detail::require_finite(a, "negpow");
  detail::require_finite(b, "negpow");
  NegPowGate gate = negpow_gate(a, b, lambda, gate_max_m);
  require_gate(gate);

  const std::size_t d = a.dim();
  const CMatrix m = a + b - lambda * CMatrix::identity(d);
  NegPowTail tail(m, n, gate.abs_lambda, gate_max_m);

  SeriesResult out{CMatrix(d), 0, std::numeric_limits<double>::infinity(),
                   false};
  Complex coef = 1.0 / std::pow(lambda, static_cast<int>(n));
  CMatrix next_power = CMatrix::identity(d); // M^k
  for (int k = 0; k < max_terms; ++k) {
    out.value += coef * term_k(static_cast<unsigned>(k), next_power);
    out.terms_used = k + 1;
    next_power = next_power * m;
    out.tail_bound =
        next_power.is_zero() ? 0.0 : tail.after(static_cast<unsigned>(k));
    if (out.tail_bound <= tol) {
      out.converged = true;
      break;
    }
    coef *= -static_cast<double>(n + k) / static_cast<double>(k + 1) / lambda;
  }
  detail::require_finite(out.value, "negpow");
  return out;
}

} // namespace detail

/// (a+b)^{-n} = sum_k C(-n,k) lambda^{-n-k} (a + b - lambda I)^k.
inline SeriesResult negpow_series(const CMatrix &a, const CMatrix &b,
                                  unsigned n, Complex lambda, double tol,
                                  int max_terms = 500,
                                  unsigned gate_max_m = kDefaultGateMaxM) {
  return detail::negpow_driver(
      a, b, n, lambda, tol, max_terms, gate_max_m,
      [](unsigned, const CMatrix &m_power) { return m_power; });
}

/// The same series with each (a + b1)^k, b1 = b - lambda I, expanded as
/// sum_j C(k,j) delta_{a+b1,b1}^{k-j}(I) b1^j and each delta power taken in
/// closed form sum_i (-1)^i C(m,i) (a+b1)^{m-i} b1^i.
inline SeriesResult negpow_double_sum(const CMatrix &a, const CMatrix &b,
                                      unsigned n, Complex lambda, double tol,
                                      int max_terms = 500,
                                      unsigned gate_max_m = kDefaultGateMaxM) {
  const std::size_t d = a.dim();
  a.require_dim(b);
  const CMatrix b1 = b - lambda * CMatrix::identity(d);
  const CMatrix u = a + b1;
  std::vector<CMatrix> u_pow{CMatrix::identity(d)};
  std::vector<CMatrix> v_pow{CMatrix::identity(d)};
  std::vector<CMatrix> delta_of_one; // delta^m(I)
  auto ensure = [&](unsigned k) {
    while (u_pow.size() <= k) {
      u_pow.push_back(u_pow.back() * u);
      v_pow.push_back(v_pow.back() * b1);
    }
    while (delta_of_one.size() <= k) {
      unsigned m = static_cast<unsigned>(delta_of_one.size());
      auto row = detail::binomial_row(m);
      CMatrix s(d);
      for (unsigned i = 0; i <= m; ++i)
        s += ((i % 2) ? -row[i] : row[i]) * (u_pow[m - i] * v_pow[i]);
      delta_of_one.push_back(std::move(s));
    }
  };
  return detail::negpow_driver(
      a, b, n, lambda, tol, max_terms, gate_max_m,
      [&](unsigned k, const CMatrix &) {
        ensure(k);
        auto row = detail::binomial_row(k);
        CMatrix inner(d);
        for (unsigned j = 0; j <= k; ++j)
          inner += row[j] * (delta_of_one[k - j] * v_pow[j]);
        return inner;
      });
}

/// (a+b)^{-n} by n LU solves against the identity.
inline CMatrix negpow_lu_oracle(const CMatrix &a, const CMatrix &b, unsigned n) {
  LuDecomposition lu(a + b);
  CMatrix x = CMatrix::identity(a.dim());
  for (unsigned i = 0; i < n; ++i)
    x = lu.solve(x);
  return x;
}

} // namespace ncbinom
