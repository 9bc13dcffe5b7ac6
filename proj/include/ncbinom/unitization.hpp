#pragma once

// Adjoining a unit: pairs (a, lambda) with a in a non-unital algebra A and
// lambda scalar, multiplied as (a,l)(b,m) = (ab + l*b + m*a, l*m). The
// concrete A is the augmentation ideal of the free algebra (elements with no
// constant term).

#include <string>
#include <utility>

#include "derivation.hpp"

namespace ncbinom {

/// Free-algebra element with zero constant term.
class NonUnitalElement {
public:
  explicit NonUnitalElement(FreeElement e) : element_(std::move(e)) {
    if (!element_.constant_term().is_zero())
      throw std::invalid_argument(
          "NonUnitalElement: element has a nonzero constant term");
  }

  static NonUnitalElement zero(const ContextPtr &ctx) {
    return NonUnitalElement(FreeElement::zero(ctx));
  }

  const FreeElement &element() const { return element_; }

private:
  FreeElement element_;
};

class Unitized {
public:
  Unitized(NonUnitalElement a, CoefPoly lambda)
      : a_(std::move(a)), lambda_(std::move(lambda)) {
    // Reuses the context's parameter check.
    (void)FreeElement::scalar(a_.element().context(), lambda_);
  }

  /// The identity (0, 1).
  static Unitized one(const ContextPtr &ctx) {
    return Unitized(NonUnitalElement::zero(ctx), CoefPoly(1));
  }
  static Unitized zero(const ContextPtr &ctx) {
    return Unitized(NonUnitalElement::zero(ctx), CoefPoly{});
  }
  /// The embedding a -> (a, 0).
  static Unitized embed(const NonUnitalElement &a) {
    return Unitized(a, CoefPoly{});
  }

  const FreeElement &vector_part() const { return a_.element(); }
  const CoefPoly &scalar_part() const { return lambda_; }
  const ContextPtr &context() const { return a_.element().context(); }

  /// a + lambda*1 in the free algebra. Injective because a has no constant
  /// term, and multiplicative, so it is used to compare and report.
  FreeElement flatten() const {
    return a_.element() + FreeElement::scalar(context(), lambda_);
  }

  friend Unitized operator+(const Unitized &p, const Unitized &r) {
    return Unitized(NonUnitalElement(p.vector_part() + r.vector_part()),
                    p.lambda_ + r.lambda_);
  }
  friend Unitized operator-(const Unitized &p, const Unitized &r) {
    return Unitized(NonUnitalElement(p.vector_part() - r.vector_part()),
                    p.lambda_ - r.lambda_);
  }

  Unitized scaled(const CoefPoly &mu) const {
    return Unitized(NonUnitalElement(vector_part().scaled(mu)), mu * lambda_);
  }

  friend Unitized operator*(const Unitized &p, const Unitized &r) {
    const FreeElement &a = p.vector_part();
    const FreeElement &b = r.vector_part();
    FreeElement v = a * b + b.scaled(p.lambda_) + a.scaled(r.lambda_);
    return Unitized(NonUnitalElement(std::move(v)), p.lambda_ * r.lambda_);
  }

  friend bool operator==(const Unitized &p, const Unitized &r) {
    return p.vector_part() == r.vector_part() && p.lambda_ == r.lambda_;
  }

private:
  NonUnitalElement a_;
  CoefPoly lambda_;
};

inline Unitized power(const Unitized &p, unsigned n) {
  Unitized r = Unitized::one(p.context());
  for (unsigned i = 0; i < n; ++i)
    r = r * p;
  return r;
}

/// Delta_{p,r}(s) = p*s - s*r.
inline Unitized unitized_delta(const Unitized &p, const Unitized &r,
                               const Unitized &s) {
  return p * s - s * r;
}

inline Unitized unitized_delta_power(const Unitized &p, const Unitized &r,
                                     const Unitized &s, unsigned n) {
  Unitized out = s;
  for (unsigned i = 0; i < n; ++i)
    out = unitized_delta(p, r, out);
  return out;
}

/// sum_k C(n,k) Delta_{p,r}^{n-k}(1) r^k, computed entirely in the unitization.
inline Unitized unitized_power_rhs(const Unitized &p, const Unitized &r,
                                   unsigned n) {
  Unitized one = Unitized::one(p.context());
  Unitized r_pow = one;
  Unitized sum = Unitized::zero(p.context());
  for (unsigned k = 0; k <= n; ++k) {
    sum = sum + (unitized_delta_power(p, r, one, n - k) * r_pow)
                    .scaled(CoefPoly(binomial(n, k)));
    r_pow = r_pow * r;
  }
  return sum;
}

/// Identity report plus the unflattened sides, so the scalar components can
/// be inspected.
struct UnitizedReport {
  IdentityReport identity;
  Unitized lhs;
  Unitized rhs;
  bool base_in_ideal = true; ///< base is (x, 0), so powers stay in A

  /// Equal sides, and for a base in A and n >= 1 both scalar parts vanish.
  bool passed() const {
    bool scalar_ok = !base_in_ideal || identity.n == 0 ||
                     (lhs.scalar_part().is_zero() && rhs.scalar_part().is_zero());
    return identity.equal && scalar_ok;
  }
};

namespace detail {

inline UnitizedReport unitized_report(std::string name, unsigned n,
                                      std::map<std::string, std::string> params,
                                      Unitized lhs, Unitized rhs,
                                      bool base_in_ideal = true) {
  IdentityReport rep(std::move(name), static_cast<int>(n), std::move(params),
                     lhs.flatten(), rhs.flatten());
  return UnitizedReport{std::move(rep), std::move(lhs), std::move(rhs),
                        base_in_ideal};
}

inline std::string coef_text(const CoefPoly &c) { return c.to_string(); }

} // namespace detail

/// (a, alpha)^n against sum_k C(n,k) Delta_{(a,alpha),(b,beta)}^{n-k}(0,1) (b,beta)^k.
inline UnitizedReport verify_unitized_power_general(const NonUnitalElement &a,
                                                    const CoefPoly &alpha,
                                                    const NonUnitalElement &b,
                                                    const CoefPoly &beta,
                                                    unsigned n) {
  Unitized p(a, alpha);
  Unitized r(b, beta);
  return detail::unitized_report(
      "unitized-power-general", n,
      {{"a", format_element(a.element())},
       {"alpha", detail::coef_text(alpha)},
       {"b", format_element(b.element())},
       {"beta", detail::coef_text(beta)}},
      power(p, n), unitized_power_rhs(p, r, n), alpha.is_zero());
}

/// (a, 0)^n against sum_k C(n,k) Delta_{(a,0),(b,beta)}^{n-k}(0,1) (b,beta)^k.
inline UnitizedReport verify_unitized_power(const NonUnitalElement &a,
                                            const NonUnitalElement &b,
                                            const CoefPoly &beta, unsigned n) {
  Unitized p = Unitized::embed(a);
  Unitized r(b, beta);
  return detail::unitized_report("unitized-power", n,
                                 {{"a", format_element(a.element())},
                                  {"b", format_element(b.element())},
                                  {"beta", detail::coef_text(beta)}},
                                 power(p, n), unitized_power_rhs(p, r, n));
}

/// (a+b, 0)^n against sum_k C(n,k) Delta_{(a+b,0),(c,gamma)}^{n-k}(0,1) (c,gamma)^k.
inline UnitizedReport verify_unitized_binomial(const NonUnitalElement &a,
                                               const NonUnitalElement &b,
                                               const NonUnitalElement &c,
                                               const CoefPoly &gamma,
                                               unsigned n) {
  Unitized p = Unitized::embed(NonUnitalElement(a.element() + b.element()));
  Unitized r(c, gamma);
  return detail::unitized_report("unitized-binomial", n,
                                 {{"a", format_element(a.element())},
                                  {"b", format_element(b.element())},
                                  {"c", format_element(c.element())},
                                  {"gamma", detail::coef_text(gamma)}},
                                 power(p, n), unitized_power_rhs(p, r, n));
}

} // namespace ncbinom
