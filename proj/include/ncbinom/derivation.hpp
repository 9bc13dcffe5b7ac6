#pragma once

// Inner generalized derivations x -> b1*x - x*b2 on the free algebra, and
// the binomial-type expansions of powers built from them. Every verify_*
// function compares two independently evaluated sides by normal-form
// equality; equality in the free algebra implies the identity in every
// unital algebra by substitution.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expression.hpp"
#include "serialize.hpp"

namespace ncbinom {

/// Outcome of comparing the two sides of an identity at one parameter point.
struct IdentityReport {
  std::string identity;
  int n = 0;
  std::map<std::string, std::string> params;
  FreeElement lhs;
  FreeElement rhs;
  bool equal = false;
  std::optional<Word> first_discrepant_word;

  IdentityReport(std::string name, int n_, std::map<std::string, std::string> p,
                 FreeElement l, FreeElement r)
      : identity(std::move(name)), n(n_), params(std::move(p)),
        lhs(std::move(l)), rhs(std::move(r)) {
    first_discrepant_word = lhs.first_difference(rhs);
    equal = !first_discrepant_word.has_value();
  }
};

inline nlohmann::json to_json(const IdentityReport &r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto &[k, v] : r.params)
    params[k] = v;
  nlohmann::json j = {{"identity", r.identity},
                      {"n", r.n},
                      {"params", params},
                      {"equal", r.equal},
                      {"firstDiscrepantWord", nullptr}};
  if (r.first_discrepant_word) {
    j["firstDiscrepantWord"] =
        word_to_json(*r.first_discrepant_word, *r.lhs.context());
    j["lhs"] = format_element(r.lhs);
    j["rhs"] = format_element(r.rhs);
  }
  return j;
}

/// The map x -> left*x - x*right. With left == right this is the inner
/// derivation d_b(x) = bx - xb.
class DerivationOp {
public:
  DerivationOp(FreeElement left, FreeElement right)
      : left_(std::move(left)), right_(std::move(right)) {
    left_.require_same_context(right_);
  }

  static DerivationOp inner(const FreeElement &b) { return DerivationOp(b, b); }

  const FreeElement &left() const { return left_; }
  const FreeElement &right() const { return right_; }

  FreeElement operator()(const FreeElement &x) const {
    return left_ * x - x * right_;
  }

private:
  FreeElement left_;
  FreeElement right_;
};

/// n-fold application of `op` to x.
inline FreeElement delta_power_iter(const DerivationOp &op, const FreeElement &x,
                                    unsigned n) {
  x.require_same_context(op.left());
  FreeElement r = x;
  for (unsigned i = 0; i < n; ++i)
    r = op(r);
  return r;
}

namespace detail {

inline std::vector<FreeElement> powers_up_to(const FreeElement &x, unsigned n) {
  std::vector<FreeElement> out;
  out.reserve(n + 1);
  out.push_back(FreeElement::unit(x.context()));
  for (unsigned i = 1; i <= n; ++i)
    out.push_back(out.back() * x);
  return out;
}

inline CoefPoly signed_binomial(unsigned n, unsigned k, bool negate) {
  Rational c = binomial(n, k);
  return CoefPoly(negate ? -c : c);
}

} // namespace detail

/// Closed form sum_{k=0}^{n} (-1)^k C(n,k) b1^{n-k} x b2^k.
inline FreeElement delta_power_closed(const DerivationOp &op,
                                      const FreeElement &x, unsigned n) {
  x.require_same_context(op.left());
  auto left_pow = detail::powers_up_to(op.left(), n);
  auto right_pow = detail::powers_up_to(op.right(), n);
  FreeElement sum(x.context());
  for (unsigned k = 0; k <= n; ++k)
    sum += (left_pow[n - k] * x * right_pow[k])
               .scaled(detail::signed_binomial(n, k, k % 2 == 1));
  return sum;
}

/// sum_{k=0}^{n} C(n,k) delta_{a,b}^{n-k}(1) b^k, which equals a^n.
inline FreeElement theorem_rhs(const FreeElement &a, const FreeElement &b,
                               unsigned n) {
  a.require_same_context(b);
  DerivationOp op(a, b);
  FreeElement one = FreeElement::unit(a.context());
  auto b_pow = detail::powers_up_to(b, n);
  FreeElement sum(a.context());
  for (unsigned k = 0; k <= n; ++k)
    sum += (delta_power_closed(op, one, n - k) * b_pow[k])
               .scaled(CoefPoly(binomial(n, k)));
  return sum;
}

/// sum_{k=0}^{n-1} sum_{j=0}^{n-k} C(n,k) C(n-k,j) (-1)^j a^{n-k-j} b^{j+k},
/// which equals a^n - b^n for n >= 1.
inline FreeElement corollary_i_rhs(const FreeElement &a, const FreeElement &b,
                                   unsigned n) {
  a.require_same_context(b);
  if (n == 0)
    throw std::invalid_argument("corollary_i_rhs: n must be at least 1");
  auto a_pow = detail::powers_up_to(a, n);
  auto b_pow = detail::powers_up_to(b, n);
  FreeElement sum(a.context());
  for (unsigned k = 0; k + 1 <= n; ++k)
    for (unsigned j = 0; j <= n - k; ++j) {
      Rational c = binomial(n, k) * binomial(n - k, j);
      sum += (a_pow[n - k - j] * b_pow[j + k]).scaled(CoefPoly(j % 2 ? -c : c));
    }
  return sum;
}

/// (a+b)^n expanded against an arbitrary modulus c:
/// sum_{k} C(n,k) delta_{a+b,c}^{n-k}(1) c^k.
inline FreeElement ncbinom_rhs(const FreeElement &a, const FreeElement &b,
                               const FreeElement &c, unsigned n) {
  a.require_same_context(b);
  a.require_same_context(c);
  return theorem_rhs(a + b, c, n);
}

/// Modulus c = a.
inline FreeElement ncbinom_rhs_left(const FreeElement &a, const FreeElement &b,
                                    unsigned n) {
  return ncbinom_rhs(a, b, a, n);
}

/// Modulus c = b.
inline FreeElement ncbinom_rhs_right(const FreeElement &a, const FreeElement &b,
                                     unsigned n) {
  return ncbinom_rhs(a, b, b, n);
}

/// Fully expanded double-sum form
/// sum_k sum_j C(n,k) C(n-k,j) (-1)^j (a+b)^{n-k-j} c^{j+k}.
inline FreeElement ncbinom_double_sum(const FreeElement &a,
                                      const FreeElement &b,
                                      const FreeElement &c, unsigned n) {
  a.require_same_context(b);
  a.require_same_context(c);
  auto s_pow = detail::powers_up_to(a + b, n);
  auto c_pow = detail::powers_up_to(c, n);
  FreeElement sum(a.context());
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned j = 0; j <= n - k; ++j) {
      Rational coef = binomial(n, k) * binomial(n - k, j);
      sum += (s_pow[n - k - j] * c_pow[j + k])
                 .scaled(CoefPoly(j % 2 ? -coef : coef));
    }
  return sum;
}

/// sum_k C(n,k) [T^k(1)] b^{n-k} with T(x) = a*x + (b*x - x*b), i.e. left
/// multiplication by a plus the inner derivation d_b.
inline FreeElement wyss_rhs(const FreeElement &a, const FreeElement &b,
                            unsigned n) {
  a.require_same_context(b);
  DerivationOp d_b = DerivationOp::inner(b);
  auto b_pow = detail::powers_up_to(b, n);
  FreeElement t = FreeElement::unit(a.context());
  FreeElement sum(a.context());
  for (unsigned k = 0; k <= n; ++k) {
    sum += (t * b_pow[n - k]).scaled(CoefPoly(binomial(n, k)));
    if (k < n)
      t = a * t + d_b(t);
  }
  return sum;
}

inline std::map<std::string, std::string>
describe(std::initializer_list<std::pair<std::string, const FreeElement *>> xs) {
  std::map<std::string, std::string> out;
  for (const auto &[name, x] : xs)
    out[name] = format_element(*x);
  return out;
}

inline IdentityReport verify_delta_closed_form(const DerivationOp &op,
                                               const FreeElement &x,
                                               unsigned n) {
  return IdentityReport("delta-power-closed-form", static_cast<int>(n),
                        describe({{"b1", &op.left()},
                                  {"b2", &op.right()},
                                  {"x", &x}}),
                        delta_power_iter(op, x, n),
                        delta_power_closed(op, x, n));
}

inline IdentityReport verify_theorem(const FreeElement &a, const FreeElement &b,
                                     unsigned n) {
  return IdentityReport("power-expansion", static_cast<int>(n),
                        describe({{"a", &a}, {"b", &b}}), power(a, n),
                        theorem_rhs(a, b, n));
}

inline IdentityReport verify_power_difference(const FreeElement &a,
                                              const FreeElement &b,
                                              unsigned n) {
  return IdentityReport("power-difference", static_cast<int>(n),
                        describe({{"a", &a}, {"b", &b}}),
                        power(a, n) - power(b, n), corollary_i_rhs(a, b, n));
}

inline IdentityReport verify_ncbinom(const FreeElement &a, const FreeElement &b,
                                     const FreeElement &c, unsigned n) {
  return IdentityReport("noncommutative-binomial", static_cast<int>(n),
                        describe({{"a", &a}, {"b", &b}, {"c", &c}}),
                        power(a + b, n), ncbinom_rhs(a, b, c, n));
}

inline IdentityReport verify_ncbinom_double_sum(const FreeElement &a,
                                                const FreeElement &b,
                                                const FreeElement &c,
                                                unsigned n) {
  return IdentityReport("noncommutative-binomial-double-sum",
                        static_cast<int>(n),
                        describe({{"a", &a}, {"b", &b}, {"c", &c}}),
                        power(a + b, n), ncbinom_double_sum(a, b, c, n));
}

inline IdentityReport verify_wyss(const FreeElement &a, const FreeElement &b,
                                  unsigned n) {
  return IdentityReport("wyss-binomial", static_cast<int>(n),
                        describe({{"a", &a}, {"b", &b}}), power(a + b, n),
                        wyss_rhs(a, b, n));
}

/// Power expansion at base elements [a,b] and ab, both against modulus c.
inline std::pair<IdentityReport, IdentityReport>
application_identities(const FreeElement &a, const FreeElement &b,
                       const FreeElement &c, unsigned n) {
  FreeElement comm = commutator(a, b);
  FreeElement prod = a * b;
  auto params = describe({{"a", &a}, {"b", &b}, {"c", &c}});
  return {IdentityReport("commutator-power", static_cast<int>(n), params,
                         power(comm, n), theorem_rhs(comm, c, n)),
          IdentityReport("product-power", static_cast<int>(n), params,
                         power(prod, n), theorem_rhs(prod, c, n))};
}

} // namespace ncbinom
