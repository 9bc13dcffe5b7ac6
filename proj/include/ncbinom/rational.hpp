#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncbinom {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(const mpz_class &value) : value_(value) {}

  Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0)
      throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Parses "p" or "p/q" with optional leading '-'.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = std::string(text.substr(0, slash));
    auto den_text =
        slash == std::string_view::npos ? std::string("1")
                                        : std::string(text.substr(slash + 1));
    mpz_class num, den;
    if (num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0)
      throw std::invalid_argument("Rational: malformed '" + std::string(text) +
                                  "'");
    return Rational(num, den);
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
  }

  std::string to_string() const { return value_.get_str(10); }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational &operator+=(const Rational &o) {
    value_ += o.value_;
    return *this;
  }
  Rational &operator-=(const Rational &o) {
    value_ -= o.value_;
    return *this;
  }
  Rational &operator*=(const Rational &o) {
    value_ *= o.value_;
    return *this;
  }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.to_string();
  }

private:
  mpq_class value_;
};

/// C(n, k) = n! / ((n-k)! k!); zero for k outside [0, n].
inline Rational binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(r);
}

} // namespace ncbinom
