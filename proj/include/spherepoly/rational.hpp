#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace spherepoly {

/// Arbitrary-precision rational scalar, always normalized: positive
/// denominator, gcd(|num|, den) = 1.  Thin value wrapper over GMP.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpz_class n) : value_(std::move(n)) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "num" or "num/den" with an arbitrary-precision integer num and a
  /// positive integer den.
  static Rational from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (den.empty() || den.find_first_of("+-") != std::string::npos)
      throw std::invalid_argument("denominator must be a positive integer: " + text);
    return Rational{mpz_class(num), mpz_class(den)};
  }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  double to_double() const { return value_.get_d(); }

  /// Canonical text: "num/den", or just "num" when den = 1.
  std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.value_))); }

 private:
  mpq_class value_;
};

inline Rational pow(const Rational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return Rational(num, den);
}

inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

/// n!! = n(n-2)(n-4)...; empty product (n = 0 or n = -1 conventionally) is 1.
inline Rational double_factorial(unsigned long n) {
  mpz_class f;
  mpz_2fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace spherepoly
