#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace qkspin {

using Rational = mpq_class;

/// Element a + b*sqrt2 + c*i + d*i*sqrt2 of Q(i, sqrt2).
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}
  Scalar(int v) : a_(v) {}
  Scalar(const Rational& a) : a_(a) { a_.canonicalize(); }
  Scalar(Rational a, Rational b, Rational c, Rational d);

  static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
  static Scalar i() { return Scalar(0, 0, 1, 0); }
  static Scalar frac(long p, long q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const;
  // true when b = c = d = 0
  bool is_rational() const;
  // true when c = d = 0
  bool is_real() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // a + b*sqrt2 as a real number is positive (only meaningful for real scalars)
  bool is_positive_real() const;

  // "a|b|c|d", each component "p/q" in lowest terms
  std::string encode() const;
  static std::optional<Scalar> decode(const std::string& text);

  // Display only. Never used in comparisons.
  std::string to_decimal(int digits = 12) const;
  // Human readable form such as "3/4", "-sqrt2/2", "1+i".
  std::string pretty() const;

private:
  Rational a_, b_, c_, d_;
};

Scalar conjugate(const Scalar& x);

// Division by zero yields std::nullopt.
std::optional<Scalar> inverse(const Scalar& x);

// Throws std::domain_error on a zero divisor.
Scalar operator/(const Scalar& x, const Scalar& y);

std::string rational_text(const Rational& q);
std::optional<Rational> parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace qkspin
