#include "qkspin/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qkspin {

namespace {

bool zero(const Rational& q) { return sgn(q) == 0; }

Rational norm_q(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : a_(norm_q(std::move(a))), b_(norm_q(std::move(b))), c_(norm_q(std::move(c))),
      d_(norm_q(std::move(d))) {}

Scalar Scalar::frac(long p, long q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

bool Scalar::is_zero() const { return zero(a_) && zero(b_) && zero(c_) && zero(d_); }
bool Scalar::is_rational() const { return zero(b_) && zero(c_) && zero(d_); }
bool Scalar::is_real() const { return zero(c_) && zero(d_); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.c_ = -c_;
  r.d_ = -d_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (!o.is_rational()) {
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (!o.is_rational()) {
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
  }
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  Scalar r;
  if (x.is_rational()) {
    if (zero(x.a_)) return r;
    r.a_ = x.a_ * y.a_;
    if (!y.is_rational()) {
      r.b_ = x.a_ * y.b_;
      r.c_ = x.a_ * y.c_;
      r.d_ = x.a_ * y.d_;
    }
    return r;
  }
  if (y.is_rational()) return y * x;
  // (a + b s + c i + d i s)(e + f s + g i + h i s), s^2 = 2, i^2 = -1
  const Rational &a = x.a_, &b = x.b_, &c = x.c_, &d = x.d_;
  const Rational &e = y.a_, &f = y.b_, &g = y.c_, &h = y.d_;
  r.a_ = a * e + 2 * b * f - c * g - 2 * d * h;
  r.b_ = a * f + b * e - c * h - d * g;
  r.c_ = a * g + 2 * b * h + c * e + 2 * d * f;
  r.d_ = a * h + b * g + c * f + d * e;
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

bool Scalar::is_positive_real() const {
  if (!is_real()) return false;
  // sign of a + b*sqrt2 without floating point
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa > 0;
  if (sa == 0) return sb > 0;
  if (sa > 0 && sb > 0) return true;
  if (sa < 0 && sb < 0) return false;
  Rational lhs = a_ * a_, rhs = 2 * b_ * b_;
  return sa > 0 ? lhs > rhs : rhs > lhs;
}

Scalar conjugate(const Scalar& x) { return Scalar(x.a(), x.b(), -x.c(), -x.d()); }

std::optional<Scalar> inverse(const Scalar& x) {
  if (x.is_zero()) return std::nullopt;
  if (x.is_rational()) return Scalar(Rational(1) / x.a());
  // Multiply by the complex conjugate to land in Q(sqrt2), then by the
  // sqrt2-conjugate to land in Q.
  Scalar z = x * conjugate(x);  // real: p + q sqrt2
  Scalar zbar(z.a(), -z.b(), 0, 0);
  Scalar n = z * zbar;  // rational
  Rational inv_n = Rational(1) / n.a();
  return conjugate(x) * zbar * Scalar(inv_n);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  auto inv = inverse(y);
  if (!inv) throw std::domain_error("division by zero in Q(i, sqrt2)");
  return x * *inv;
}

std::string rational_text(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t k = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  if (num[0] == '+') num = num.substr(1);
  mpz_class p(num), q(den);
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string Scalar::encode() const {
  return rational_text(a_) + "|" + rational_text(b_) + "|" + rational_text(c_) + "|" +
         rational_text(d_);
}

std::optional<Scalar> Scalar::decode(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) return std::nullopt;
  Rational q[4];
  for (int k = 0; k < 4; ++k) {
    auto r = parse_rational(parts[k]);
    if (!r) return std::nullopt;
    q[k] = *r;
  }
  return Scalar(q[0], q[1], q[2], q[3]);
}

namespace {

std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string Scalar::to_decimal(int digits) const {
  const double s2 = std::sqrt(2.0);
  double re = a_.get_d() + b_.get_d() * s2;
  double im = c_.get_d() + d_.get_d() * s2;
  if (im == 0.0) return fmt_double(re, digits);
  std::string out = fmt_double(re, digits);
  out += im < 0 ? "-" : "+";
  out += fmt_double(std::fabs(im), digits) + "i";
  return out;
}

std::string Scalar::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  auto term = [&](const Rational& q, const char* unit) {
    if (zero(q)) return;
    std::string mag;
    Rational aq = abs(q);
    bool one = aq == 1;
    if (*unit == '\0') {
      mag = aq.get_str();
    } else if (one) {
      mag = unit;
    } else if (aq.get_den() == 1) {
      mag = aq.get_num().get_str() + unit;
    } else {
      mag = aq.get_num().get_str() + unit + "/" + aq.get_den().get_str();
      if (aq.get_num() == 1) mag = std::string(unit) + "/" + aq.get_den().get_str();
    }
    if (out.empty())
      out = (sgn(q) < 0 ? "-" : "") + mag;
    else
      out += (sgn(q) < 0 ? "-" : "+") + mag;
  };
  term(a_, "");
  term(b_, "sqrt2");
  term(c_, "i");
  term(d_, "i*sqrt2");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.pretty(); }

}  // namespace qkspin
