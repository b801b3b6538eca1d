#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lvmono {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit, so matrix literals read naturally
  Rational(long n) : v_(static_cast<signed long>(n)) {}

  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }

  /// Parses "num/den" or a bare integer, e.g. "-1/3", "7".
  explicit Rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        v_ = mpq_class(mpz_class(text));
      } else {
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Serialization form, always "num/den" ("-1/1", "0/1", ...).
  std::string to_fraction() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Display form, omits a unit denominator ("-1", "2/3").
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return to_fraction();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! as an exact rational (used by the finite exponential series).
inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, 1);
}

/// base^exp for integer base, exp >= 0.
inline Rational integer_pow(long base, unsigned long exp) {
  mpz_class b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return Rational(r, 1);
}

}  // namespace lvmono
