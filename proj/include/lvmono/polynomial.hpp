#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvmono/rational.hpp"

namespace lvmono {

/// Univariate polynomial over Rational. Coefficients ascending by degree,
/// trailing coefficient nonzero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(1); }
  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }

  static Polynomial monomial(std::size_t degree, Rational coeff = Rational(1)) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  /// t^p - 1.
  static Polynomial power_minus_one(std::size_t p) {
    std::vector<Rational> c(p + 1);
    c[0] = -1;
    c[p] = 1;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

  Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(unsigned long k) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  /// Exact long division; the remainder has degree below the divisor's.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
      throw std::domain_error("Polynomial: division by zero polynomial");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot;
    const int dd = divisor.degree();
    int rd = degree();
    if (rd >= dd) quot.assign(rd - dd + 1, Rational(0));
    while (rd >= dd) {
      Rational factor = rem[rd] / divisor.c_[dd];
      quot[rd - dd] = factor;
      for (int k = 0; k <= dd; ++k) rem[rd - dd + k] -= factor * divisor.c_[k];
      while (rd >= 0 && rem[rd].is_zero()) --rd;
    }
    rem.resize(rd + 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// True iff this divides other with zero remainder.
  bool divides(const Polynomial& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& a = c_[k];
      if (a.is_zero()) continue;
      if (first) {
        if (a.sign() < 0) os << "-";
        first = false;
      } else {
        os << (a.sign() < 0 ? " - " : " + ");
      }
      const Rational mag = abs(a);
      const bool unit = (mag == Rational(1));
      if (k == 0) {
        os << mag.str();
      } else {
        if (!unit) os << mag.str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace lvmono
