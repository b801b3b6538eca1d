#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvmono/lie.hpp"
#include "lvmono/linalg.hpp"

namespace lvmono {

/// A root vector of the p=2 closure: an exact simultaneous eigenvector of
/// ad_H1 and ad_H2 with the stated eigenvalue pair.
struct RootVector {
  std::string name;
  Matrix value;
  Rational ad_h1;
  Rational ad_h2;
};

/// Cartan subalgebra {H1, H2} and the eight root vectors of the p=2
/// closure. The ten matrices are linearly independent and span the algebra.
struct RootDecomposition {
  Matrix h1;
  Matrix h2;
  std::vector<RootVector> roots;  // X12, X21, Y12, Z12, U1, V1, U2, V2

  const RootVector& root(const std::string& name) const {
    for (const RootVector& r : roots)
      if (r.name == name) return r;
    throw std::out_of_range("RootDecomposition: unknown root " + name);
  }

  std::vector<Matrix> all_elements() const {
    std::vector<Matrix> out{h1, h2};
    for (const RootVector& r : roots) out.push_back(r.value);
    return out;
  }
};

namespace detail {

/// Exact ad-eigenvalue of x under h: the scalar r with [h, x] = r x.
/// Throws if [h, x] is not an exact multiple of x.
inline Rational ad_eigenvalue(const Matrix& h, const Matrix& x,
                              const std::string& name) {
  const Matrix bx = bracket(h, x);
  Rational r(0);
  for (std::size_t k = 0; k < x.entries().size(); ++k) {
    if (!x.entries()[k].is_zero()) {
      r = bx.entries()[k] / x.entries()[k];
      break;
    }
  }
  if (bx != x * r)
    throw std::runtime_error("not an ad-eigenvector: " + name);
  return r;
}

}  // namespace detail

/// Builds the Cartan/root decomposition of the p=2 closure from its three
/// nilpotent generators:
///   H1 = [a,b],
///   X21 = -3[a,b] + [a,c] - 4a,   X12 = 3[a,b] + [b,c] + 4b,
///   H2 = [X21, X12],
///   Y12 = [X21,b], Z12 = [X12,a], U1 = b, V1 = a,
///   U2 = [[X21,b],X21], V2 = [X12,[X12,a]].
/// Every root vector is verified to be an exact simultaneous ad-eigenvector,
/// and the eigenvalue pairs are checked against the expected root table
/// built from the functionals with values (1,-5) and (0,5) on (H1,H2).
inline RootDecomposition build_root_decomposition(const Matrix& a,
                                                  const Matrix& b,
                                                  const Matrix& c) {
  RootDecomposition d;
  d.h1 = bracket(a, b);
  const Matrix x21 = d.h1 * Rational(-3) + bracket(a, c) - a * Rational(4);
  const Matrix x12 = d.h1 * Rational(3) + bracket(b, c) + b * Rational(4);
  d.h2 = bracket(x21, x12);
  if (!bracket(d.h1, d.h2).is_zero())
    throw std::runtime_error("Cartan elements do not commute");

  const Matrix y12 = bracket(x21, b);
  const Matrix z12 = bracket(x12, a);
  const Matrix u2 = bracket(y12, x21);
  const Matrix v2 = bracket(x12, z12);

  // lambda1 = (1, -5) and lambda2 = (0, 5) on (H1, H2); each root vector
  // realizes one of +-lambda1+-lambda2, +-2 lambda1, +-2 lambda2.
  const std::vector<std::pair<std::string, std::pair<Matrix, std::pair<Rational, Rational>>>>
      expected = {
          {"X12", {x12, {Rational(1), Rational(-10)}}},
          {"X21", {x21, {Rational(-1), Rational(10)}}},
          {"Y12", {y12, {Rational(1), Rational(0)}}},
          {"Z12", {z12, {Rational(-1), Rational(0)}}},
          {"U1", {b, {Rational(2), Rational(-10)}}},
          {"V1", {a, {Rational(-2), Rational(10)}}},
          {"U2", {u2, {Rational(0), Rational(10)}}},
          {"V2", {v2, {Rational(0), Rational(-10)}}},
      };

  for (const auto& [name, entry] : expected) {
    const auto& [value, pair] = entry;
    RootVector rv;
    rv.name = name;
    rv.value = value;
    rv.ad_h1 = detail::ad_eigenvalue(d.h1, value, name + " under H1");
    rv.ad_h2 = detail::ad_eigenvalue(d.h2, value, name + " under H2");
    if (rv.ad_h1 != pair.first || rv.ad_h2 != pair.second)
      throw std::runtime_error(
          "root value mismatch for " + name + ": expected (" +
          pair.first.str() + ", " + pair.second.str() + "), computed (" +
          rv.ad_h1.str() + ", " + rv.ad_h2.str() + ")");
    d.roots.push_back(std::move(rv));
  }
  return d;
}

}  // namespace lvmono
