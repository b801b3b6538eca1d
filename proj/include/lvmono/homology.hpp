#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvmono/linalg.hpp"

namespace lvmono {

// Cycle classes on the fiber of f = x^p y^p (1 - x - y):
//   Delta(i)   orbit delta_i of the vanishing cycle at the Morse point,
//              i = 0..p-1
//   Delta12(i) vanishing cycles at the origin, i = 0..p-1
//   Delta13, Delta23 vanishing cycles at (1,0) and (0,1)
enum class CycleKind { Delta, Delta12, Delta13, Delta23 };

struct CycleLabel {
  CycleKind kind;
  int index = 0;  // meaningful for Delta and Delta12 only

  std::string str() const {
    switch (kind) {
      case CycleKind::Delta:   return "delta_" + std::to_string(index);
      case CycleKind::Delta12: return "delta12_" + std::to_string(index);
      case CycleKind::Delta13: return "delta13";
      case CycleKind::Delta23: return "delta23";
    }
    return "?";
  }

  friend bool operator==(const CycleLabel& a, const CycleLabel& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

/// Ordered basis of the 2p+2 cycle classes:
/// delta_0..delta_{p-1}, delta12_0..delta12_{p-1}, delta13, delta23.
/// For p = 2 this order coincides with the one used by the fixed p=2
/// reference matrices.
struct CycleBasis {
  int p = 0;
  std::vector<CycleLabel> order;

  static CycleBasis standard(int p) {
    if (p < 1) throw std::invalid_argument("CycleBasis: p must be >= 1");
    CycleBasis b;
    b.p = p;
    for (int i = 0; i < p; ++i) b.order.push_back({CycleKind::Delta, i});
    for (int i = 0; i < p; ++i) b.order.push_back({CycleKind::Delta12, i});
    b.order.push_back({CycleKind::Delta13, 0});
    b.order.push_back({CycleKind::Delta23, 0});
    return b;
  }

  std::size_t size() const { return order.size(); }
  std::size_t delta(int i) const { return static_cast<std::size_t>(i); }
  std::size_t delta12(int i) const { return static_cast<std::size_t>(p + i); }
  std::size_t delta13() const { return static_cast<std::size_t>(2 * p); }
  std::size_t delta23() const { return static_cast<std::size_t>(2 * p + 1); }
};

namespace detail {

/// Signed intersection number (a . b) of two cycle classes.
inline Rational pair_intersection(const CycleLabel& a, const CycleLabel& b) {
  // All pairs among {delta12_*, delta13, delta23} have intersection 0.
  auto is_vanishing_at_lines = [](const CycleLabel& l) {
    return l.kind != CycleKind::Delta;
  };
  if (is_vanishing_at_lines(a) && is_vanishing_at_lines(b)) return Rational(0);
  if (a.kind != CycleKind::Delta) return -pair_intersection(b, a);
  // a = delta_i from here on
  switch (b.kind) {
    case CycleKind::Delta:
      if (a.index == b.index) return Rational(0);
      return a.index < b.index ? Rational(-1) : Rational(1);
    case CycleKind::Delta12:
      return a.index == b.index ? Rational(1) : Rational(0);
    case CycleKind::Delta13:
    case CycleKind::Delta23:
      return Rational(1);
  }
  return Rational(0);
}

}  // namespace detail

/// Antisymmetric intersection form on the cycle basis.
inline Matrix intersection_form(const CycleBasis& basis) {
  const std::size_t n = basis.size();
  Matrix omega(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      omega(i, j) = detail::pair_intersection(basis.order[i], basis.order[j]);
  return omega;
}

inline Matrix intersection_form(int p) {
  return intersection_form(CycleBasis::standard(p));
}

/// Monodromy operator around the critical value 0, in column-action
/// convention (column j is the image of basis vector j):
///   delta12_k -> delta12_{k+1 mod p},  delta13 and delta23 fixed,
///   delta_k -> delta_{k+1} (k < p-1),
///   delta_{p-1} -> delta_0 - delta12_0 - delta13 - delta23.
inline Matrix monodromy_m2(const CycleBasis& basis) {
  const int p = basis.p;
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (int k = 0; k + 1 < p; ++k) m(basis.delta(k + 1), basis.delta(k)) = 1;
  m(basis.delta(0), basis.delta(p - 1)) = 1;
  m(basis.delta12(0), basis.delta(p - 1)) = -1;
  m(basis.delta13(), basis.delta(p - 1)) = -1;
  m(basis.delta23(), basis.delta(p - 1)) = -1;
  for (int k = 0; k < p; ++k) m(basis.delta12((k + 1) % p), basis.delta12(k)) = 1;
  m(basis.delta13(), basis.delta13()) = 1;
  m(basis.delta23(), basis.delta23()) = 1;
  return m;
}

inline Matrix monodromy_m2(int p) { return monodromy_m2(CycleBasis::standard(p)); }

/// Monodromy operator around the Morse critical value: the symplectic
/// transvection x -> x - (x . delta_0) delta_0, with (x . delta_0) read
/// from the intersection form.
inline Matrix monodromy_m1(const CycleBasis& basis, const Matrix& omega) {
  const std::size_t n = basis.size();
  if (omega.rows() != n || omega.cols() != n)
    throw std::invalid_argument("monodromy_m1: form dimension mismatch");
  const std::size_t d0 = basis.delta(0);
  Matrix m = Matrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(d0, j) -= omega(j, d0);
  return m;
}

inline Matrix monodromy_m1(int p) {
  const CycleBasis basis = CycleBasis::standard(p);
  return monodromy_m1(basis, intersection_form(basis));
}

/// Local monodromy of the germ x^p y on relative homology, in the basis
/// gamma_0..gamma_{p-1}, alpha (column-action convention): the gammas shift
/// cyclically, the last one picking up alpha; alpha is fixed.
inline Matrix germ_monodromy(int p) {
  if (p < 1) throw std::invalid_argument("germ_monodromy: p must be >= 1");
  const std::size_t n = static_cast<std::size_t>(p) + 1;
  Matrix m(n, n);
  for (int k = 0; k + 1 < p; ++k) m(k + 1, k) = 1;
  m(0, p - 1) = 1;
  m(p, p - 1) = 1;
  m(p, p) = 1;
  return m;
}

/// Full monodromy data of the fibration for a given p.
struct MonodromyModel {
  int p = 0;
  CycleBasis basis;
  Matrix omega;
  Matrix m1;
  Matrix m2;
  Rational critical_value_t1;  // p^{2p} / (2p+1)^{2p+1}
  Rational critical_value_t2;  // 0
};

inline MonodromyModel make_model(int p) {
  if (p < 1) throw std::invalid_argument("make_model: p must be >= 1");
  MonodromyModel model;
  model.p = p;
  model.basis = CycleBasis::standard(p);
  model.omega = intersection_form(model.basis);
  model.m1 = monodromy_m1(model.basis, model.omega);
  model.m2 = monodromy_m2(model.basis);
  const unsigned long up = static_cast<unsigned long>(p);
  model.critical_value_t1 =
      integer_pow(p, 2 * up) / integer_pow(2 * p + 1, 2 * up + 1);
  model.critical_value_t2 = Rational(0);
  return model;
}

/// Basis of span{v, m v, m^2 v, ...}, iterated until the dimension
/// stabilizes. Returns the independent iterates in order.
inline std::vector<Matrix> orbit_span(const Matrix& m, const Matrix& v) {
  if (!m.is_square() || !v.is_column() || v.rows() != m.rows())
    throw std::invalid_argument("orbit_span: dimension mismatch");
  std::vector<Matrix> basis;
  SpanTracker tracker(v.rows());
  Matrix cur = v;
  while (tracker.insert(cur)) {
    basis.push_back(cur);
    cur = m * cur;
  }
  return basis;
}

}  // namespace lvmono
