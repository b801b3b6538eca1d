#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lvmono/matrix.hpp"
#include "lvmono/polynomial.hpp"

namespace lvmono {

/// Reduced row echelon form in place. Returns the pivot column indices in
/// row order. Pivoting picks the first nonzero entry, so the result is a
/// deterministic normal form of the row space.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(row, j), m(pivot_row, j));
    const Rational inv_pivot = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Matrix> kernel;  // column vectors spanning the exact null space
};

/// Exact rank and a reduced-echelon-normalized kernel basis: one vector per
/// free column f, with entry 1 at f and -R(i, f) at each pivot column.
inline RankKernel rank_and_kernel(const Matrix& m) {
  Matrix r = m;
  const std::vector<std::size_t> pivots = rref_in_place(r);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -r(i, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

/// Solves a x = b exactly for a column vector b. Returns nullopt when the
/// system is inconsistent; free variables, if any, are set to zero.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (!b.is_column() || b.rows() != a.rows())
    throw std::invalid_argument("solve: right-hand side shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b(i, 0);
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Matrix x(a.cols(), 1);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i], 0) = aug(i, a.cols());
  return x;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != n || pivots.back() >= n)
    throw std::invalid_argument("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rational determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv_pivot = Rational(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Characteristic polynomial det(tI - m), monic, via the Faddeev-LeVerrier
/// trace recurrence (exact over the rationals).
inline Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);  // M_0 = 0, then M_k = m * (M_{k-1} + c_{n-k+1} I)
  for (std::size_t k = 1; k <= n; ++k) {
    mk += Matrix::identity(n) * c[n - k + 1];
    mk = m * mk;
    c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
  }
  return Polynomial(std::move(c));
}

/// Evaluates p at a square matrix (matrix substitution, Horner form).
inline Matrix eval(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eval: matrix not square");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    if (!c[k].is_zero()) acc += Matrix::identity(n) * c[k];
  }
  return acc;
}

/// Monic minimal polynomial: the lowest-degree monic dependence among
/// I, m, m^2, ..., found by exact rank computation on flattened powers.
inline Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::one();
  std::vector<Matrix> powers;
  powers.push_back(Matrix::identity(n));
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    Matrix stacked(n * n, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t e = 0; e < n * n; ++e)
        stacked(e, c) = powers[c].entries()[e];
    Matrix rhs = Matrix::column(powers[k].entries());
    if (auto x = solve(stacked, rhs)) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)(i, 0);
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
  }
  throw std::logic_error("min_poly: no dependence up to the dimension");  // unreachable
}

inline bool is_unipotent(const Matrix& m) {
  if (!m.is_square()) return false;
  Matrix n = m - Matrix::identity(m.rows());
  return n.pow(m.rows()).is_zero();
}

/// Nilpotent logarithm of a unipotent matrix: the finite alternating series
/// in (m - I). Inverse of nilpotent_exp.
inline Matrix unipotent_log(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unipotent_log: matrix not square");
  const std::size_t n = m.rows();
  const Matrix nil = m - Matrix::identity(n);
  if (!nil.pow(n).is_zero()) throw std::invalid_argument("not unipotent");
  Matrix acc(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    if (power.is_zero()) break;
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    acc += power * (sign / Rational(static_cast<long>(k)));
  }
  return acc;
}

/// Finite exponential series of a nilpotent matrix.
inline Matrix nilpotent_exp(const Matrix& nil) {
  if (!nil.is_square()) throw std::invalid_argument("nilpotent_exp: matrix not square");
  const std::size_t n = nil.rows();
  if (!nil.pow(n).is_zero()) throw std::invalid_argument("nilpotent_exp: matrix not nilpotent");
  Matrix acc = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * nil;
    if (term.is_zero()) break;
    acc += term * (Rational(1) / factorial(k));
  }
  return acc;
}

/// Incremental exact row-space tracker. Rows are kept in reduced echelon
/// form, so membership tests and insertion order are deterministic.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return rows_.size(); }

  /// Adds v to the span. Returns true iff v was independent of the span.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t pivot = first_nonzero(v);
    if (pivot == width_) return false;
    const Rational inv = Rational(1) / v[pivot];
    for (auto& e : v) e *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = rows_[r][pivot];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) rows_[r][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
  }

  bool insert(const Matrix& m) { return insert(m.entries()); }

  bool contains(std::vector<Rational> v) const {
    if (v.size() != width_)
      throw std::invalid_argument("SpanTracker: width mismatch");
    reduce(v);
    return first_nonzero(v) == width_;
  }

  bool contains(const Matrix& m) const { return contains(m.entries()); }

 private:
  void reduce(std::vector<Rational>& v) const {
    if (v.size() != width_)
      throw std::invalid_argument("SpanTracker: width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[r][j];
    }
  }

  std::size_t first_nonzero(const std::vector<Rational>& v) const {
    std::size_t k = 0;
    while (k < width_ && v[k].is_zero()) ++k;
    return k;
  }

  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;   // reduced echelon rows
  std::vector<std::size_t> pivots_;           // ascending
};

/// Maximal linearly independent subset in input order (first-seen wins).
/// Matrices are flattened for the independence test; shapes must agree.
inline std::vector<Matrix> span_basis(const std::vector<Matrix>& items) {
  std::vector<Matrix> basis;
  if (items.empty()) return basis;
  const std::size_t r = items.front().rows(), c = items.front().cols();
  SpanTracker tracker(r * c);
  for (const Matrix& m : items) {
    if (m.rows() != r || m.cols() != c)
      throw std::invalid_argument("span_basis: shape mismatch");
    if (tracker.insert(m)) basis.push_back(m);
  }
  return basis;
}

}  // namespace lvmono
