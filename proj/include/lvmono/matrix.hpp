#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvmono/rational.hpp"

namespace lvmono {

/// Dense row-major matrix over Rational. Value type; equality is entrywise
/// exact equality. Column vectors are n-by-1 matrices.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<Rational>> data) {
    rows_ = data.size();
    cols_ = rows_ == 0 ? 0 : data.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : data) {
      if (row.size() != cols_)
        throw std::invalid_argument("Matrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  /// n-by-1 column vector from a coefficient list.
  static Matrix column(std::vector<Rational> coeffs) {
    Matrix m;
    m.rows_ = coeffs.size();
    m.cols_ = 1;
    m.entries_ = std::move(coeffs);
    return m;
  }

  /// Standard basis column e_i in dimension n.
  static Matrix unit_column(std::size_t n, std::size_t i) {
    Matrix m(n, 1);
    m(i, 0) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_column() const { return cols_ == 1; }

  Rational& operator()(std::size_t i, std::size_t j) {
    check_index(i, j);
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return entries_[i * cols_ + j];
  }

  /// Entry i of a column vector.
  const Rational& at(std::size_t i) const { return (*this)(i, 0); }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    require_square("trace");
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(const Matrix& a) { return a * Rational(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(unsigned long k) const {
    require_square("pow");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  Matrix col(std::size_t j) const {
    Matrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
  }

  void set_col(std::size_t j, const Matrix& v) {
    if (!v.is_column() || v.rows_ != rows_)
      throw std::invalid_argument("Matrix: bad column assignment");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
  }

  /// Matrix whose columns are the given column vectors.
  static Matrix from_columns(const std::vector<Matrix>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
  }

  /// Aligned plain-text rendering.
  std::string str() const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        cells[i * cols_ + j] = (*this)(i, j).str();
        width[j] = std::max(width[j], cells[i * cols_ + j].size());
      }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[ ";
      for (std::size_t j = 0; j < cols_; ++j) {
        const std::string& c = cells[i * cols_ + j];
        os << std::string(width[j] - c.size(), ' ') << c
           << (j + 1 < cols_ ? "  " : " ");
      }
      os << "]\n";
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << m.str();
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("Matrix: index out of range");
  }
  void require_square(const char* op) const {
    if (!is_square())
      throw std::invalid_argument(std::string("Matrix: ") + op + " requires a square matrix");
  }
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + op);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Commutator [a, b] = ab - ba.
inline Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace lvmono
