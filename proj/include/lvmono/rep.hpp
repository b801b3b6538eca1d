#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lvmono/homology.hpp"
#include "lvmono/linalg.hpp"

namespace lvmono {

/// The 2p-dimensional symplectic representation obtained by splitting off
/// the zero-cycle kernel of the intersection form. lift_basis holds the
/// chosen invariant complement as cycle-space column vectors; kernel_basis
/// spans the kernel, on which the monodromy acts trivially.
struct ReducedRep {
  int p = 0;
  std::size_t dim = 0;               // 2p
  Matrix j_form;                     // nondegenerate antisymmetric, 2p x 2p
  Matrix m1_red;
  Matrix m2_red;
  std::vector<Matrix> lift_basis;    // 2p cycle-space columns
  std::vector<Matrix> kernel_basis;  // 2 cycle-space columns
};

/// Kernel of the intersection form, checked to be pointwise fixed by both
/// monodromy operators. A failure here is a construction bug, not user error.
inline std::vector<Matrix> zero_cycle_kernel(const MonodromyModel& model) {
  std::vector<Matrix> kernel = rank_and_kernel(model.omega).kernel;
  for (const Matrix& v : kernel) {
    if (model.m1 * v != v || model.m2 * v != v)
      throw std::runtime_error("monodromy not trivial on kernel");
  }
  return kernel;
}

namespace detail {

/// Complement candidate: delta_i (i = 0..p-1), then
/// delta12_i + delta13 + delta23 (i = 0..p-1).
inline std::vector<Matrix> complement_basis(const CycleBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<Matrix> cols;
  for (int i = 0; i < basis.p; ++i)
    cols.push_back(Matrix::unit_column(n, basis.delta(i)));
  for (int i = 0; i < basis.p; ++i) {
    Matrix v(n, 1);
    v(basis.delta12(i), 0) = 1;
    v(basis.delta13(), 0) = 1;
    v(basis.delta23(), 0) = 1;
    cols.push_back(std::move(v));
  }
  return cols;
}

/// Expresses op restricted to span(cols) in the cols coordinates; throws if
/// the span is not invariant.
inline Matrix restrict_operator(const Matrix& op, const Matrix& cols) {
  Matrix reduced(cols.cols(), cols.cols());
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    auto x = solve(cols, op * cols.col(j));
    if (!x) throw std::runtime_error("complement not invariant");
    reduced.set_col(j, *x);
  }
  return reduced;
}

}  // namespace detail

/// Builds the reduced representation on the invariant complement of the
/// zero-cycle kernel. The restriction of the intersection form is kept
/// as-is (not normalized to a standard symplectic block form).
inline ReducedRep reduce(const MonodromyModel& model) {
  ReducedRep rep;
  rep.p = model.p;
  rep.dim = static_cast<std::size_t>(2 * model.p);
  rep.lift_basis = detail::complement_basis(model.basis);
  rep.kernel_basis = zero_cycle_kernel(model);

  const Matrix b = Matrix::from_columns(rep.lift_basis);
  rep.m1_red = detail::restrict_operator(model.m1, b);
  rep.m2_red = detail::restrict_operator(model.m2, b);
  rep.j_form = b.transpose() * model.omega * b;

  if (rank(rep.j_form) != rep.dim)
    throw std::runtime_error("reduced intersection form is degenerate");
  if (rep.m1_red.transpose() * rep.j_form * rep.m1_red != rep.j_form ||
      rep.m2_red.transpose() * rep.j_form * rep.m2_red != rep.j_form)
    throw std::runtime_error("reduced operators do not preserve the form");
  return rep;
}

}  // namespace lvmono
