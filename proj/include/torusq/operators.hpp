#pragma once

#include <cmath>

#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/types.hpp"

namespace torusq {

/// Max-norm Hermiticity test, absolute tolerance.
template <class Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-12) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <class Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a, double tol = 1e-12) {
  if (a.rows() != a.cols()) return false;
  using Plain = typename Derived::PlainObject;
  Plain gram = a * a.adjoint();
  gram -= Plain::Identity(a.rows(), a.cols());
  return gram.cwiseAbs().maxCoeff() <= tol;
}

/// [A, B] = AB - BA.
template <class DerivedA, class DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("commutator requires equal square operands");
  return (a * b - b * a).eval();
}

/// Position operator: diagonal in the grid basis, Q|q_j> = q_j|q_j>.
template <class Real>
MatrixC<Real> position_operator(const PositionGrid<Real>& grid) {
  MatrixC<Real> q = MatrixC<Real>::Zero(grid.n, grid.n);
  for (int j = 0; j < grid.n; ++j) q(j, j) = grid.points[j];
  return q;
}

template <class Real>
MatrixC<Real> position_operator(const ModuliPoint<Real>& m) {
  return position_operator(position_grid<Real>(hilbert_dim(m)));
}

/// Cyclic shift U|q_j> = -i|q_{j+1}>, with |q_n> wrapping to |q_0>. Unitary.
template <class Real = double>
MatrixC<Real> shift_operator(int n) {
  if (n < 1) throw DomainError("shift operator requires n >= 1");
  MatrixC<Real> u = MatrixC<Real>::Zero(n, n);
  const Complex<Real> minus_i(Real(0), Real(-1));
  for (int j = 0; j < n; ++j) u((j + 1) % n, j) = minus_i;
  return u;
}

/// Momentum attempt P = -i log U: diagonalize the (normal) shift operator
/// and take the principal logarithm of each unit-modulus eigenvalue, with
/// phases in (-pi, pi]. Hermitian by construction, but [Q, P] = i*1 cannot
/// hold on C^n; see heisenberg_defect.
template <class Real = double>
MatrixC<Real> momentum_operator(int n) {
  MatrixC<Real> u = shift_operator<Real>(n);
  Eigen::ComplexSchur<MatrixC<Real>> schur(u, true);
  if (schur.info() != Eigen::Success)
    throw ConvergenceError("Schur decomposition of the shift operator failed");
  const MatrixC<Real>& z = schur.matrixU();
  VectorC<Real> phases(n);
  for (int k = 0; k < n; ++k)
    phases[k] = Complex<Real>(wrap_angle(std::arg(schur.matrixT()(k, k))), Real(0));
  MatrixC<Real> p = z * phases.asDiagonal() * z.adjoint();
  return ((p + p.adjoint()) / Real(2)).eval();
}

/// Hamiltonian matrix in the grid basis:
///   <q_j|H|q_k> = (i/2)(delta_{j,k+1} - delta_{j,k-1}) - delta_{jk} cos(beta q_j + delta)
/// with indices cyclic. Equivalent to -(U + U^+)/2 - cos(beta Q + delta);
/// at n = 1 and n = 2 the kinetic entries cancel and H is diagonal.
template <class Real>
MatrixC<Real> build_hamiltonian(const ModuliPoint<Real>& m) {
  const int n = hilbert_dim(m);
  const PositionGrid<Real> grid = position_grid<Real>(n);
  MatrixC<Real> h = MatrixC<Real>::Zero(n, n);
  for (int j = 0; j < n; ++j)
    h(j, j) = -std::cos(m.beta() * grid.points[j] + m.delta());
  const Complex<Real> half_i(Real(0), Real(0.5));
  for (int k = 0; k < n; ++k) {
    h((k + 1) % n, k) += half_i;
    h((k - 1 + n) % n, k) -= half_i;
  }
  return h;
}

/// Frobenius norm of [Q, P] - i*1. Any commutator is traceless while
/// trace(i*1) = i*n, so the defect is bounded below by sqrt(n): the
/// Heisenberg algebra has no realization on C^n.
template <class Real = double>
Real heisenberg_defect(int n) {
  const MatrixC<Real> q = position_operator(position_grid<Real>(n));
  const MatrixC<Real> p = momentum_operator<Real>(n);
  MatrixC<Real> c = commutator(q, p);
  for (int j = 0; j < n; ++j) c(j, j) -= Complex<Real>(Real(0), Real(1));
  return c.norm();
}

}  // namespace torusq
