#pragma once

#include <cmath>

#include "torusq/errors.hpp"
#include "torusq/operators.hpp"
#include "torusq/types.hpp"

namespace torusq {

/// Full Hermitian eigendecomposition. Eigenvalues ascending; eigenvector
/// columns aligned with them. Phase convention: in each column the first
/// component of largest modulus is rotated to be real and positive, which
/// makes the decomposition deterministic for identical input.
template <class Real = double>
struct Spectrum {
  VectorR<Real> eigenvalues;
  MatrixC<Real> eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  Real ground_energy() const { return eigenvalues[0]; }
  /// E_1 - E_0; zero for a one-dimensional space.
  Real gap() const { return size() > 1 ? eigenvalues[1] - eigenvalues[0] : Real(0); }
  Real range() const { return eigenvalues[size() - 1] - eigenvalues[0]; }
};

using Spectrumd = Spectrum<double>;

template <class Real>
Spectrum<Real> eigh(const MatrixC<Real>& h, double hermiticity_tol = 1e-12) {
  if (h.rows() != h.cols()) throw DimensionMismatch("eigh needs a square matrix");
  if (!is_hermitian(h, hermiticity_tol)) throw DomainError("eigh needs a Hermitian matrix");

  // Symmetrize to remove rounding asymmetry before solving.
  MatrixC<Real> a = ((h + h.adjoint()) / Real(2)).eval();
  Eigen::SelfAdjointEigenSolver<MatrixC<Real>> solver(a);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("Hermitian eigensolver did not converge");

  Spectrum<Real> s{solver.eigenvalues(), solver.eigenvectors()};
  for (int k = 0; k < s.size(); ++k) {
    int jmax = 0;
    Real best = std::abs(s.eigenvectors(0, k));
    for (int j = 1; j < s.size(); ++j) {
      const Real mag = std::abs(s.eigenvectors(j, k));
      if (mag > best) {
        best = mag;
        jmax = j;
      }
    }
    const Complex<Real> pivot = s.eigenvectors(jmax, k);
    if (best > Real(0)) s.eigenvectors.col(k) *= std::conj(pivot) / best;
  }
  return s;
}

}  // namespace torusq
