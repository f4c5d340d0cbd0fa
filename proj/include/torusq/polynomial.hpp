#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "torusq/errors.hpp"
#include "torusq/types.hpp"

namespace torusq {

/// Real-coefficient polynomial, coefficients ascending in degree.
template <class Real = double>
class Polynomial {
 public:
  Polynomial() : coeffs_{Real(0)} {}

  explicit Polynomial(std::vector<Real> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.push_back(Real(0));
    for (Real c : coeffs_)
      if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Real operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Real>& coefficients() const { return coeffs_; }

  /// Horner evaluation.
  Real operator()(Real x) const {
    Real acc = Real(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

 private:
  std::vector<Real> coeffs_;
};

using Polynomiald = Polynomial<double>;

template <class Real>
Real poly_eval(const Polynomial<Real>& a, Real x) {
  return a(x);
}

template <class Real>
Polynomial<Real> poly_mul(const Polynomial<Real>& a, const Polynomial<Real>& b) {
  std::vector<Real> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, Real(0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return Polynomial<Real>(std::move(out));
}

/// Largest absolute coefficient difference; shorter polynomial is zero padded.
template <class Real>
Real max_coefficient_difference(const Polynomial<Real>& a, const Polynomial<Real>& b) {
  const int top = std::max(a.degree(), b.degree());
  Real worst = Real(0);
  for (int k = 0; k <= top; ++k) {
    const Real ca = k <= a.degree() ? a[k] : Real(0);
    const Real cb = k <= b.degree() ? b[k] : Real(0);
    worst = std::max(worst, std::abs(ca - cb));
  }
  return worst;
}

template <class Real>
Real max_abs_coefficient(const Polynomial<Real>& a) {
  Real worst = Real(0);
  for (int k = 0; k <= a.degree(); ++k) worst = std::max(worst, std::abs(a[k]));
  return worst;
}

/// Coefficients of det(E*1 - A) by the Faddeev-LeVerrier recurrence:
///   M_1 = 1,  c_{n-k} = -tr(A M_k)/k,  M_{k+1} = A M_k + c_{n-k} 1.
/// Independent of any eigensolver. For Hermitian input the coefficients are
/// real; the imaginary roundoff residue must stay below 1e-9 relative to the
/// largest coefficient and is then discarded.
template <class Real>
Polynomial<Real> charpoly_oracle(const MatrixC<Real>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("charpoly needs a square matrix");
  const int n = static_cast<int>(a.rows());
  std::vector<Complex<Real>> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Complex<Real>(Real(1), Real(0));
  MatrixC<Real> m = MatrixC<Real>::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    MatrixC<Real> am = a * m;
    const Complex<Real> ck = -am.trace() / Real(k);
    c[static_cast<std::size_t>(n - k)] = ck;
    if (k < n) {
      m = std::move(am);
      m.diagonal().array() += ck;
    }
  }

  Real max_mag = Real(1);
  Real max_imag = Real(0);
  for (const auto& v : c) {
    max_mag = std::max(max_mag, std::abs(v.real()));
    max_imag = std::max(max_imag, std::abs(v.imag()));
  }
  if (max_imag > Real(1e-9) * max_mag)
    throw DomainError("characteristic polynomial has non-real coefficients");

  std::vector<Real> real_coeffs(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) real_coeffs[k] = c[k].real();
  return Polynomial<Real>(std::move(real_coeffs));
}

}  // namespace torusq
