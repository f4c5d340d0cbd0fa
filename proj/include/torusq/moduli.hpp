#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "torusq/errors.hpp"
#include "torusq/types.hpp"

namespace torusq {

/// A point in the moduli space of complex structures on the torus phase
/// space: beta is the axis-length ratio (modulus of the modular parameter),
/// delta the phase offset between the two periodicities (its argument).
/// The Hamiltonian family attached to the point is H = -cos p - cos(beta q + delta).
template <class Real = double>
class ModuliPoint {
 public:
  /// Momentum-axis scale; fixed, not a free parameter.
  static constexpr Real alpha = Real(1);

  ModuliPoint(Real beta, Real delta, std::optional<int> dim_override = std::nullopt)
      : beta_(beta), delta_(reduce_angle(delta)), dim_override_(dim_override) {
    if (!std::isfinite(beta) || !std::isfinite(delta))
      throw DomainError("moduli parameters must be finite");
    if (!(beta > Real(0))) throw DomainError("beta must be positive");
    if (!dim_override_ && beta < Real(1))
      throw DomainError("beta < 1 requires an explicit dimension override");
    if (dim_override_ && *dim_override_ < 1)
      throw DomainError("dimension override must be >= 1");
  }

  Real beta() const { return beta_; }
  /// Stored reduced to [0, 2*pi).
  Real delta() const { return delta_; }
  const std::optional<int>& dim_override() const { return dim_override_; }

 private:
  Real beta_;
  Real delta_;
  std::optional<int> dim_override_;
};

using ModuliPointd = ModuliPoint<double>;

template <class Real = double>
ModuliPoint<Real> make_moduli(Real beta, Real delta,
                              std::optional<int> dim_override = std::nullopt) {
  return ModuliPoint<Real>(beta, delta, dim_override);
}

/// Total symplectic volume in units where the beta = 1 torus has volume 1.
template <class Real>
Real symplectic_volume(const ModuliPoint<Real>& m) {
  return m.beta();
}

/// Hilbert-space dimension: the override if present, else floor(beta).
template <class Real>
int hilbert_dim(const ModuliPoint<Real>& m) {
  if (m.dim_override()) return *m.dim_override();
  return static_cast<int>(std::floor(m.beta()));
}

/// Modular parameter tau = beta * e^{i delta}.
template <class Real>
Complex<Real> modular_parameter(const ModuliPoint<Real>& m) {
  return std::polar(m.beta(), m.delta());
}

/// Uniform grid of n position eigenvalues on (-pi, pi], anchored at q_0 = 0.
/// The grid is closed under q -> -q (mod 2*pi), so cos q_{n-1} = cos q_1:
/// mirror points are built as exact negations of each other.
template <class Real = double>
struct PositionGrid {
  int n = 0;
  VectorR<Real> points;
};

using PositionGridd = PositionGrid<double>;

template <class Real = double>
PositionGrid<Real> position_grid(int n) {
  if (n < 1) throw DomainError("position grid requires n >= 1");
  VectorR<Real> q(n);
  for (int m = 0; m < n; ++m) {
    q[m] = (2 * m <= n) ? Real(2) * pi_v<Real> * Real(m) / Real(n)
                        : -Real(2) * pi_v<Real> * Real(n - m) / Real(n);
  }
  return PositionGrid<Real>{n, std::move(q)};
}

/// Bookkeeping label for the vacuum line bundle: Chern degree l (= dim H;
/// a negative l would denote the dual space, unused here) and a textual
/// descriptor of the holomorphic coordinate w = (beta q + delta) + i p.
struct PicardLabel {
  int l = 0;
  std::string lambda_coordinate;
};

template <class Real>
PicardLabel picard_label(const ModuliPoint<Real>& m) {
  PicardLabel label;
  label.l = hilbert_dim(m);
  label.lambda_coordinate = "w = (" + format_real(static_cast<double>(m.beta())) +
                            "*q + " + format_real(static_cast<double>(m.delta())) +
                            ") + i*p";
  return label;
}

}  // namespace torusq
