#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/types.hpp"

namespace torusq {

/// Phase-space point on the torus; both coordinates live on (-pi, pi].
template <class Real = double>
struct ClassicalState {
  Real q = 0;
  Real p = 0;

  ClassicalState() = default;
  ClassicalState(Real q_in, Real p_in) : q(wrap_angle(q_in)), p(wrap_angle(p_in)) {}
};

using ClassicalStated = ClassicalState<double>;

/// H(q, p) = -cos p - cos(beta q + delta).
template <class Real>
Real hamiltonian_value(const ClassicalState<Real>& s, const ModuliPoint<Real>& m) {
  return -std::cos(s.p) - std::cos(m.beta() * s.q + m.delta());
}

template <class Real = double>
struct TrajectorySample {
  Real t = 0;
  Real q = 0;
  Real p = 0;
  Real energy = 0;  // recomputed from (q, p), never integrated
};

template <class Real = double>
struct Trajectory {
  std::vector<TrajectorySample<Real>> samples;
  Real dt = 0;
  std::string method;
};

using Trajectoryd = Trajectory<double>;

/// Stoermer-Verlet (kick-drift-kick) on the separable splitting
/// T(p) = -cos p, V(q) = -cos(beta q + delta):
///   q' = sin p,  p' = -beta sin(beta q + delta).
/// Symplectic and time-reversible; coordinates are wrapped every step.
template <class Real>
Trajectory<Real> flow(const ClassicalState<Real>& s0, const ModuliPoint<Real>& m,
                      Real total_time, Real dt) {
  if (!(total_time > Real(0)) || !(dt > Real(0)) || dt > total_time)
    throw DomainError("flow requires 0 < dt <= T");
  const long steps = std::lround(total_time / dt);
  const Real beta = m.beta();
  const Real delta = m.delta();

  Trajectory<Real> traj;
  traj.dt = dt;
  traj.method = "stormer-verlet";
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);

  Real q = s0.q;
  Real p = s0.p;
  traj.samples.push_back({Real(0), q, p, hamiltonian_value(ClassicalState<Real>(q, p), m)});
  for (long i = 1; i <= steps; ++i) {
    const Real p_half = p - (dt / Real(2)) * beta * std::sin(beta * q + delta);
    q = wrap_angle(q + dt * std::sin(p_half));
    p = wrap_angle(p_half - (dt / Real(2)) * beta * std::sin(beta * q + delta));
    const Real t = Real(i) * dt;
    traj.samples.push_back({t, q, p, -std::cos(p) - std::cos(beta * q + delta)});
  }
  return traj;
}

/// Truncation of -cos p keeping the p^2/2 term plus `terms` entries of the
/// remainder series: p^2/2 - 1 - sum_{k=2}^{terms+1} (-1)^k p^{2k}/(2k)!.
/// terms = 0 is the sine-Gordon kinetic truncation; the value tends to
/// -cos p as terms grows.
template <class Real>
Real kinetic_expansion(Real p, int terms) {
  if (terms < 0) throw DomainError("kinetic expansion needs terms >= 0");
  Real value = p * p / Real(2) - Real(1);
  const Real p2 = p * p;
  Real term = p2 * p2 / Real(24);  // k = 2 entry, (-1)^2 p^4/4!
  for (int k = 2; k <= terms + 1; ++k) {
    value -= term;
    term *= -p2 / Real((2 * k + 1) * (2 * k + 2));
  }
  return value;
}

/// The full torus Hamiltonian at beta = 1, delta = 0 and its two limits:
/// the sine-Gordon (pendulum) truncation and the small-oscillation
/// harmonic oscillator. After offsets +2, +1, +0 they agree to O(q^4 + p^4).
template <class Real = double>
struct LimitEnergies {
  Real full = 0;         // -cos p - cos q
  Real sine_gordon = 0;  // p^2/2 - cos q
  Real harmonic = 0;     // (p^2 + q^2)/2
};

using LimitEnergiesd = LimitEnergies<double>;

template <class Real>
LimitEnergies<Real> limit_energies(const ClassicalState<Real>& s) {
  LimitEnergies<Real> e;
  e.full = -std::cos(s.p) - std::cos(s.q);
  e.sine_gordon = s.p * s.p / Real(2) - std::cos(s.q);
  e.harmonic = (s.p * s.p + s.q * s.q) / Real(2);
  return e;
}

}  // namespace torusq
