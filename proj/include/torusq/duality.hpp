#pragma once

#include <cmath>
#include <vector>

#include "torusq/classical.hpp"
#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/operators.hpp"
#include "torusq/spectral.hpp"

namespace torusq {

template <class Real = double>
struct ScanRow {
  Real beta = 0;
  Real delta = 0;  // reduced to [0, 2*pi)
  int n = 0;
  VectorR<Real> eigenvalues;
  Real vacuum_energy = 0;
  Real gap = 0;
};

template <class Real = double>
struct ScanReport {
  std::vector<ScanRow<Real>> rows;
};

using ScanRowd = ScanRow<double>;
using ScanReportd = ScanReport<double>;

/// One spectrum per delta, rows in grid order.
template <class Real>
ScanReport<Real> moduli_scan(Real beta, const std::vector<Real>& deltas,
                             std::optional<int> dim_override = std::nullopt) {
  if (deltas.empty()) throw DomainError("moduli scan needs a nonempty delta grid");
  ScanReport<Real> report;
  report.rows.reserve(deltas.size());
  for (Real delta : deltas) {
    try {
      const ModuliPoint<Real> m(beta, delta, dim_override);
      const Spectrum<Real> s = eigh(build_hamiltonian(m));
      report.rows.push_back({m.beta(), m.delta(), hilbert_dim(m), s.eigenvalues,
                             s.ground_energy(), s.gap()});
    } catch (const DomainError& e) {
      throw DomainError("scan aborted at delta = " +
                        format_real(static_cast<double>(delta)) + ": " + e.what());
    }
  }
  return report;
}

/// Verdict on a pair of moduli points: classically equivalent (same
/// symplectic form and Hilbert dimension, i.e. a delta-shift of each other)
/// while quantum-mechanically distinguishable by the spectrum.
template <class Real = double>
struct DualityCertificate {
  ModuliPoint<Real> first;
  ModuliPoint<Real> second;
  bool classically_canonical = false;
  bool spectra_equal = false;
  bool is_duality = false;  // classically_canonical && !spectra_equal
};

using DualityCertificated = DualityCertificate<double>;

template <class Real>
DualityCertificate<Real> duality_certificate(const ModuliPoint<Real>& m1,
                                             const ModuliPoint<Real>& m2) {
  DualityCertificate<Real> cert{m1, m2, false, false, false};
  cert.classically_canonical =
      m1.beta() == m2.beta() && hilbert_dim(m1) == hilbert_dim(m2);
  if (hilbert_dim(m1) == hilbert_dim(m2)) {
    const VectorR<Real> e1 = eigh(build_hamiltonian(m1)).eigenvalues;
    const VectorR<Real> e2 = eigh(build_hamiltonian(m2)).eigenvalues;
    cert.spectra_equal = (e1 - e2).cwiseAbs().maxCoeff() <= Real(1e-9);
  }
  cert.is_duality = cert.classically_canonical && !cert.spectra_equal;
  return cert;
}

/// Operational classical equivalence at beta = 1: the delta_2 trajectory
/// started from the q-shifted initial state must equal the delta_1
/// trajectory shifted by delta_1 - delta_2, pointwise on the shared grid.
template <class Real>
bool classical_equivalence_check(const ModuliPoint<Real>& m1, const ModuliPoint<Real>& m2,
                                 const ClassicalState<Real>& s0, Real total_time, Real dt,
                                 Real tol = Real(1e-8)) {
  if (m1.beta() != Real(1) || m2.beta() != Real(1))
    throw DomainError("classical equivalence check requires beta = 1 on both sides");
  const Real shift = m1.delta() - m2.delta();
  const Trajectory<Real> t1 = flow(s0, m1, total_time, dt);
  const Trajectory<Real> t2 =
      flow(ClassicalState<Real>(s0.q + shift, s0.p), m2, total_time, dt);
  for (std::size_t i = 0; i < t1.samples.size(); ++i) {
    const Real dq = wrap_angle(t2.samples[i].q - t1.samples[i].q - shift);
    const Real dp = wrap_angle(t2.samples[i].p - t1.samples[i].p);
    if (std::abs(dq) > tol || std::abs(dp) > tol) return false;
  }
  return true;
}

}  // namespace torusq
