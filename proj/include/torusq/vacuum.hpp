#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "torusq/charpoly.hpp"
#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/operators.hpp"
#include "torusq/polynomial.hpp"
#include "torusq/spectral.hpp"

namespace torusq {

/// Ground-state analysis of the torus Hamiltonian.
template <class Real = double>
struct VacuumReport {
  Real vacuum_energy = 0;
  Real gap = 0;  // E_1 - E_0; 0 when n = 1 (no excited state)
  bool nondegenerate = false;
  VectorC<Real> vacuum_vector;
  int localization_index = 0;  // argmax_j |c_j|, 0-based grid site
  VectorR<Real> eigenvalues;
};

using VacuumReportd = VacuumReport<double>;

/// Nondegeneracy threshold shared by vacuum_report and degeneracy_pairing.
template <class Real>
Real degeneracy_tolerance(const Spectrum<Real>& s) {
  return Real(1e-9) * std::max(Real(1), s.range());
}

template <class Real>
VacuumReport<Real> vacuum_report(const ModuliPoint<Real>& m) {
  const Spectrum<Real> s = eigh(build_hamiltonian(m));
  VacuumReport<Real> report;
  report.vacuum_energy = s.ground_energy();
  report.gap = s.gap();
  report.nondegenerate = s.size() == 1 || report.gap > degeneracy_tolerance(s);
  report.vacuum_vector = s.eigenvectors.col(0);
  report.eigenvalues = s.eigenvalues;
  report.localization_index = 0;
  Real best = std::abs(report.vacuum_vector[0]);
  for (int j = 1; j < s.size(); ++j) {
    const Real mag = std::abs(report.vacuum_vector[j]);
    if (mag > best) {
      best = mag;
      report.localization_index = j;
    }
  }
  return report;
}

/// The Hamiltonian with its basis rearranged to |q_{n-1}>, |q_0>, ..., |q_{n-2}>
/// (0-based sites), which moves every matrix element touching the potential
/// minimum |q_0> into the upper-left 3x3 block.
template <class Real>
MatrixC<Real> reordered_hamiltonian(const ModuliPoint<Real>& m) {
  const MatrixC<Real> h = build_hamiltonian(m);
  const int n = static_cast<int>(h.rows());
  std::vector<int> order(static_cast<std::size_t>(n));
  order[0] = n - 1;
  for (int a = 1; a < n; ++a) order[static_cast<std::size_t>(a)] = a - 1;
  MatrixC<Real> out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out(a, b) = h(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
  return out;
}

/// The 3x3 corner block around the potential minimum, with theta_j = beta q_j + delta:
///   [ -cos theta_{n-1}   -i/2              0            ]
///   [ i/2                -cos theta_0      -i/2         ]
///   [ 0                  i/2               -cos theta_1 ]
template <class Real>
MatrixC<Real> corner_submatrix(const ModuliPoint<Real>& m) {
  const int n = hilbert_dim(m);
  if (n < 4) throw DomainError("corner submatrix requires dimension >= 4");
  const PositionGrid<Real> grid = position_grid<Real>(n);
  const auto cos_theta = [&](int j) {
    return std::cos(m.beta() * grid.points[j] + m.delta());
  };
  const Complex<Real> half_i(Real(0), Real(0.5));
  MatrixC<Real> c = MatrixC<Real>::Zero(3, 3);
  c(0, 0) = -cos_theta(n - 1);
  c(1, 1) = -cos_theta(0);
  c(2, 2) = -cos_theta(1);
  c(0, 1) = -half_i;
  c(1, 0) = half_i;
  c(1, 2) = -half_i;
  c(2, 1) = half_i;
  return c;
}

/// How far s_n(E) is from the product s_3(E) * s_{n-3}(E) of the corner
/// block and its complement, once the two coupling boxes B, B^+ (four
/// entries of modulus 1/2) are what remains between them.
template <class Real = double>
struct FactorizationReport {
  Real defect = 0;          // normalized max coefficient difference
  Real corner_energy = 0;   // ground energy of the 3x3 corner block
  Real corner_vs_full = 0;  // |corner_energy - E_0 of the full Hamiltonian|
};

using FactorizationReportd = FactorizationReport<double>;

template <class Real>
FactorizationReport<Real> factorization_defect(const ModuliPoint<Real>& m) {
  const int n = hilbert_dim(m);
  if (n < 7) throw DomainError("factorization study requires dimension >= 7");
  const MatrixC<Real> reordered = reordered_hamiltonian(m);
  const MatrixC<Real> corner = corner_submatrix(m);
  const Polynomial<Real> s3 = charpoly_oracle(corner);
  const Polynomial<Real> rest =
      charpoly_oracle(MatrixC<Real>(reordered.bottomRightCorner(n - 3, n - 3)));
  const Polynomial<Real> full = charpoly_oracle(reordered);
  const Polynomial<Real> product = poly_mul(s3, rest);

  FactorizationReport<Real> report;
  report.defect = max_coefficient_difference(full, product) /
                  std::max(Real(1), max_abs_coefficient(full));
  report.corner_energy = eigh(corner).ground_energy();
  report.corner_vs_full = std::abs(report.corner_energy - eigh(reordered).ground_energy());
  return report;
}

/// Degenerate energy clusters. With the kinetic term off the Hamiltonian is
/// diagonal and indices are grid sites, so the clusters realize the parity
/// pairing (site j with site n-j); with it on, indices are spectral ranks.
template <class Real = double>
struct PairingReport {
  bool kinetic_off = true;
  std::vector<Real> energies;            // per index, see above
  std::vector<std::vector<int>> clusters;  // index groups of equal energy
};

using PairingReportd = PairingReport<double>;

template <class Real>
std::vector<std::pair<int, int>> degenerate_pairs(const PairingReport<Real>& r) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : r.clusters)
    if (c.size() == 2) pairs.emplace_back(c[0], c[1]);
  return pairs;
}

template <class Real>
std::vector<int> unpaired_states(const PairingReport<Real>& r) {
  std::vector<int> singles;
  for (const auto& c : r.clusters)
    if (c.size() == 1) singles.push_back(c[0]);
  return singles;
}

namespace detail {
template <class Real>
std::vector<std::vector<int>> cluster_by_value(const std::vector<Real>& values, Real tol) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] < values[b]; });
  std::vector<std::vector<int>> clusters;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || std::abs(values[idx[k]] - values[idx[k - 1]]) > tol)
      clusters.emplace_back();
    clusters.back().push_back(idx[k]);
  }
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  return clusters;
}
}  // namespace detail

template <class Real>
PairingReport<Real> degeneracy_pairing(const ModuliPoint<Real>& m, bool kinetic_off) {
  if (m.delta() != Real(0))
    throw DomainError("degeneracy pairing requires delta = 0");
  PairingReport<Real> report;
  report.kinetic_off = kinetic_off;
  if (kinetic_off) {
    const int n = hilbert_dim(m);
    const PositionGrid<Real> grid = position_grid<Real>(n);
    report.energies.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      report.energies[static_cast<std::size_t>(j)] = -std::cos(m.beta() * grid.points[j]);
    report.clusters = detail::cluster_by_value(report.energies, Real(1e-12));
  } else {
    const Spectrum<Real> s = eigh(build_hamiltonian(m));
    report.energies.assign(s.eigenvalues.data(), s.eigenvalues.data() + s.size());
    report.clusters = detail::cluster_by_value(report.energies, degeneracy_tolerance(s));
  }
  return report;
}

}  // namespace torusq
