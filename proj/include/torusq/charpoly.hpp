#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "torusq/errors.hpp"
#include "torusq/moduli.hpp"
#include "torusq/operators.hpp"
#include "torusq/polynomial.hpp"

namespace torusq {

/// The contiguous cyclic index runs: for p < n the n runs
/// (j, j+1, ..., j+p-1) mod n, for p = n the single tuple (0, 1, ..., n-1).
/// Indices are 0-based.
struct CyclicTupleSet {
  int n = 0;
  int p = 0;
  std::vector<std::vector<int>> tuples;
};

inline CyclicTupleSet cyclic_tuples(int n, int p) {
  if (p < 1 || p > n) throw DomainError("cyclic tuples require 1 <= p <= n");
  CyclicTupleSet set{n, p, {}};
  if (p == n) {
    std::vector<int> full(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) full[static_cast<std::size_t>(j)] = j;
    set.tuples.push_back(std::move(full));
    return set;
  }
  set.tuples.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> run(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) run[static_cast<std::size_t>(k)] = (j + k) % n;
    set.tuples.push_back(std::move(run));
  }
  return set;
}

namespace detail {

// Laplace expansion of the cyclic tridiagonal determinant: a subset S of
// diagonal indices contributes iff its complement on the cycle splits into
// arcs of even length (each arc then has exactly one tiling by adjacent
// transpositions, worth (i/2)^2 = -1/4 apiece). Enumerated as monomer-dimer
// configurations of the cycle: monomers form S, dimers cover the complement.
// For n <= 5 these are exactly the contiguous runs above; from n = 6 on,
// non-contiguous subsets appear (first the antipodal pairs at p = 2).
inline void linear_tuple_walk(int from, int to, std::vector<int>& monomers,
                              std::vector<std::vector<int>>& out) {
  if (from > to) {
    if (!monomers.empty()) out.push_back(monomers);
    return;
  }
  monomers.push_back(from);
  linear_tuple_walk(from + 1, to, monomers, out);
  monomers.pop_back();
  if (from + 1 <= to) linear_tuple_walk(from + 2, to, monomers, out);
}

}  // namespace detail

/// Every nonempty index subset entering det(E*1 - H), all sizes at once.
/// Subset sizes share n's parity; the empty (all-dimer) configurations are
/// omitted because they cancel exactly against the two around-the-loop
/// permutation terms.
inline std::vector<std::vector<int>> charpoly_tuples(int n) {
  if (n < 1) throw DomainError("charpoly tuples require n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> monomers;
  // site 0 not covered by the wrap-around dimer (n-1, 0)
  detail::linear_tuple_walk(0, n - 1, monomers, out);
  // wrap-around dimer present: sites 1 .. n-2 remain
  if (n >= 2) detail::linear_tuple_walk(1, n - 2, monomers, out);
  return out;
}

/// Closed form of det(E*1 - H) for the torus Hamiltonian:
///   sum over p (matching n's parity, up to n) of (i/2)^{n-p} times the sum
///   over admissible p-tuples of prod_k (cos(beta q_{l_k} + delta) + E).
/// n - p is even, so (i/2)^{n-p} = (-1)^{(n-p)/2} / 2^{n-p} and every
/// coefficient is real. Per-p sums are accumulated before scaling.
template <class Real>
Polynomial<Real> charpoly_closed(const ModuliPoint<Real>& m) {
  const int n = hilbert_dim(m);
  const PositionGrid<Real> grid = position_grid<Real>(n);
  std::vector<Real> cos_theta(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    cos_theta[static_cast<std::size_t>(j)] =
        std::cos(m.beta() * grid.points[j] + m.delta());

  // per-p accumulators, index = p
  std::vector<std::vector<Real>> sums(static_cast<std::size_t>(n) + 1);
  std::vector<Real> factor_prod;
  for (const auto& tuple : charpoly_tuples(n)) {
    // prod_k (E + cos theta_{l_k}), built by convolving linear factors
    factor_prod.assign(1, Real(1));
    for (int idx : tuple) {
      const Real c = cos_theta[static_cast<std::size_t>(idx)];
      factor_prod.push_back(Real(0));
      for (std::size_t d = factor_prod.size() - 1; d > 0; --d)
        factor_prod[d] = factor_prod[d - 1] + c * factor_prod[d];
      factor_prod[0] *= c;
    }
    auto& sum = sums[tuple.size()];
    if (sum.empty()) sum.assign(tuple.size() + 1, Real(0));
    for (std::size_t d = 0; d < factor_prod.size(); ++d) sum[d] += factor_prod[d];
  }

  std::vector<Real> result(static_cast<std::size_t>(n) + 1, Real(0));
  for (int p = (n % 2 == 0) ? 2 : 1; p <= n; p += 2) {
    const auto& sum = sums[static_cast<std::size_t>(p)];
    if (sum.empty()) continue;
    const Real sign = ((n - p) / 2) % 2 == 0 ? Real(1) : Real(-1);
    const Real scale = std::ldexp(sign, -(n - p));
    for (std::size_t d = 0; d < sum.size(); ++d) result[d] += scale * sum[d];
  }
  return Polynomial<Real>(std::move(result));
}

/// Coefficientwise comparison of the closed form against the
/// Faddeev-LeVerrier oracle. A failure is data, not an error.
struct VerificationReport {
  double max_coeff_diff = 0;
  bool pass = false;
};

template <class Real>
VerificationReport verify_charpoly(const ModuliPoint<Real>& m) {
  const Polynomial<Real> closed = charpoly_closed(m);
  const Polynomial<Real> oracle = charpoly_oracle(build_hamiltonian(m));
  const Real diff = max_coefficient_difference(closed, oracle);
  const Real scale = std::max(Real(1), std::max(max_abs_coefficient(closed),
                                                max_abs_coefficient(oracle)));
  VerificationReport report;
  report.max_coeff_diff = static_cast<double>(diff);
  report.pass = diff <= Real(1e-8) * scale;
  return report;
}

}  // namespace torusq
