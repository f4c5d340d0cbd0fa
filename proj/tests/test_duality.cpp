#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "torusq/duality.hpp"

using namespace torusq;

namespace {

// integer-beta family: constant potential, spectrum -cos(delta) - sin(2 pi k / n)
VectorRd fourier_spectrum(int n, double delta) {
  VectorRd e(n);
  for (int k = 0; k < n; ++k) e[k] = -std::cos(delta) - std::sin(2 * pi * k / n);
  std::sort(e.data(), e.data() + n);
  return e;
}

}  // namespace

TEST_CASE("moduli scan: scalar family and rigid shifts") {
  const auto scalar = moduli_scan(1.0, {0.0, pi / 2, pi}, 1);
  REQUIRE(scalar.rows.size() == 3);
  CHECK(scalar.rows[0].vacuum_energy == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(scalar.rows[1].vacuum_energy == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(scalar.rows[2].vacuum_energy == doctest::Approx(1.0).epsilon(1e-14));

  const auto four = moduli_scan(4.0, {0.0, pi / 2});
  REQUIRE(four.rows.size() == 2);
  const double want0[] = {-2.0, -1.0, -1.0, 0.0};
  const double want1[] = {-1.0, 0.0, 0.0, 1.0};
  for (int k = 0; k < 4; ++k) {
    CHECK(four.rows[0].eigenvalues[k] == doctest::Approx(want0[k]).epsilon(1e-12));
    CHECK(four.rows[1].eigenvalues[k] == doctest::Approx(want1[k]).epsilon(1e-12));
  }
  CHECK(four.rows[0].n == 4);
  CHECK(four.rows[0].gap == doctest::Approx(1.0).epsilon(1e-12));

  // periodicity: delta and delta + 2 pi give identical rows
  const auto wrapped = moduli_scan(4.0, {0.7, 0.7 + 2 * pi});
  CHECK((wrapped.rows[0].eigenvalues - wrapped.rows[1].eigenvalues).cwiseAbs().maxCoeff() <=
        1e-12);
  CHECK(wrapped.rows[0].delta == doctest::Approx(wrapped.rows[1].delta).epsilon(1e-12));

  CHECK_THROWS_AS(moduli_scan(4.0, {}), DomainError);
  CHECK_THROWS_AS(moduli_scan(0.5, {0.0}), DomainError);
}

TEST_CASE("integer-beta spectra match the Fourier oracle") {
  for (int n = 2; n <= 12; ++n)
    for (double delta : {0.0, 0.7, pi}) {
      const auto s = eigh(build_hamiltonian(make_moduli(double(n), delta)));
      CHECK((s.eigenvalues - fourier_spectrum(n, delta)).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("spectrum is invariant under delta -> -delta") {
  for (int n : {3, 5, 8})
    for (double delta : {0.3, 1.1, 2.9}) {
      const auto a = eigh(build_hamiltonian(make_moduli(1.0, delta, n)));
      const auto b = eigh(build_hamiltonian(make_moduli(1.0, 2 * pi - delta, n)));
      CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("duality certificates") {
  const auto m1 = make_moduli(1.0, 0.0, 1);
  const auto m2 = make_moduli(1.0, pi / 2, 1);
  const auto cert = duality_certificate(m1, m2);
  CHECK(cert.classically_canonical);
  CHECK_FALSE(cert.spectra_equal);
  CHECK(cert.is_duality);

  const auto self_cert = duality_certificate(m1, m1);
  CHECK(self_cert.classically_canonical);
  CHECK(self_cert.spectra_equal);
  CHECK_FALSE(self_cert.is_duality);

  // same point after delta reduction
  const auto wrap_cert = duality_certificate(make_moduli(4.0, 0.0), make_moduli(4.0, 2 * pi));
  CHECK(wrap_cert.classically_canonical);
  CHECK(wrap_cert.spectra_equal);
  CHECK_FALSE(wrap_cert.is_duality);

  // different beta: not canonical, spectra differ
  const auto off = duality_certificate(make_moduli(1.0, 0.0, 2), make_moduli(2.0, 0.0));
  CHECK_FALSE(off.classically_canonical);
  CHECK_FALSE(off.is_duality);

  // invariant: is_duality = canonical && !spectra_equal on a small grid
  for (double d1 : {0.0, 0.5, 2.2})
    for (double d2 : {0.0, 1.0, 3.0}) {
      const auto c = duality_certificate(make_moduli(1.0, d1, 3), make_moduli(1.0, d2, 3));
      CHECK(c.is_duality == (c.classically_canonical && !c.spectra_equal));
    }
}

TEST_CASE("classical equivalence check") {
  const ClassicalStated s0(0.5, 0.2);
  CHECK(classical_equivalence_check(make_moduli(1.0, 0.0, 1), make_moduli(1.0, 1.0, 1), s0,
                                    10.0, 1e-3));
  CHECK(classical_equivalence_check(make_moduli(1.0, 0.7, 4), make_moduli(1.0, 0.7, 4), s0,
                                    5.0, 1e-3));
  CHECK_THROWS_AS(classical_equivalence_check(make_moduli(2.0, 0.0), make_moduli(2.0, 1.0),
                                              s0, 1.0, 1e-3),
                  DomainError);
}

TEST_CASE("duality end to end: same classical flow, different spectra") {
  for (double d1 : {0.0, 0.5})
    for (double d2 : {1.0, 2.5}) {
      const auto m1 = make_moduli(1.0, d1, 1);
      const auto m2 = make_moduli(1.0, d2, 1);
      CHECK(classical_equivalence_check(m1, m2, ClassicalStated(0.3, 0.1), 5.0, 1e-3));
      const auto cert = duality_certificate(m1, m2);
      CHECK(cert.is_duality);
    }
}
