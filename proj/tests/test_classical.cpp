#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "torusq/classical.hpp"

using namespace torusq;

TEST_CASE("hamiltonian value and state wrapping") {
  const auto m = make_moduli(1.0, 0.0);
  CHECK(hamiltonian_value(ClassicalStated(0.0, 0.0), m) == -2.0);
  CHECK(hamiltonian_value(ClassicalStated(pi, pi), m) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(hamiltonian_value(ClassicalStated(0.1, 0.0), m) ==
        doctest::Approx(-1 - std::cos(0.1)).epsilon(1e-14));

  const ClassicalStated s(2 * pi + 0.3, -3 * pi);
  CHECK(s.q == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(s.p == doctest::Approx(pi).epsilon(1e-12));
  CHECK(s.p > -pi);
  CHECK(s.p <= pi);
}

TEST_CASE("flow: fixed point stays put exactly") {
  const auto traj = flow(ClassicalStated(0.0, 0.0), make_moduli(1.0, 0.0), 1.0, 1e-3);
  CHECK(traj.samples.size() == 1001);
  for (const auto& s : traj.samples) {
    CHECK(s.q == 0.0);
    CHECK(s.p == 0.0);
    CHECK(s.energy == -2.0);
  }
}

TEST_CASE("flow: argument checking and sample bookkeeping") {
  const auto m = make_moduli(1.0, 0.0);
  CHECK_THROWS_AS(flow(ClassicalStated(0.1, 0.0), m, -1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(flow(ClassicalStated(0.1, 0.0), m, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(flow(ClassicalStated(0.1, 0.0), m, 1.0, 2.0), DomainError);

  const auto traj = flow(ClassicalStated(0.3, 0.4), m, 2.0, 0.25);
  CHECK(traj.method == "stormer-verlet");
  CHECK(traj.dt == 0.25);
  REQUIRE(traj.samples.size() == 9);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].t > traj.samples[i - 1].t);
    // energy column is recomputed from the state
    const ClassicalStated s(traj.samples[i].q, traj.samples[i].p);
    CHECK(traj.samples[i].energy == doctest::Approx(hamiltonian_value(s, m)).epsilon(1e-15));
  }
}

TEST_CASE("flow: small oscillations have period 2 pi within 0.1%") {
  const auto traj = flow(ClassicalStated(0.01, 0.0), make_moduli(1.0, 0.0), 14.0, 1e-3);
  // downward zero crossings of q, linearly interpolated
  std::vector<double> crossings;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const auto& a = traj.samples[i - 1];
    const auto& b = traj.samples[i];
    if (a.q > 0.0 && b.q <= 0.0)
      crossings.push_back(a.t + (b.t - a.t) * a.q / (a.q - b.q));
  }
  REQUIRE(crossings.size() >= 2);
  const double period = crossings[1] - crossings[0];
  CHECK(std::abs(period - 2 * pi) <= 0.001 * 2 * pi);
}

TEST_CASE("flow: bounded energy error and time reversibility") {
  const auto m = make_moduli(1.0, 0.0);
  const auto traj = flow(ClassicalStated(1.0, 0.0), m, 20.0, 1e-3);
  const double e0 = traj.samples.front().energy;
  double drift = 0;
  for (const auto& s : traj.samples) drift = std::max(drift, std::abs(s.energy - e0));
  CHECK(drift <= 1e-5);

  // reverse the momentum and flow back: the kinetic term is even in p
  const auto fwd = flow(ClassicalStated(0.7, 0.3), m, 10.0, 1e-3);
  const auto& end = fwd.samples.back();
  const auto back = flow(ClassicalStated(end.q, -end.p), m, 10.0, 1e-3);
  CHECK(std::abs(back.samples.back().q - 0.7) <= 1e-8);
  CHECK(std::abs(-back.samples.back().p - 0.3) <= 1e-8);
}

TEST_CASE("flow: delta shift covariance at beta = 1") {
  const double delta = 1.0;
  const auto shifted = flow(ClassicalStated(0.5, 0.2), make_moduli(1.0, delta), 10.0, 1e-3);
  const auto base = flow(ClassicalStated(0.5 + delta, 0.2), make_moduli(1.0, 0.0), 10.0, 1e-3);
  double worst = 0;
  for (std::size_t i = 0; i < shifted.samples.size(); ++i) {
    worst = std::max(worst, std::abs(wrap_angle(base.samples[i].q -
                                                shifted.samples[i].q - delta)));
    worst = std::max(worst, std::abs(base.samples[i].p - shifted.samples[i].p));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("kinetic expansion converges to -cos p") {
  CHECK(kinetic_expansion(0.0, 0) == -1.0);
  CHECK(kinetic_expansion(0.0, 7) == -1.0);
  CHECK(kinetic_expansion(1.0, 5) == doctest::Approx(-std::cos(1.0)).epsilon(1e-8));
  CHECK(kinetic_expansion(0.4, 0) == doctest::Approx(0.4 * 0.4 / 2 - 1).epsilon(1e-15));
  CHECK_THROWS_AS(kinetic_expansion(1.0, -1), DomainError);

  // alternating-series envelope: error shrinks monotonically for |p| <= pi
  for (double p : {0.5, 1.5, pi}) {
    double prev = std::abs(kinetic_expansion(p, 0) + std::cos(p));
    for (int terms = 1; terms <= 12; ++terms) {
      const double err = std::abs(kinetic_expansion(p, terms) + std::cos(p));
      CHECK(err <= prev + 1e-18);
      prev = err;
    }
    CHECK(prev <= 1e-10);
  }
}

TEST_CASE("limit energies: torus, sine-Gordon, harmonic") {
  const auto e0 = limit_energies(ClassicalStated(0.0, 0.0));
  CHECK(e0.full == -2.0);
  CHECK(e0.sine_gordon == -1.0);
  CHECK(e0.harmonic == 0.0);

  const auto eq = limit_energies(ClassicalStated(0.1, 0.0));
  CHECK(eq.full + 2 == doctest::Approx(0.0049958347).epsilon(1e-7));
  CHECK(eq.sine_gordon + 1 == doctest::Approx(eq.full + 2).epsilon(1e-14));
  CHECK(eq.harmonic == doctest::Approx(0.005).epsilon(1e-15));
  const double spread =
      std::max({std::abs(eq.full + 2 - eq.sine_gordon - 1),
                std::abs(eq.full + 2 - eq.harmonic), std::abs(eq.sine_gordon + 1 - eq.harmonic)});
  CHECK(spread == doctest::Approx(4.1653e-6).epsilon(1e-2));

  const auto ep = limit_energies(ClassicalStated(0.0, 0.1));
  CHECK(ep.full + 2 == doctest::Approx(0.0049958347).epsilon(1e-7));
  CHECK(ep.sine_gordon + 1 == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(ep.harmonic == doctest::Approx(0.005).epsilon(1e-15));
}
