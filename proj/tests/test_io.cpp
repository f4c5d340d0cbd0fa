#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "torusq/io.hpp"

using namespace torusq;

TEST_CASE("format_real emits shortest round-trip decimals") {
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(-1.0) == "-1");
  CHECK(format_real(0.1) == "0.1");

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double x = dist(rng);
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
  CHECK(std::strtod(format_real(pi).c_str(), nullptr) == pi);
}

TEST_CASE("moduli record round-trips through json") {
  const auto m = make_moduli(2.5, 0.7);
  const auto back = moduli_from_json(to_json(m));
  CHECK(back.beta() == m.beta());
  CHECK(back.delta() == m.delta());
  CHECK_FALSE(back.dim_override());

  const auto with_dim = make_moduli(1.0, 0.0, 8);
  const auto back2 = moduli_from_json(to_json(with_dim));
  CHECK(back2.dim_override() == std::optional<int>(8));

  // keys are the flat record {"beta", "delta", "dim"}
  const Json j = to_json(m);
  CHECK(j.contains("beta"));
  CHECK(j.contains("delta"));
  CHECK(j.at("dim").is_null());
}

TEST_CASE("complex matrices serialize as row-major (re, im) pairs") {
  MatrixCd a(2, 3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = {r + 0.5 * c, -1.0 * c};
  const Json j = to_json(a);
  REQUIRE(j.size() == 6);
  // row-major: entry (0, 1) is the second pair
  CHECK(j[1][0].get<double>() == 0.5);
  CHECK(j[1][1].get<double>() == -1.0);
  const MatrixCd back = matrix_from_json(j, 2, 3);
  CHECK((back - a).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(matrix_from_json(j, 2, 2), DimensionMismatch);
}

TEST_CASE("vacuum report round-trips through json") {
  const auto m = make_moduli(4.0, 0.3);
  const auto r = vacuum_report(m);
  const auto back = vacuum_from_json(to_json(m, r));
  CHECK(back.vacuum_energy == r.vacuum_energy);
  CHECK(back.gap == r.gap);
  CHECK(back.nondegenerate == r.nondegenerate);
  CHECK(back.localization_index == r.localization_index);
  CHECK((back.vacuum_vector - r.vacuum_vector).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.eigenvalues - r.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("duality certificate round-trips through json") {
  const auto cert =
      duality_certificate(make_moduli(1.0, 0.0, 4), make_moduli(1.0, 0.5, 4));
  const auto back = certificate_from_json(to_json(cert));
  CHECK(back.classically_canonical == cert.classically_canonical);
  CHECK(back.spectra_equal == cert.spectra_equal);
  CHECK(back.is_duality == cert.is_duality);
  CHECK(back.first.beta() == cert.first.beta());
  CHECK(back.second.delta() == cert.second.delta());
}

TEST_CASE("scan csv layout") {
  const auto report = moduli_scan(1.0, {0.0, 1.0, 2.0}, 3);
  const std::string csv = scan_to_csv(report);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# columns:", 0) == 0);
  std::getline(in, line);
  CHECK(line == "beta,delta,n,E0,gap,E_1,E_2,E_3");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);

  // identical input produces identical bytes
  CHECK(scan_to_csv(moduli_scan(1.0, {0.0, 1.0, 2.0}, 3)) == csv);
}

TEST_CASE("trajectory csv layout") {
  const auto traj = flow(ClassicalStated(0.2, 0.0), make_moduli(1.0, 0.0), 0.01, 0.005);
  const std::string csv = trajectory_to_csv(traj);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,q,p,H");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("json documents are deterministic") {
  const auto m = make_moduli(3.5, 1.25);
  const auto r = vacuum_report(m);
  CHECK(to_json(m, r).dump(2) == to_json(m, r).dump(2));
}
