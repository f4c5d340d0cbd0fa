#pragma once

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace torusq {

template <class Real = double>
using Complex = std::complex<Real>;

template <class Real = double>
using MatrixC = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real = double>
using VectorC = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <class Real = double>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using MatrixCd = MatrixC<double>;
using VectorCd = VectorC<double>;
using VectorRd = VectorR<double>;

template <class Real>
inline constexpr Real pi_v = std::numbers::pi_v<Real>;

inline constexpr double pi = std::numbers::pi;

/// Wraps an angle into the fundamental interval (-pi, pi].
template <class Real>
Real wrap_angle(Real x) {
  const Real two_pi = Real(2) * pi_v<Real>;
  Real w = x - two_pi * std::ceil((x - pi_v<Real>) / two_pi);
  if (w <= -pi_v<Real>) w += two_pi;
  if (w > pi_v<Real>) w -= two_pi;
  return w;
}

/// Reduces an angle into [0, 2*pi).
template <class Real>
Real reduce_angle(Real x) {
  const Real two_pi = Real(2) * pi_v<Real>;
  Real r = std::fmod(x, two_pi);
  if (r < Real(0)) r += two_pi;
  if (r >= two_pi) r = Real(0);
  return r;
}

/// Shortest decimal string that round-trips the given double.
inline std::string format_real(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace torusq
