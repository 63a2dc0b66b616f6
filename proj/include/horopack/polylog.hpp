#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

// Dilogarithm / trilogarithm on the closed unit disk and the order-3
// Lobachevsky function. On the unit circle the real/imaginary parts split
// into Bernoulli polynomials and Clausen-type series; inside the disk the
// defining series converges directly.
namespace horopack {

inline constexpr double kZeta3 = 1.2020569031595942854;  // zeta(3)

/// zeta(2n), cached. Small n in closed form, the rest by direct summation.
inline double zeta_even(int n) {
  static std::vector<double> cache;  // cache[n] = zeta(2n)
  const double pi = std::numbers::pi;
  if (n < 1) throw std::invalid_argument("zeta_even: n >= 1");
  if (static_cast<int>(cache.size()) > n && cache[n] != 0.0) return cache[n];
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1, 0.0);
  double v;
  if (n == 1) {
    v = pi * pi / 6.0;
  } else if (n == 2) {
    v = std::pow(pi, 4) / 90.0;
  } else if (n == 3) {
    v = std::pow(pi, 6) / 945.0;
  } else {
    v = 0.0;
    for (int k = 400; k >= 1; --k) v += std::pow(k, -2.0 * n);
  }
  cache[n] = v;
  return v;
}

namespace detail {

// Reduce to [0, 2*pi).
inline double reduce_angle(double theta) {
  const double tau = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, tau);
  if (t < 0) t += tau;
  return t;
}

}  // namespace detail

/// Clausen function Cl_2(theta) = sum sin(k theta)/k^2.
inline double clausen2(double theta) {
  const double pi = std::numbers::pi;
  double t = detail::reduce_angle(theta);
  double sign = 1.0;
  if (t > pi) {
    t = 2.0 * pi - t;
    sign = -1.0;
  }
  if (t == 0.0) return 0.0;
  // Cl2(t) = t - t log t + sum_{n>=1} zeta(2n) t^{2n+1} / (n (2n+1) (2pi)^{2n})
  double acc = t - t * std::log(t);
  const double r = t / (2.0 * pi);
  double pw = r * r;  // (t/2pi)^{2n}
  for (int n = 1; n < 80; ++n) {
    const double term = zeta_even(n) * pw * t / (n * (2.0 * n + 1.0));
    acc += term;
    if (term < 1e-18 * std::abs(acc)) break;
    pw *= r * r;
  }
  return sign * acc;
}

/// Glaisher-type sum Cl_3(theta) = sum cos(k theta)/k^3.
inline double clausen3(double theta) {
  const double pi = std::numbers::pi;
  double t = detail::reduce_angle(theta);
  if (t > pi) t = 2.0 * pi - t;  // even
  if (t == 0.0) return kZeta3;
  // Cl3(t) = zeta(3) + t^2/2 log t - 3/4 t^2
  //          - sum_{n>=1} zeta(2n) t^{2n+2} / (n (2n+1) (2n+2) (2pi)^{2n})
  double acc = kZeta3 + 0.5 * t * t * std::log(t) - 0.75 * t * t;
  const double r = t / (2.0 * pi);
  double pw = r * r;
  for (int n = 1; n < 80; ++n) {
    const double term =
        zeta_even(n) * pw * t * t / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0));
    acc -= term;
    if (term < 1e-18 * std::abs(acc)) break;
    pw *= r * r;
  }
  return acc;
}

namespace detail {

// Direct series sum z^k / k^s for |z| < 1, tail bounded through the ratio.
inline std::complex<double> polylog_series(std::complex<double> z, int s) {
  const double az = std::abs(z);
  std::complex<double> acc = 0.0, zk = 1.0;
  for (int k = 1; k < 2000000; ++k) {
    zk *= z;
    acc += zk / std::pow(static_cast<double>(k), s);
    const double tail =
        std::pow(az, k + 1) / ((1.0 - az) * std::pow(k + 1.0, s));
    if (tail < 1e-17) break;
  }
  return acc;
}

}  // namespace detail

/// Li_2 on |z| <= 1. Unit-circle values use the closed real part
/// pi^2/6 - pi t/2 + t^2/4 and Cl_2 for the imaginary part.
inline std::complex<double> dilog(std::complex<double> z) {
  const double pi = std::numbers::pi;
  const double az = std::abs(z);
  if (az > 1.0 + 1e-12) throw std::domain_error("dilog: |z| > 1");
  if (az > 1.0 - 1e-9) {
    const double t = detail::reduce_angle(std::arg(z));
    const double re = pi * pi / 6.0 - pi * t / 2.0 + t * t / 4.0;
    return {re, clausen2(t)};
  }
  return detail::polylog_series(z, 2);
}

/// Li_3 on |z| <= 1. Unit-circle values use Cl_3 for the real part and the
/// closed imaginary part pi^2 t/6 - pi t^2/4 + t^3/12.
inline std::complex<double> trilog(std::complex<double> z) {
  const double pi = std::numbers::pi;
  const double az = std::abs(z);
  if (az > 1.0 + 1e-12) throw std::domain_error("trilog: |z| > 1");
  if (az > 1.0 - 1e-9) {
    const double t = detail::reduce_angle(std::arg(z));
    const double im = pi * pi * t / 6.0 - pi * t * t / 4.0 + t * t * t / 12.0;
    return {clausen3(t), im};
  }
  return detail::polylog_series(z, 3);
}

/// Lobachevsky function of order 3: J_3(a) = Re(Li_3(e^{2ia})) / 4.
/// Even and pi-periodic.
inline double lobachevsky3(double alpha) { return 0.25 * clausen3(2.0 * alpha); }

}  // namespace horopack
