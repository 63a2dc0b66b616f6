#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "horopack/lorentz.hpp"

namespace horopack {

/// Residual of the horosphere equation in the standard frame (centre at
/// (1,0,...,0,1), parameter s): (s-1)(-x0^2 + sum x_i^2) - (1+s)(x0 - x_n)^2.
inline double horosphere_residual(const Vec& x, double s) {
  const int n = static_cast<int>(x.size()) - 1;
  const double q = linner(x, x);
  const double d = x[0] - x[n];
  return (s - 1.0) * q - (1.0 + s) * d * d;
}

/// Spherical-parameterization sample of the standard-frame horosphere with
/// parameter s: resolution^(n-1) model points (first coordinate 1), polar
/// angles on [0, pi], the last angle on [0, 2 pi).
inline Mat horosphere_mesh(int n, double s, int resolution) {
  if (n < 2) throw std::invalid_argument("horosphere_mesh: n >= 2");
  if (s <= -1.0 || s >= 1.0)
    throw std::invalid_argument("horosphere_mesh: s must lie in (-1, 1)");
  if (resolution < 2) throw std::invalid_argument("horosphere_mesh: resolution >= 2");

  const double pi = std::numbers::pi;
  const double c = std::sqrt((1.0 - s) / 2.0);
  const int angles = n - 1;
  std::size_t rows = 1;
  for (int i = 0; i < angles; ++i) rows *= resolution;

  Mat out(rows, n + 1);
  std::vector<int> idx(angles, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> theta(angles);
    for (int i = 0; i < angles - 1; ++i)
      theta[i] = pi * idx[i] / (resolution - 1.0);
    theta[angles - 1] = 2.0 * pi * idx[angles - 1] / resolution;

    Vec x(n + 1);
    x[0] = 1.0;
    // h_1 = c sin t1 ... sin t_{n-1}; h_j = c sin t1 ... sin t_{n-j} cos t_{n-j+1}
    std::vector<double> sins(angles);
    for (int i = 0; i < angles; ++i) sins[i] = std::sin(theta[i]);
    {
      double prod = c;
      for (int i = 0; i < angles; ++i) prod *= sins[i];
      x[1] = prod;
    }
    for (int j = 2; j <= n - 1; ++j) {
      double prod = c;
      for (int i = 0; i < n - j; ++i) prod *= sins[i];
      prod *= std::cos(theta[n - j]);
      x[j] = prod;
    }
    x[n] = (1.0 + s) / 2.0 + (1.0 - s) / 2.0 * std::cos(theta[0]);
    out.row(r) = x;

    for (int i = angles - 1; i >= 0; --i) {
      if (++idx[i] < resolution) break;
      idx[i] = 0;
    }
  }
  return out;
}

}  // namespace horopack
