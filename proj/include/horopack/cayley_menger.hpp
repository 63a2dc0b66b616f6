#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "horopack/lorentz.hpp"

namespace horopack {

/// Euclidean volume of an m-simplex from its edge lengths via the bordered
/// Cayley-Menger determinant. L is the (m+1)x(m+1) symmetric length matrix
/// with zero diagonal; vol^2 = (-1)^{m+1} det(B) / (2^m (m!)^2).
inline double cayley_menger_volume(const Mat& lengths) {
  const int p = static_cast<int>(lengths.rows());
  if (p < 2 || lengths.cols() != p)
    throw std::invalid_argument("cayley_menger_volume: bad length matrix");
  const int m = p - 1;
  if ((lengths - lengths.transpose()).cwiseAbs().maxCoeff() > 1e-12 ||
      lengths.diagonal().cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("cayley_menger_volume: not a length matrix");

  Mat b = Mat::Ones(p + 1, p + 1);
  b(0, 0) = 0.0;
  b.bottomRightCorner(p, p) = lengths.cwiseProduct(lengths);

  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  const double det = b.fullPivLu().determinant();
  const double v2 = sign * det / (std::pow(2.0, m) * fact * fact);

  const double scale = std::pow(lengths.cwiseAbs().maxCoeff(), 2 * m);
  if (v2 < -1e-10 * std::max(1.0, scale))
    throw std::domain_error("cayley_menger_volume: lengths are not realizable");
  return std::sqrt(std::max(v2, 0.0));
}

}  // namespace horopack
