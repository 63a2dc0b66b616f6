#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

// Lorentzian linear algebra over R^{1,n} with signature (-,+,...,+) and the
// Beltrami-Cayley-Klein ball model. Coordinate index 0 is time-like; a point
// vector with x[0] = 1 has Klein coordinates x[1..n].
namespace horopack {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kAlgTol = 1e-9;    // algebraic identity tolerance
inline constexpr double kClassTol = 1e-9;  // sign classification tolerance

enum class PointClass { Inner, Ideal, Outer };

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Inner: return "inner";
    case PointClass::Ideal: return "ideal";
    case PointClass::Outer: return "outer";
  }
  return "?";
}

/// Lorentzian inner product <x,y> = -x0*y0 + x1*y1 + ... + xn*yn.
inline double linner(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("linner: dimension mismatch");
  return -x[0] * y[0] + x.tail(x.size() - 1).dot(y.tail(y.size() - 1));
}

inline Mat lorentz_metric(int n) {
  Mat j = Mat::Identity(n + 1, n + 1);
  j(0, 0) = -1.0;
  return j;
}

inline PointClass classify_point(const Vec& x, double tol = kClassTol) {
  if (x.norm() < tol) throw std::invalid_argument("classify_point: zero vector");
  const double q = linner(x, x);
  const double scale = std::max(1.0, x.squaredNorm());
  if (q < -tol * scale) return PointClass::Inner;
  if (q > tol * scale) return PointClass::Outer;
  return PointClass::Ideal;
}

/// Scales so that coords[0] = 1. Projective representative used throughout.
inline Vec normalize_point(const Vec& x, double tol = kClassTol) {
  if (std::abs(x[0]) < tol)
    throw std::invalid_argument("normalize_point: vanishing time coordinate");
  return x / x[0];
}

/// Klein-model coordinates y_i = x_i / x_0 of a projective point.
inline Vec klein_coords(const Vec& x) {
  const Vec p = normalize_point(x);
  return p.tail(p.size() - 1);
}

/// Hyperbolic distance (curvature -1) between two inner points.
inline double distance(const Vec& x, const Vec& y, double tol = kClassTol) {
  const double qx = linner(x, x), qy = linner(y, y);
  if (qx >= 0 || qy >= 0)
    throw std::invalid_argument("distance: arguments must be inner points");
  const double arg = -linner(x, y) / std::sqrt(qx * qy);
  if (arg < 1.0 - tol)
    throw std::domain_error("distance: cosh argument below 1");
  return std::acosh(std::max(arg, 1.0));
}

/// Orthogonal projection of x onto the hyperplane with form u:
/// x - (<x,u>/<u,u>) u. Requires a non-light-like u.
inline Vec project_to_hyperplane(const Vec& x, const Vec& u) {
  const double uu = linner(u, u);
  if (std::abs(uu) < kClassTol * std::max(1.0, u.squaredNorm()))
    throw std::invalid_argument("project_to_hyperplane: light-like form");
  return x - (linner(x, u) / uu) * u;
}

/// Unit form of the polar hyperplane of an outer point.
inline Vec polar_form(const Vec& x) {
  const double q = linner(x, x);
  if (q <= kClassTol * std::max(1.0, x.squaredNorm()))
    throw std::invalid_argument("polar_form: point is not outer");
  return x / std::sqrt(q);
}

/// sinh of the distance from an inner point to the hyperplane of a unit form.
inline double sinh_distance_to_plane(const Vec& x, const Vec& unit_form) {
  const double q = linner(x, x);
  if (q >= 0) throw std::invalid_argument("sinh_distance_to_plane: non-inner point");
  return std::abs(linner(x, unit_form)) / std::sqrt(-q);
}

}  // namespace horopack
