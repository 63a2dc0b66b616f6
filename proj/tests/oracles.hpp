#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: direct polylog series, adaptive quadrature, the Klein cross-ratio
// distance, coordinate simplex volumes, a distance-matrix embedding, a small
// convex-hull volume routine and a Nelder-Mead minimizer.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracles {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Partial sum of sum cos(k t)/k^3 with the tail below 1/(2 K^2).
inline double direct_cl3(double theta, long terms = 2400000) {
  double acc = 0.0;
  for (long k = terms; k >= 1; --k) acc += std::cos(k * theta) / (double(k) * k * k);
  return acc;
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(m), f(b), tol, 48);
}

// Hyperbolic distance from the Klein cross-ratio: the chord through two inner
// Klein points meets the unit sphere at two points; d = |log cross ratio| / 2.
inline double klein_cross_ratio_distance(const Vec& y1, const Vec& y2) {
  const Vec d = y2 - y1;
  const double a = d.squaredNorm();
  const double b = 2.0 * y1.dot(d);
  const double c = y1.squaredNorm() - 1.0;
  const double disc = std::sqrt(b * b - 4 * a * c);
  const double tp = (-b + disc) / (2 * a);  // beyond y2
  const double tm = (-b - disc) / (2 * a);  // behind y1
  // |P Y1| = |tm| |d|, |P Y2| = |1 - tm| |d|, |Q Y1| = tp |d|, |Q Y2| = (tp-1)|d|
  const double cross = (tp * (1.0 - tm)) / ((tp - 1.0) * (-tm));
  return 0.5 * std::log(cross);
}

// Volume of a simplex from vertex coordinates (rows), |det| / m!.
inline double simplex_volume_from_points(const Mat& pts) {
  const int m = static_cast<int>(pts.cols());
  Mat e(m, m);
  for (int i = 1; i <= m; ++i) e.row(i - 1) = pts.row(i) - pts.row(0);
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  return std::abs(e.determinant()) / fact;
}

// Isometric embedding of a Euclidean distance matrix into R^rank.
inline Mat embed_from_lengths(const Mat& L, int rank) {
  const Eigen::Index n = L.rows();
  Mat g(n - 1, n - 1);
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 1; j < n; ++j)
      g(i - 1, j - 1) =
          0.5 * (L(0, i) * L(0, i) + L(0, j) * L(0, j) - L(i, j) * L(i, j));
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  Mat pts = Mat::Zero(n, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index col = n - 2 - k;  // largest eigenvalues
    const double lam = std::max(es.eigenvalues()[col], 0.0);
    for (Eigen::Index i = 1; i < n; ++i)
      pts(i, k) = std::sqrt(lam) * es.eigenvectors()(i - 1, col);
  }
  return pts;
}

// Convex hull volume by supporting-hyperplane enumeration; exact enough for
// a handful of points in dimension <= 5.
inline double hull_volume(const Mat& pts) {
  const int d = static_cast<int>(pts.cols());
  const int n = static_cast<int>(pts.rows());
  const double scale = std::max(1.0, pts.cwiseAbs().maxCoeff());
  const double tol = 1e-9 * scale;
  if (d == 1) {
    return pts.col(0).maxCoeff() - pts.col(0).minCoeff();
  }
  const Vec centroid = pts.colwise().mean();

  std::vector<int> idx(d);
  std::set<std::vector<int>> seen;
  double vol = 0.0;
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == d) {
      // hyperplane through the chosen d points
      Mat e(d - 1, d);
      for (int i = 1; i < d; ++i)
        e.row(i - 1) = pts.row(idx[i]) - pts.row(idx[0]);
      Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeFullV);
      if (svd.rank() < d - 1) return;
      Vec nrm = svd.matrixV().col(d - 1);
      const double off = nrm.dot(pts.row(idx[0]));
      double lo = 0.0, hi = 0.0;
      for (int i = 0; i < n; ++i) {
        const double s = nrm.dot(pts.row(i)) - off;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (lo < -tol && hi > tol) return;  // not supporting
      std::vector<int> facet;
      for (int i = 0; i < n; ++i)
        if (std::abs(nrm.dot(pts.row(i)) - off) <= tol) facet.push_back(i);
      std::sort(facet.begin(), facet.end());
      if (!seen.insert(facet).second) return;
      // orthonormal in-plane frame
      Mat frame(d, d - 1);
      {
        Mat basis(d, 0);
        int have = 0;
        for (int axis = 0; axis < d && have < d - 1; ++axis) {
          Vec v = Vec::Zero(d);
          v[axis] = 1.0;
          v -= v.dot(nrm) * nrm;
          for (int k2 = 0; k2 < have; ++k2) v -= v.dot(frame.col(k2)) * frame.col(k2);
          if (v.norm() > 1e-6) {
            frame.col(have++) = v / v.norm();
          }
        }
        if (have < d - 1) return;
        (void)basis;
      }
      Mat proj(facet.size(), d - 1);
      for (std::size_t i = 0; i < facet.size(); ++i)
        proj.row(i) =
            ((pts.row(facet[i]) - pts.row(idx[0])) * frame).row(0);
      const double fv = hull_volume(proj);
      const double h = std::abs(nrm.dot(centroid) - off);
      vol += h * fv / d;
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[k] = i;
      choose(i + 1, k + 1);
    }
  };
  choose(0, 0);
  return vol;
}

// Nelder-Mead maximizer for the inball oracle.
inline Vec nelder_mead_max(const std::function<double(const Vec&)>& f, Vec x0,
                           double step, int iters) {
  const int n = static_cast<int>(x0.size());
  std::vector<std::pair<double, Vec>> simplex;
  simplex.push_back({f(x0), x0});
  for (int i = 0; i < n; ++i) {
    Vec x = x0;
    x[i] += step;
    simplex.push_back({f(x), x});
  }
  auto by_value = [](const auto& a, const auto& b) { return a.first > b.first; };
  for (int it = 0; it < iters; ++it) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    Vec c = Vec::Zero(n);
    for (int i = 0; i < n; ++i) c += simplex[i].second;
    c /= n;
    const Vec& worst = simplex[n].second;
    Vec xr = c + (c - worst);
    double fr = f(xr);
    if (fr > simplex[0].first) {
      Vec xe = c + 2.0 * (c - worst);
      const double fe = f(xe);
      simplex[n] = fe > fr ? std::make_pair(fe, xe) : std::make_pair(fr, xr);
    } else if (fr > simplex[n - 1].first) {
      simplex[n] = {fr, xr};
    } else {
      Vec xc = c + 0.5 * (worst - c);
      const double fc = f(xc);
      if (fc > simplex[n].first) {
        simplex[n] = {fc, xc};
      } else {
        for (int i = 1; i <= n; ++i) {
          simplex[i].second = simplex[0].second +
                              0.5 * (simplex[i].second - simplex[0].second);
          simplex[i].first = f(simplex[i].second);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex[0].second;
}

}  // namespace oracles
