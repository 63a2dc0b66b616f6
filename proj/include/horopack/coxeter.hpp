#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "horopack/lorentz.hpp"
#include "horopack/schlafli.hpp"

// Turns a Schlafli symbol into a realized truncated orthoscheme: Gram matrix,
// inverse, unit facet forms, vertices, vertex classification and the polar
// truncation data.
namespace horopack {

enum class VertexClass { Proper, Ideal, UltraIdeal };

inline const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Proper: return "proper";
    case VertexClass::Ideal: return "ideal";
    case VertexClass::UltraIdeal: return "ultra_ideal";
  }
  return "?";
}

enum class RealizeMode { Strict, Permissive };

/// Coxeter-Schlafli matrix of a weight chain: unit diagonal,
/// -cos(pi/w) on the first off-diagonals, zero elsewhere.
inline Mat gram_from_weights(const std::vector<int>& weights) {
  const int k = static_cast<int>(weights.size());
  Mat g = Mat::Identity(k + 1, k + 1);
  for (int i = 0; i < k; ++i) {
    double e;
    if (weights[i] == kInfWeight) {
      e = -1.0;
    } else {
      if (weights[i] < 2)
        throw std::invalid_argument("gram_from_weights: weight < 2");
      e = -std::cos(std::numbers::pi / weights[i]);
    }
    g(i, i + 1) = g(i + 1, i) = e;
  }
  return g;
}

/// Working (n+1)x(n+1) Gram matrix of the complete orthoscheme; the trailing
/// infinity mark is not stored here, it shows up later as polar parallelism.
inline Mat gram_from_symbol(const SchlafliSymbol& s) {
  s.validate();
  return gram_from_weights(s.finite_weights());
}

struct SignatureInfo {
  int negative = 0, zero = 0, positive = 0;
};

inline SignatureInfo signature(const Mat& gram, double tol = kClassTol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(gram, Eigen::EigenvaluesOnly);
  SignatureInfo sig;
  for (double lam : es.eigenvalues()) {
    if (lam < -tol)
      ++sig.negative;
    else if (lam > tol)
      ++sig.positive;
    else
      ++sig.zero;
  }
  return sig;
}

struct Classification {
  Mat inverse;
  std::vector<VertexClass> classes;
};

/// Inverse Gram matrix and per-vertex classification by the sign of the
/// diagonal entry a_ii: zero ideal, positive ultra-ideal, negative proper.
inline Classification invert_and_classify(const Mat& gram,
                                          double tol = kClassTol) {
  Eigen::FullPivLU<Mat> lu(gram);
  if (!lu.isInvertible())
    throw std::invalid_argument("invert_and_classify: singular Gram matrix");
  Classification c;
  c.inverse = lu.inverse();
  for (int i = 0; i < gram.rows(); ++i) {
    const double a = c.inverse(i, i);
    if (std::abs(a) < tol)
      c.classes.push_back(VertexClass::Ideal);
    else if (a > 0)
      c.classes.push_back(VertexClass::UltraIdeal);
    else
      c.classes.push_back(VertexClass::Proper);
  }
  return c;
}

struct RealizedOrthoscheme {
  SchlafliSymbol symbol;
  int n = 0;
  Mat gram;           // (n+1)x(n+1)
  Mat inverse;        // gram^-1
  Mat normals;        // row i = unit form b^i, interior on the positive side
  Mat vertices;       // row i = vertex a_i, coords[0] = 1
  std::vector<VertexClass> vertex_class;
  Vec polar;          // unit form of Pol(A_n), body on the non-positive side
  Mat truncation;     // row i = truncation point A_{i n}, i = 0..n-2
  // |<b^n, polar>|: the truncating hyperplane is parallel to the facet
  // opposite A_n (value 1) and orthogonal to every other facet.
  double polar_parallelism = 0.0;

  Vec normal(int i) const { return normals.row(i); }
  Vec vertex(int i) const { return vertices.row(i); }
  Vec truncation_point(int i) const { return truncation.row(i); }

  /// Inward-positive form of facet i; i in 0..n are the orthoscheme facets,
  /// i = n+1 is the truncating polar facet.
  Vec facet_form(int i) const {
    if (i <= n) return normals.row(i);
    if (i == n + 1) return -polar;
    throw std::out_of_range("facet_form");
  }
  int facet_count() const { return n + 2; }

  std::vector<int> ideal_vertices() const {
    std::vector<int> out;
    for (int i = 0; i <= n; ++i)
      if (vertex_class[i] == VertexClass::Ideal) out.push_back(i);
    return out;
  }

  bool contains(const Vec& x, double tol = kAlgTol) const {
    for (int i = 0; i < facet_count(); ++i)
      if (linner(x, facet_form(i)) < -tol * std::max(1.0, x.squaredNorm()))
        return false;
    return true;
  }
};

/// Truncation points A_{i n} = a_i - (<a_i,a_n>/<a_n,a_n>) a_n for i <= n-2.
/// Requires an ultra-ideal A_n; A_{n-1} already lies on the polar hyperplane.
inline Mat truncation_points(const Mat& vertices,
                             const std::vector<VertexClass>& classes) {
  const int n = static_cast<int>(vertices.rows()) - 1;
  if (classes[n] != VertexClass::UltraIdeal)
    throw std::invalid_argument("truncation_points: A_n is not ultra-ideal");
  const Vec an = vertices.row(n);
  const double qnn = linner(an, an);
  Mat t(n - 1, n + 1);
  for (int i = 0; i <= n - 2; ++i) {
    const Vec ai = vertices.row(i);
    const double mu = -linner(ai, an) / qnn;
    if (mu <= 0)
      throw std::runtime_error("truncation_points: point not on segment");
    t.row(i) = normalize_point(ai + mu * an);
  }
  return t;
}

namespace detail {

// Lorentz transform whose first new coordinate is -<w, x> for a unit
// time-like w: moves the point [w] to the model centre.
inline Mat centering_transform(const Vec& w_unit) {
  const int n = static_cast<int>(w_unit.size()) - 1;
  const Mat jm = lorentz_metric(n);
  std::vector<Vec> basis = {w_unit};
  for (int k = 1; k <= n + 1 && static_cast<int>(basis.size()) <= n; ++k) {
    Vec v = Vec::Zero(n + 1);
    v[k % (n + 1)] = 1.0;  // try e1..en before e0
    for (const Vec& b : basis) v -= (linner(v, b) / linner(b, b)) * b;
    const double q = linner(v, v);
    if (q > 1e-8) basis.push_back(v / std::sqrt(q));
  }
  if (static_cast<int>(basis.size()) != n + 1)
    throw std::runtime_error("centering_transform: basis completion failed");
  Mat l(n + 1, n + 1);
  l.row(0) = -(jm * basis[0]).transpose();
  for (int i = 1; i <= n; ++i) l.row(i) = (jm * basis[i]).transpose();
  return l;
}

// Common assembly once unit normals (rows of b) are known.
inline RealizedOrthoscheme assemble(const SchlafliSymbol& symbol, Mat b,
                                    RealizeMode mode) {
  RealizedOrthoscheme r;
  r.symbol = symbol;
  r.n = symbol.dim();
  const int n = r.n;
  r.gram = gram_from_symbol(symbol);
  const Mat jm = lorentz_metric(n);

  if ((b * jm * b.transpose() - r.gram).cwiseAbs().maxCoeff() > 1e-9)
    throw std::runtime_error("realize: normals do not reproduce the Gram matrix");

  Classification cls = invert_and_classify(r.gram);
  r.inverse = cls.inverse;
  r.vertex_class = cls.classes;

  // Dual rows: <dual_i, b^j> = delta_ij.
  Mat duals = (jm * b.transpose()).inverse();
  Vec interior = duals.colwise().sum();  // positive side of every facet
  if (interior[0] < 0) {
    // time reversal, an isometry of the form
    b.col(0) *= -1.0;
    duals.col(0) *= -1.0;
    interior[0] *= -1.0;
  }
  r.normals = b;

  r.vertices = Mat(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const Vec d = duals.row(i);
    if (std::abs(d[0]) < 1e-12)
      throw std::runtime_error("realize: vertex with vanishing time coordinate");
    if (r.vertex_class[i] != VertexClass::UltraIdeal && d[0] < 0)
      throw std::runtime_error("realize: vertex on the backward sheet");
    r.vertices.row(i) = d / d[0];
  }

  if (r.vertex_class[n] != VertexClass::UltraIdeal) {
    if (mode == RealizeMode::Strict)
      throw std::runtime_error("realize: last vertex is not ultra-ideal");
    return r;  // untruncated permissive case: no polar data
  }

  r.polar = polar_form(r.vertices.row(n));
  if (linner(interior, r.polar) > 0) r.polar = -r.polar;
  r.truncation = truncation_points(r.vertices, r.vertex_class);
  r.polar_parallelism = std::abs(linner(Vec(r.normals.row(n)), r.polar));

  // Invariant checks on the assembled frame.
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double ip = linner(Vec(r.vertices.row(i)), Vec(r.normals.row(j)));
      if (i != j && std::abs(ip) > 1e-9)
        throw std::runtime_error("realize: vertex/facet incidence failed");
      if (i == j && r.vertex_class[i] != VertexClass::UltraIdeal && ip <= 0)
        throw std::runtime_error("realize: inward orientation failed");
    }
  for (int i = 0; i <= n - 2; ++i) {
    const Vec t = r.truncation.row(i);
    if (std::abs(linner(t, r.polar)) > 1e-9)
      throw std::runtime_error("realize: truncation point off the polar plane");
    if (classify_point(t) != PointClass::Inner)
      throw std::runtime_error("realize: truncation point not inner");
  }
  if (mode == RealizeMode::Strict && std::abs(r.polar_parallelism - 1.0) > 1e-9)
    throw std::runtime_error("realize: truncating facet not parallel to H^n");
  return r;
}

// Unit facet forms from exact vertex coordinates (published frames).
inline Mat normals_from_vertices(const Mat& vertices) {
  const int n = static_cast<int>(vertices.rows()) - 1;
  const Mat jm = lorentz_metric(n);
  Mat bt = (vertices * jm).inverse();  // column j: <a_i, col_j> = delta_ij
  Mat b(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    Vec f = bt.col(j);
    const double q = linner(f, f);
    if (q <= 0) throw std::runtime_error("normals_from_vertices: bad form");
    f /= std::sqrt(q);
    if (linner(Vec(vertices.row(j)), f) < 0) f = -f;
    b.row(j) = f;
  }
  return b;
}

// Published coordinate frames. Where the source lists an explicit frame the
// library reproduces it verbatim so the frame-dependent horoball parameters
// (s, edge parameter t) match the published ones; remaining cases get a
// canonical frame centred at the proper vertex A_1.
inline bool embedded_frame(const SchlafliSymbol& s, Mat* vertices) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  const double r6 = std::sqrt(6.0), r10 = std::sqrt(10.0), r15 = std::sqrt(15.0);
  const double r30 = std::sqrt(30.0);
  if (s.weights == std::vector<int>{4, 4, 3, 4, kInfWeight}) {
    Mat v(5, 5);
    v << 1, 0, 1, 0, 0,
         1, 0, 0, 0, 0,
         1, 0.5, 0, 0.5, 0,
         1, 1, 0, 0, 0,
         1, 1, 0, 0, r2 / 2;
    *vertices = v;
    return true;
  }
  if (s.weights == std::vector<int>{4, 3, 4, 3, 3, kInfWeight}) {
    Mat v(6, 6);
    v << 1, r30 / 6, r6 / 6, 0, 0, 0,
         1, r30 / 6, 0, 0, 0, 0,
         1, (2 * r6 + 5 * r30) / 33, 0, (4 * r3 - r15) / 33, 0, 0,
         1, (r6 + r30) / 8, 0, 0, 0, 0,
         1, (r6 + r30) / 8, 0, 0, (3 * r2 - r10) / 8, 0,
         1, (r6 + r30) / 8, 0, 0, (3 * r2 - r10) / 8, (3 * r6 - r30) / 8;
    *vertices = v;
    return true;
  }
  (void)r5;
  return false;
}

}  // namespace detail

/// Realizes the truncated orthoscheme of a symbol. Strict mode accepts only
/// the nine catalog symbols; permissive mode accepts anything with Gram
/// signature (1,n). The frame is canonical: published coordinates where they
/// exist, otherwise an eigenvector frame recentred so that vertex A_1 is the
/// model centre.
inline RealizedOrthoscheme realize(const SchlafliSymbol& symbol,
                                   RealizeMode mode = RealizeMode::Strict) {
  symbol.validate();
  if (mode == RealizeMode::Strict && !in_catalog(symbol))
    throw std::invalid_argument("realize: symbol not in catalog (strict mode): " +
                                symbol.str());
  const int n = symbol.dim();
  const Mat g = gram_from_symbol(symbol);
  const SignatureInfo sig = signature(g);
  if (sig.zero > 0)
    throw std::invalid_argument("realize: degenerate (parabolic) Gram matrix");
  if (sig.negative != 1 || sig.positive != n)
    throw std::invalid_argument("realize: Gram signature is not (1,n)");

  Mat embedded;
  if (detail::embedded_frame(symbol, &embedded))
    return detail::assemble(symbol, detail::normals_from_vertices(embedded), mode);

  // Eigenvector frame: G = sum_k lam_k q_k q_k^T with exactly one negative
  // eigenvalue mapped to the time axis.
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  const Vec lam = es.eigenvalues();
  Mat q = es.eigenvectors();
  for (int c = 0; c <= n; ++c) {  // deterministic eigenvector signs
    int imax = 0;
    for (int i = 0; i <= n; ++i)
      if (std::abs(q(i, c)) > std::abs(q(imax, c))) imax = i;
    if (q(imax, c) < 0) q.col(c) *= -1.0;
  }
  Mat b(n + 1, n + 1);
  b.col(0) = std::sqrt(-lam[0]) * q.col(0);
  for (int m = 1; m <= n; ++m) b.col(m) = std::sqrt(lam[m]) * q.col(m);

  RealizedOrthoscheme r = detail::assemble(symbol, b, mode);

  // Recentre on A_1 when it is a proper vertex (always true in the catalog).
  if (r.vertex_class.size() > 1 && r.vertex_class[1] == VertexClass::Proper) {
    Vec w = r.vertices.row(1);
    w /= std::sqrt(-linner(w, w));
    const Mat l = detail::centering_transform(w);
    Mat bt = (l * r.normals.transpose()).transpose();
    return detail::assemble(symbol, bt, mode);
  }
  return r;
}

}  // namespace horopack
