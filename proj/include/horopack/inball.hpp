#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "horopack/coxeter.hpp"
#include "horopack/lorentz.hpp"
#include "horopack/volume.hpp"

// Maximal inscribed ball of a truncated orthoscheme. Either the inball of the
// complete orthoscheme survives truncation (type 1) or the optimum presses
// against the truncating facet (type 2) and is found by enumerating tangency
// subsets.
namespace horopack {

enum class InballType { Type1Complete, Type2TruncationBound };

inline const char* to_string(InballType t) {
  return t == InballType::Type1Complete ? "type1_complete"
                                        : "type2_truncation_bound";
}

struct InballResult {
  Vec center;                // coords[0] = 1
  double radius = 0.0;
  std::vector<int> touched_faces;  // 0..n orthoscheme facets, n+1 truncating
  InballType type = InballType::Type1Complete;
};

/// Existence of an embedded ball of maximal finite radius:
/// sum of the signed cofactors of the Gram matrix is positive, equivalently
/// det(G) * sum(G^-1) > 0.
inline double gram_cofactor_sum(const Mat& gram) {
  Eigen::FullPivLU<Mat> lu(gram);
  if (!lu.isInvertible())
    throw std::invalid_argument("gram_cofactor_sum: singular matrix");
  return lu.determinant() * lu.inverse().sum();
}

inline bool inball_exists(const Mat& gram) { return gram_cofactor_sum(gram) > 0; }

/// Inradius of the complete orthoscheme: arcsinh sqrt(-1 / sum(G^-1)).
inline double inradius_complete(const Mat& gram) {
  const double s = gram.fullPivLu().inverse().sum();
  if (s >= 0)
    throw std::domain_error("inradius_complete: no finite inball (sum >= 0)");
  return std::asinh(std::sqrt(-1.0 / s));
}

/// Whether truncation keeps the complete-orthoscheme inradius: for every
/// ultra-ideal index i, sum_j cof_ij / (det * cof_ii) >= 1.
inline bool truncation_preserves_inradius(const Mat& gram,
                                          const std::vector<int>& ultra) {
  if (ultra.empty())
    throw std::invalid_argument("truncation_preserves_inradius: no ultra index");
  Eigen::FullPivLU<Mat> lu(gram);
  const double det = lu.determinant();
  const Mat inv = lu.inverse();
  for (int i : ultra) {
    const double cof_ii = det * inv(i, i);
    if (std::abs(cof_ii) < 1e-14)
      throw std::domain_error("truncation_preserves_inradius: zero cofactor");
    const double v = det * inv.row(i).sum() / (det * cof_ii);
    if (v < 1.0) return false;
  }
  return true;
}

namespace detail {

// Centre with <c, form_k> = 1 for every form in rows; tangency radius is then
// asinh(1/sqrt(-<c,c>)) and containment reads <c, form> >= 1.
inline bool equal_distance_center(const std::vector<Vec>& forms, int n, Vec* c) {
  const Mat jm = lorentz_metric(n);
  Mat m(forms.size(), n + 1);
  for (std::size_t k = 0; k < forms.size(); ++k)
    m.row(k) = (jm * forms[k]).transpose();
  Eigen::FullPivLU<Mat> lu(m);
  if (!lu.isInvertible()) return false;
  *c = lu.solve(Vec::Ones(n + 1));
  return true;
}

}  // namespace detail

/// Maximal inscribed ball of the truncated orthoscheme.
inline InballResult inball_truncated(const RealizedOrthoscheme& orth) {
  const int n = orth.n;
  if (!inball_exists(orth.gram))
    throw std::domain_error("inball_truncated: no embedded inball");

  std::vector<Vec> ordinary;
  for (int i = 0; i <= n; ++i) ordinary.push_back(orth.normal(i));
  const Vec polar_in = -orth.polar;  // inward-positive truncating form

  // Complete-orthoscheme incenter; cross-check the lemma criterion against
  // the geometric clearance of the truncating facet.
  Vec c_complete;
  if (!detail::equal_distance_center(ordinary, n, &c_complete))
    throw std::runtime_error("inball_truncated: incenter solve failed");
  const double q = linner(c_complete, c_complete);
  if (q >= 0) throw std::runtime_error("inball_truncated: incenter not inner");
  const double sinh_r = 1.0 / std::sqrt(-q);
  const double r_complete = std::asinh(sinh_r);
  const double r_formula = inradius_complete(orth.gram);
  if (std::abs(r_complete - r_formula) > 1e-9)
    throw std::runtime_error(
        "inball_truncated: incenter solve disagrees with the inradius formula");

  const double clearance = linner(c_complete, polar_in);  // sinh d * sqrt(-q) scale
  const bool geometric_type1 = clearance >= 1.0 - 1e-12;
  const bool criterion_type1 = truncation_preserves_inradius(orth.gram, {n});
  if (geometric_type1 != criterion_type1)
    throw std::runtime_error(
        "inball_truncated: truncation criterion and geometry disagree");

  if (criterion_type1) {
    InballResult res;
    res.center = normalize_point(c_complete);
    res.radius = r_formula;
    res.type = InballType::Type1Complete;
    for (int i = 0; i <= n; ++i) res.touched_faces.push_back(i);
    return res;
  }

  // Type 2: the ball must touch the truncating facet; drop one orthoscheme
  // facet at a time and keep the best contained candidate.
  InballResult best;
  bool found = false;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<Vec> forms;
    for (int i = 0; i <= n; ++i)
      if (i != drop) forms.push_back(ordinary[i]);
    forms.push_back(polar_in);
    Vec c;
    if (!detail::equal_distance_center(forms, n, &c)) continue;
    const double qc = linner(c, c);
    if (qc >= -1e-12 || c[0] <= 0) continue;
    bool inside = true;
    for (int i = 0; i <= n && inside; ++i)
      if (linner(c, ordinary[i]) < 1.0 - 1e-9) inside = false;
    if (linner(c, polar_in) < 1.0 - 1e-9) inside = false;
    if (!inside) continue;
    const double r = std::asinh(1.0 / std::sqrt(-qc));
    if (!found || r > best.radius) {
      found = true;
      best.center = normalize_point(c);
      best.radius = r;
      best.type = InballType::Type2TruncationBound;
      best.touched_faces.clear();
      const double sq = std::sqrt(-qc);
      for (int i = 0; i <= n; ++i)
        if (std::abs(linner(c, ordinary[i]) - 1.0) < 1e-7 * sq + 1e-9)
          best.touched_faces.push_back(i);
      best.touched_faces.push_back(n + 1);
    }
  }
  if (!found)
    throw std::runtime_error("inball_truncated: no feasible tangency candidate");
  return best;
}

/// Hyperbolic ball volume: surf(S^{n-1}) * int_0^r sinh^{n-1} t dt, with the
/// integral in closed form through the standard reduction.
inline double ball_volume(double r, int n) {
  if (r <= 0) throw std::invalid_argument("ball_volume: r must be positive");
  if (n < 2) throw std::invalid_argument("ball_volume: n >= 2");
  const double surf =
      2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
  // I_k = sinh^{k-1}(r) cosh(r)/k - (k-1)/k I_{k-2}; I_0 = r, I_1 = cosh r - 1.
  std::vector<double> I(n);
  I[0] = r;
  if (n > 1) I[1] = std::cosh(r) - 1.0;
  for (int k = 2; k < n; ++k)
    I[k] = std::pow(std::sinh(r), k - 1) * std::cosh(r) / k -
           (k - 1.0) / k * I[k - 2];
  return surf * I[n - 1];
}

/// Inball packing density of the truncated orthoscheme.
inline double ball_density(const RealizedOrthoscheme& orth) {
  const InballResult ib = inball_truncated(orth);
  return ball_volume(ib.radius, orth.n) /
         vol_truncated_orthoscheme(orth.symbol).value;
}

}  // namespace horopack
