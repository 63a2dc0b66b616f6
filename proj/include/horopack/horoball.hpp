#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "horopack/cayley_menger.hpp"
#include "horopack/coxeter.hpp"
#include "horopack/lorentz.hpp"
#include "horopack/volume.hpp"

// Horoball machinery: Busemann-normalized s-parameters, maximal admissible
// horoballs, horospherical cells with their Cayley-Menger volumes, and the
// one- and two-horoball packing optimizers.
//
// Convention: a horoball at ideal vertex c is the family member B_c(s) whose
// boundary satisfies (s-1)<x,x> - (1+s)<x,a_c>^2 = 0 with a_c scaled to
// coords[0] = 1; s is the signed Euclidean distance between the horoball and
// the model centre (s = 0 passes through the centre), so larger s means a
// smaller horoball.
namespace horopack {

struct Horoball {
  int center = -1;  // ideal vertex index
  double s = 0.0;   // in (-1, 1)
};

/// s of the horosphere centred at null vector c (coords[0] = 1) through p.
/// Frame formula s = (Q + P) / (Q - P), Q = <p,p>, P = <p,c>^2; the value is
/// invariant under rescaling of p.
inline double s_from_point(const Vec& center, const Vec& p) {
  const double q = linner(p, p);
  const double pc = linner(p, center);
  const double pp = pc * pc;
  if (std::abs(q - pp) < 1e-14 * std::max(1.0, std::abs(q)))
    throw std::invalid_argument("s_from_point: point coincides with the centre");
  const double s = (q + pp) / (q - pp);
  return s == 0.0 ? 0.0 : s;
}

/// Membership test: p inside (or on) B_c(s).
inline bool horoball_contains(const Vec& center, double s, const Vec& p,
                              double tol = 0.0) {
  const double q = linner(p, p);
  const double pc = linner(p, center);
  return (s - 1.0) * q - (1.0 + s) * pc * pc >= -tol;
}

/// Null form w = sqrt((1+s)/(1-s)) c; two horoballs are tangent iff
/// <w1, w2> = -2, disjoint iff below.
inline Vec horoball_null_form(const Vec& center, double s) {
  if (s <= -1.0 || s >= 1.0)
    throw std::invalid_argument("horoball_null_form: s outside (-1,1)");
  return std::sqrt((1.0 + s) / (1.0 - s)) * center;
}

struct AdmissibleHoroball {
  Horoball ball;
  int tangent_facet = -1;  // 0..n orthoscheme facets, n+1 truncating facet
};

/// Largest horoball at an ideal vertex that stays inside the fundamental
/// domain: tangent to the binding non-incident facet (largest s over the
/// candidate foot points, including the truncating facet).
inline AdmissibleHoroball max_admissible_horoball(const RealizedOrthoscheme& orth,
                                                  int center_index) {
  if (orth.vertex_class.at(center_index) != VertexClass::Ideal)
    throw std::invalid_argument("max_admissible_horoball: centre not ideal");
  const Vec c = orth.vertex(center_index);
  AdmissibleHoroball best;
  bool found = false;
  for (int i = 0; i < orth.facet_count(); ++i) {
    const Vec u = (i <= orth.n) ? orth.normal(i) : orth.polar;
    if (std::abs(linner(c, u)) < 1e-9) continue;  // facet through the centre
    const Vec foot = project_to_hyperplane(c, u);
    const double s = s_from_point(c, foot);
    if (!found || s > best.ball.s) {
      found = true;
      best.ball = {center_index, s};
      best.tangent_facet = i;
    }
  }
  if (!found)
    throw std::runtime_error("max_admissible_horoball: no opposite facet");
  return best;
}

struct EdgeHit {
  Vec point;      // coords[0] = 1
  double t = 0.0; // affine parameter: point = (1-t) a_c + t endpoint
};

/// Intersection of the horosphere of hb with the ray from its centre through
/// an endpoint (both coords[0] = 1). With a null centre the horosphere
/// equation is affine in the parameter, so the hit is closed-form. Unless
/// allow_beyond_segment, a hit past the endpoint (t > 1) is rejected.
inline EdgeHit edge_intersection(const RealizedOrthoscheme& orth,
                                 const Horoball& hb, const Vec& endpoint,
                                 bool allow_beyond_segment = false) {
  const Vec c = orth.vertex(hb.center);
  const Vec q = normalize_point(endpoint);
  const double cq = linner(c, q);
  const double qq = linner(q, q);
  const double den = (hb.s - 1.0) * (qq - 2.0 * cq) - (1.0 + hb.s) * cq * cq;
  if (std::abs(den) < 1e-14)
    throw std::runtime_error("edge_intersection: degenerate configuration");
  const double t = 2.0 * cq * (1.0 - hb.s) / den;
  if (t <= 1e-14)
    throw std::runtime_error("edge_intersection: no intersection on the ray");
  if (!allow_beyond_segment && t > 1.0 + 1e-9)
    throw std::runtime_error(
        "edge_intersection: horoball reaches past the segment (inadmissible)");
  EdgeHit hit;
  hit.t = t;
  hit.point = normalize_point((1.0 - t) * c + t * q);
  return hit;
}

struct HorosphericalCell {
  Mat points;        // rows: horosphere points over the cone edges
  std::vector<std::vector<int>> simplices;  // index lists into points
  Mat edge_lengths;  // L_ij = 2 sinh(d(h_i, h_j) / 2)
};

namespace detail {

inline std::vector<Vec> cell_endpoints(const RealizedOrthoscheme& orth,
                                       int center,
                                       std::vector<std::vector<int>>* simplices) {
  const int n = orth.n;
  std::vector<Vec> ends;
  simplices->clear();
  if (center == n - 1) {
    // Opposite facet polytope A_0..A_{n-2}, A_{0n}..A_{(n-2)n}; staircase
    // dissection into n-1 simplices.
    for (int i = 0; i <= n - 2; ++i) ends.push_back(orth.vertex(i));
    for (int i = 0; i <= n - 2; ++i) ends.push_back(orth.truncation_point(i));
    for (int k = 0; k <= n - 2; ++k) {
      std::vector<int> s;
      for (int i = 0; i <= k; ++i) s.push_back(n - 1 + i);  // truncation block
      for (int i = k; i <= n - 2; ++i) s.push_back(i);      // vertex block
      simplices->push_back(s);
    }
  } else {
    // Simple cone vertex: edges to the other orthoscheme vertices and to the
    // single truncation point; the footprint is one simplex.
    for (int i = 0; i <= n - 1; ++i)
      if (i != center) ends.push_back(orth.vertex(i));
    ends.push_back(orth.truncation_point(center));
    std::vector<int> all(ends.size());
    for (std::size_t i = 0; i < ends.size(); ++i) all[i] = static_cast<int>(i);
    simplices->push_back(all);
  }
  return ends;
}

}  // namespace detail

/// Horospherical footprint of the cone of the fundamental domain at the
/// horoball centre: one point per cone edge, full pairwise intrinsic
/// (Euclidean) lengths, and the simplex dissection.
inline HorosphericalCell horospherical_cell(const RealizedOrthoscheme& orth,
                                            const Horoball& hb,
                                            bool allow_beyond_segment = false) {
  HorosphericalCell cell;
  std::vector<Vec> ends = detail::cell_endpoints(orth, hb.center, &cell.simplices);
  const int m = static_cast<int>(ends.size());
  cell.points = Mat(m, orth.n + 1);
  for (int i = 0; i < m; ++i)
    cell.points.row(i) =
        edge_intersection(orth, hb, ends[i], allow_beyond_segment).point;
  cell.edge_lengths = Mat::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d = distance(cell.points.row(i), cell.points.row(j));
      cell.edge_lengths(i, j) = cell.edge_lengths(j, i) = 2.0 * std::sinh(d / 2.0);
    }
  return cell;
}

/// Volume of the horoball piece inside the fundamental domain:
/// sum of the Cayley-Menger volumes of the footprint simplices over n-1.
inline double horoball_piece_volume(const RealizedOrthoscheme& orth,
                                    const Horoball& hb,
                                    bool allow_beyond_segment = false) {
  const HorosphericalCell cell =
      horospherical_cell(orth, hb, allow_beyond_segment);
  double total = 0.0;
  for (const auto& simplex : cell.simplices) {
    const int k = static_cast<int>(simplex.size());
    Mat sub(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        sub(a, b) = cell.edge_lengths(simplex[a], simplex[b]);
    total += cayley_menger_volume(sub);
  }
  return total / (orth.n - 1);
}

enum class PairRelation { Tangent, Disjoint };

inline const char* to_string(PairRelation r) {
  return r == PairRelation::Tangent ? "tangent" : "disjoint";
}

struct TwoHoroballPacking {
  Horoball first, second;
  PairRelation relation = PairRelation::Tangent;
  double t_first = 0.0;   // edge parameter of the first ball from its centre
  double t_second = 0.0;  // edge parameter of the second ball from its centre
  double piece_first = 0.0, piece_second = 0.0;
  double density = 0.0;
};

/// Optimal two-horoball configuration on the shared edge of two ideal
/// vertices. If the maximal admissible horoballs are disjoint or tangent they
/// are optimal; if they would overlap, total piece volume is convex in the
/// tangency position, so the optimum sits at a feasible endpoint.
inline TwoHoroballPacking optimize_two_horoballs(const RealizedOrthoscheme& orth,
                                                 int i, int j,
                                                 double domain_volume) {
  if (orth.vertex_class.at(i) != VertexClass::Ideal ||
      orth.vertex_class.at(j) != VertexClass::Ideal)
    throw std::invalid_argument("optimize_two_horoballs: vertices must be ideal");
  if (i == j) throw std::invalid_argument("optimize_two_horoballs: i == j");

  const Horoball bi = max_admissible_horoball(orth, i).ball;
  const Horoball bj = max_admissible_horoball(orth, j).ball;
  const double ti = edge_intersection(orth, bi, orth.vertex(j)).t;
  const double tj = edge_intersection(orth, bj, orth.vertex(i)).t;
  const double gap = 1.0 - ti - tj;

  TwoHoroballPacking out;
  const double vol = domain_volume;
  if (gap >= -1e-9) {
    out.first = bi;
    out.second = bj;
    out.relation = std::abs(gap) <= 1e-9 ? PairRelation::Tangent
                                         : PairRelation::Disjoint;
    out.t_first = ti;
    out.t_second = tj;
  } else {
    // Overlap: tangency point swept over the feasible interval; evaluate the
    // two endpoint configurations and keep the larger total.
    auto config_at = [&](double t_from_i) {
      TwoHoroballPacking cfg;
      const Vec p = normalize_point((1.0 - t_from_i) * orth.vertex(i) +
                                    t_from_i * orth.vertex(j));
      cfg.first = {i, s_from_point(orth.vertex(i), p)};
      cfg.second = {j, s_from_point(orth.vertex(j), p)};
      if (cfg.first.s < bi.s - 1e-12 || cfg.second.s < bj.s - 1e-12)
        throw std::runtime_error("optimize_two_horoballs: infeasible endpoint");
      cfg.t_first = t_from_i;
      cfg.t_second = 1.0 - t_from_i;
      cfg.relation = PairRelation::Tangent;
      return cfg;
    };
    // cone pieces (ray semantics): identical to the strict pieces for
    // admissible balls, and well defined at both sweep endpoints
    TwoHoroballPacking a = config_at(ti);        // first ball maximal
    TwoHoroballPacking b = config_at(1.0 - tj);  // second ball maximal
    a.piece_first = horoball_piece_volume(orth, a.first, true);
    a.piece_second = horoball_piece_volume(orth, a.second, true);
    b.piece_first = horoball_piece_volume(orth, b.first, true);
    b.piece_second = horoball_piece_volume(orth, b.second, true);
    out = (a.piece_first + a.piece_second >= b.piece_first + b.piece_second) ? a
                                                                             : b;
    out.density = (out.piece_first + out.piece_second) / vol;
    return out;
  }
  out.piece_first = horoball_piece_volume(orth, out.first);
  out.piece_second = horoball_piece_volume(orth, out.second);
  out.density = (out.piece_first + out.piece_second) / vol;
  return out;
}

inline TwoHoroballPacking optimize_two_horoballs(const RealizedOrthoscheme& orth,
                                                 int i, int j) {
  return optimize_two_horoballs(orth, i, j,
                                vol_truncated_orthoscheme(orth.symbol).value);
}

/// Density of a horoball packing of the fundamental domain: admissibility and
/// pairwise non-overlap (on shared edges) are enforced, then
/// sum of piece volumes over the domain volume.
inline double packing_density(const RealizedOrthoscheme& orth,
                              const std::vector<Horoball>& balls,
                              double domain_volume) {
  for (const Horoball& b : balls) {
    if (orth.vertex_class.at(b.center) != VertexClass::Ideal)
      throw std::invalid_argument("packing_density: centre not ideal");
    const double smax = max_admissible_horoball(orth, b.center).ball.s;
    if (b.s < smax - 1e-9)
      throw std::invalid_argument("packing_density: horoball crosses a facet");
  }
  for (std::size_t a = 0; a < balls.size(); ++a)
    for (std::size_t b = a + 1; b < balls.size(); ++b) {
      if (balls[a].center == balls[b].center)
        throw std::invalid_argument("packing_density: duplicate centre");
      const double ta =
          edge_intersection(orth, balls[a], orth.vertex(balls[b].center), true).t;
      const double tb =
          edge_intersection(orth, balls[b], orth.vertex(balls[a].center), true).t;
      if (ta + tb > 1.0 + 1e-9)
        throw std::invalid_argument("packing_density: horoballs overlap");
    }
  double total = 0.0;
  for (const Horoball& b : balls) total += horoball_piece_volume(orth, b);
  return total / domain_volume;
}

inline double packing_density(const RealizedOrthoscheme& orth,
                              const std::vector<Horoball>& balls) {
  return packing_density(orth, balls,
                         vol_truncated_orthoscheme(orth.symbol).value);
}

/// Conservative global packing check: the null forms of the balls and their
/// depth-one reflection images across every facet must stay pairwise
/// non-overlapping, <w_a, w_b> <= -2.
inline void check_global_packing(const RealizedOrthoscheme& orth,
                                 const std::vector<Horoball>& balls,
                                 double tol = 1e-9) {
  std::vector<Vec> base, images;
  for (const Horoball& b : balls)
    base.push_back(horoball_null_form(orth.vertex(b.center), b.s));
  for (const Vec& w : base)
    for (int f = 0; f < orth.facet_count(); ++f) {
      const Vec u = (f <= orth.n) ? orth.normal(f) : orth.polar;
      const Vec img = w - 2.0 * linner(w, u) * u;
      if ((img - w).cwiseAbs().maxCoeff() > 1e-12) images.push_back(img);
    }
  auto check = [&](const Vec& a, const Vec& b) {
    if ((a - b).cwiseAbs().maxCoeff() < 1e-12) return;
    if (linner(a, b) > -2.0 + tol)
      throw std::runtime_error("check_global_packing: overlap detected");
  };
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) check(base[a], base[b]);
    for (const Vec& img : images) check(base[a], img);
  }
}

}  // namespace horopack
