#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "horopack/polylog.hpp"
#include "horopack/schlafli.hpp"

// Volumes of the truncated orthoschemes: a closed-form registry for the even
// dimensions, the lambda = 1 trilogarithm formula plus scissors dissection
// for dimension 5, and an exact Gauss-Bonnet cross-check.
namespace horopack {

enum class VolumeMethod { ClosedForm, DissectionPolylog, MonteCarlo };

inline const char* to_string(VolumeMethod m) {
  switch (m) {
    case VolumeMethod::ClosedForm: return "closed_form";
    case VolumeMethod::DissectionPolylog: return "dissection_polylog";
    case VolumeMethod::MonteCarlo: return "monte_carlo";
  }
  return "?";
}

struct VolumeResult {
  double value = 0.0;
  VolumeMethod method = VolumeMethod::ClosedForm;
  double stderror = 0.0;  // zero for analytic methods
};

/// Doubly asymptotic 5-orthoscheme with lambda = tan(theta) = 1, i.e.
/// cos^2 a1 + cos^2 a2 + cos^2 a3 = 1.
struct DoublyAsymptotic5 {
  std::array<double, 5> alpha;

  void validate() const {
    const double c = std::pow(std::cos(alpha[0]), 2) +
                     std::pow(std::cos(alpha[1]), 2) +
                     std::pow(std::cos(alpha[2]), 2);
    if (std::abs(c - 1.0) > 1e-12)
      throw std::invalid_argument(
          "DoublyAsymptotic5: lambda != 1 (cos^2 a1 + cos^2 a2 + cos^2 a3 must be 1)");
  }
};

/// Volume of a doubly asymptotic 5-orthoscheme with lambda = 1:
/// 1/4 (J3(a1) + J3(a2) - 1/2 J3(pi/2 - a3))
/// - 1/16 (J3(pi/2 + a1 + a2) + J3(pi/2 - a1 + a2)) + 3 zeta(3)/64.
inline double vol5_doubly_asymptotic(const DoublyAsymptotic5& r) {
  r.validate();
  const double pi = std::numbers::pi;
  const double a1 = r.alpha[0], a2 = r.alpha[1], a3 = r.alpha[2];
  return 0.25 * (lobachevsky3(a1) + lobachevsky3(a2) -
                 0.5 * lobachevsky3(pi / 2 - a3)) -
         (lobachevsky3(pi / 2 + a1 + a2) + lobachevsky3(pi / 2 - a1 + a2)) /
             16.0 +
         3.0 / 64.0 * kZeta3;
}

/// The dissection of the 5-dimensional catalog case yields four copies of the
/// doubly asymptotic orthoscheme {4,3,3,4,3}.
inline DoublyAsymptotic5 five_dim_dissection_piece() {
  const double pi = std::numbers::pi;
  return {{pi / 4, pi / 3, pi / 3, pi / 4, pi / 3}};
}

namespace detail {

// Minimal exact fraction for the orbifold Euler characteristic sum.
struct Frac {
  std::int64_t num = 0, den = 1;
  void add(std::int64_t n, std::int64_t d) {
    num = num * d + n * den;
    den *= d;
    const std::int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return static_cast<double>(num) / den; }
};

// Order of a finite Coxeter group whose diagram is a path with the given edge
// labels; 0 when the group is infinite. Covers every path type: A, B, F4, H3,
// H4 and the dihedral rank-2 groups.
inline std::int64_t finite_path_order(const std::vector<int>& labels) {
  const int rank = static_cast<int>(labels.size()) + 1;
  if (rank == 1) return 2;
  if (rank == 2) return labels[0] >= 3 ? 2 * labels[0] : 0;
  std::vector<int> fwd = labels, rev(labels.rbegin(), labels.rend());
  auto is = [&](const std::vector<int>& pat) { return fwd == pat || rev == pat; };
  if (std::all_of(fwd.begin(), fwd.end(), [](int l) { return l == 3; })) {
    std::int64_t f = 1;  // A_rank: (rank+1)!
    for (int k = 2; k <= rank + 1; ++k) f *= k;
    return f;
  }
  {
    std::vector<int> bpat(rank - 1, 3);
    bpat[0] = 4;
    if (is(bpat)) {  // B_rank: 2^rank rank!
      std::int64_t f = 1;
      for (int k = 2; k <= rank; ++k) f *= k;
      return f << rank;
    }
  }
  if (rank == 3 && is({3, 5})) return 120;      // H3
  if (rank == 4 && is({3, 4, 3})) return 1152;  // F4
  if (rank == 4 && is({3, 3, 5})) return 14400; // H4
  return 0;
}

}  // namespace detail

/// Orbifold Euler characteristic of the reflection group of the truncated
/// orthoscheme: nodes 0..n form the weight chain, node n+1 is the truncating
/// facet, orthogonal to nodes 0..n-1 and joined to node n by the infinite
/// bond. Sums (-1)^|T| / |W_T| over all spherical generator subsets T.
inline double orbifold_euler_characteristic(const SchlafliSymbol& symbol) {
  symbol.validate();
  const std::vector<int> chain = symbol.finite_weights();
  const int n = symbol.dim();
  const int nodes = n + 2;
  detail::Frac chi;
  for (std::uint32_t mask = 0; mask < (1u << nodes); ++mask) {
    if ((mask >> n & 1u) && (mask >> (n + 1) & 1u)) continue;  // infinite bond
    std::int64_t order = 1;
    bool finite = true;
    int i = 0;
    while (i <= n && finite) {
      if (!(mask >> i & 1u)) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 <= n && (mask >> (j + 1) & 1u)) ++j;
      const std::vector<int> run(chain.begin() + i, chain.begin() + j);
      const std::int64_t o = detail::finite_path_order(run);
      if (o == 0)
        finite = false;
      else
        order *= o;
      i = j + 1;
    }
    if (!finite) continue;
    if (mask >> (n + 1) & 1u) order *= 2;  // isolated truncating generator
    const int bits = __builtin_popcount(mask);
    chi.add((bits % 2 == 0) ? 1 : -1, order);
  }
  return chi.value();
}

/// Exact even-dimensional volume via Gauss-Bonnet:
/// vol_4 = (4 pi^2 / 3) chi, vol_6 = -(8 pi^3 / 15) chi.
inline double gauss_bonnet_volume(const SchlafliSymbol& symbol) {
  const double pi = std::numbers::pi;
  const double chi = orbifold_euler_characteristic(symbol);
  if (symbol.dim() == 4) return 4.0 * pi * pi / 3.0 * chi;
  if (symbol.dim() == 6) return -8.0 * std::pow(pi, 3) / 15.0 * chi;
  throw std::invalid_argument("gauss_bonnet_volume: even dimensions only");
}

/// Volume of a catalog truncated orthoscheme. Even dimensions come from the
/// closed-form registry (cross-checked against gauss_bonnet_volume and the
/// Monte Carlo oracle); dimension 5 is assembled from four dissection pieces.
inline VolumeResult vol_truncated_orthoscheme(const SchlafliSymbol& symbol) {
  const double pi = std::numbers::pi;
  const double pi2 = pi * pi, pi3 = pi2 * pi;
  struct Entry {
    std::vector<int> weights;
    double value;
  };
  static const std::vector<Entry> registry = {
      {{4, 4, 3, 3, kInfWeight}, pi2 / 288},
      {{4, 4, 3, 4, kInfWeight}, pi2 / 144},
      {{6, 3, 3, 3, kInfWeight}, pi2 / 540},
      {{6, 3, 3, 4, kInfWeight}, pi2 / 288},
      {{6, 3, 3, 5, kInfWeight}, 61 * pi2 / 10800},
      {{6, 3, 4, 3, kInfWeight}, 5 * pi2 / 864},
      {{3, 4, 3, 3, 3, 3, kInfWeight}, pi3 / 259200},
      {{3, 4, 3, 3, 3, 4, kInfWeight}, pi3 / 86400},
  };
  if (symbol.weights == std::vector<int>{4, 3, 4, 3, 3, kInfWeight})
    return {4.0 * vol5_doubly_asymptotic(five_dim_dissection_piece()),
            VolumeMethod::DissectionPolylog, 0.0};
  for (const auto& e : registry)
    if (symbol.weights == e.weights)
      return {e.value, VolumeMethod::ClosedForm, 0.0};
  throw std::invalid_argument("vol_truncated_orthoscheme: unknown symbol " +
                              symbol.str());
}

}  // namespace horopack
