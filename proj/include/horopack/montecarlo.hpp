#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "horopack/coxeter.hpp"
#include "horopack/horoball.hpp"
#include "horopack/volume.hpp"

// Monte Carlo volume oracle. Ideal-vertex neighbourhoods are cut with
// admissible horoballs (their volume is added analytically) and the compact
// remainder is integrated in Klein coordinates with density
// (1 - |y|^2)^{-(n+1)/2}. Proposals are drawn uniformly from the exact
// simplex dissection of the domain (the cone over the facet opposite
// A_{n-1}), then rejection-tested against the facet half-spaces and the cusp
// horoballs. Reproducible per (seed, samples, chunk size): chunks have
// independent substreams and are reduced in fixed order.
namespace horopack {

struct McOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  std::uint64_t chunk = 1u << 16;
  int threads = 0;  // 0: HOROPACK_THREADS or hardware_concurrency
};

inline int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 256);
  if (const char* env = std::getenv("HOROPACK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 256);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 256u)) : 1;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline double uniform01(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

// Klein-coordinate vertices of the cone simplices over the staircase
// dissection of the facet opposite A_{n-1}; together they tile the domain.
inline std::vector<Mat> domain_simplices(const RealizedOrthoscheme& orth) {
  const int n = orth.n;
  std::vector<Vec> base;  // endpoints of the opposite facet polytope
  for (int i = 0; i <= n - 2; ++i) base.push_back(klein_coords(orth.vertex(i)));
  for (int i = 0; i <= n - 2; ++i)
    base.push_back(klein_coords(orth.truncation_point(i)));
  const Vec apex = klein_coords(orth.vertex(n - 1));
  std::vector<Mat> simplices;
  for (int k = 0; k <= n - 2; ++k) {
    Mat s(n + 1, n);
    int r = 0;
    s.row(r++) = apex;
    for (int i = 0; i <= k; ++i) s.row(r++) = base[n - 1 + i];
    for (int i = k; i <= n - 2; ++i) s.row(r++) = base[i];
    simplices.push_back(s);
  }
  return simplices;
}

inline double simplex_euclid_volume(const Mat& s) {
  const int n = static_cast<int>(s.cols());
  Mat e(n, n);
  for (int i = 1; i <= n; ++i) e.row(i - 1) = s.row(i) - s.row(0);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return std::abs(e.determinant()) / fact;
}

}  // namespace detail

/// One admissible horoball per ideal vertex, shrunk a little inside
/// admissibility so the remainder stays clear of the cusps.
inline std::vector<Horoball> default_cusp_cut(const RealizedOrthoscheme& orth,
                                              double shrink = 0.01) {
  std::vector<Horoball> cuts;
  for (int v : orth.ideal_vertices()) {
    const double smax = max_admissible_horoball(orth, v).ball.s;
    cuts.push_back({v, smax + shrink * (1.0 - smax)});
  }
  return cuts;
}

/// Monte Carlo estimate of the truncated orthoscheme volume.
inline VolumeResult mc_volume(const RealizedOrthoscheme& orth,
                              const std::vector<Horoball>& cusp_cut,
                              const McOptions& opts) {
  if (opts.samples == 0) throw std::invalid_argument("mc_volume: samples == 0");
  if (opts.chunk == 0) throw std::invalid_argument("mc_volume: chunk == 0");
  const int n = orth.n;

  for (int v : orth.ideal_vertices()) {
    bool covered = false;
    for (const Horoball& b : cusp_cut) covered |= (b.center == v);
    if (!covered)
      throw std::invalid_argument(
          "mc_volume: ideal vertex without a cusp horoball: vertex " +
          std::to_string(v));
  }
  double piece_total = 0.0;
  for (const Horoball& b : cusp_cut) {
    const double smax = max_admissible_horoball(orth, b.center).ball.s;
    if (b.s < smax - 1e-9)
      throw std::invalid_argument("mc_volume: cusp horoball not admissible");
    piece_total += horoball_piece_volume(orth, b);
  }

  const std::vector<Mat> simplices = detail::domain_simplices(orth);
  std::vector<double> cum;  // cumulative Euclidean simplex volumes
  double total_euclid = 0.0;
  for (const Mat& s : simplices) {
    total_euclid += detail::simplex_euclid_volume(s);
    cum.push_back(total_euclid);
  }
  if (total_euclid <= 0)
    throw std::runtime_error("mc_volume: degenerate domain dissection");

  const Mat jm = lorentz_metric(n);
  std::vector<Vec> facet_mv;  // metric-applied inward forms
  for (int i = 0; i < orth.facet_count(); ++i)
    facet_mv.push_back(jm * orth.facet_form(i));
  struct Cut {
    Vec mc;  // metric-applied centre
    double s;
  };
  std::vector<Cut> cuts;
  for (const Horoball& b : cusp_cut)
    cuts.push_back({jm * orth.vertex(b.center), b.s});

  const std::uint64_t nchunks = (opts.samples + opts.chunk - 1) / opts.chunk;
  struct ChunkStat {
    double sum = 0.0, sum2 = 0.0;
    std::uint64_t accepted = 0;
  };
  std::vector<ChunkStat> stats(nchunks);

  auto run_chunk = [&](std::uint64_t ci) {
    std::mt19937_64 eng(detail::splitmix64(opts.seed ^ (ci * 0x9E3779B97F4A7C15ull)));
    const std::uint64_t begin = ci * opts.chunk;
    const std::uint64_t len = std::min<std::uint64_t>(opts.chunk, opts.samples - begin);
    ChunkStat st;
    Vec x(n + 1);
    x[0] = 1.0;
    std::vector<double> lam(n + 1);
    for (std::uint64_t k = 0; k < len; ++k) {
      // pick a simplex by volume, then a uniform barycentric point in it
      const double pick = detail::uniform01(eng) * total_euclid;
      std::size_t si = 0;
      while (si + 1 < cum.size() && pick > cum[si]) ++si;
      double lsum = 0.0;
      for (int i = 0; i <= n; ++i) {
        lam[i] = -std::log(detail::uniform01(eng));
        lsum += lam[i];
      }
      const Mat& sx = simplices[si];
      for (int d = 0; d < n; ++d) {
        double c = 0.0;
        for (int i = 0; i <= n; ++i) c += lam[i] * sx(i, d);
        x[d + 1] = c / lsum;
      }
      const double yy = x.tail(n).squaredNorm();
      if (yy >= 1.0) continue;
      bool inside = true;
      for (const Vec& f : facet_mv)
        if (x.dot(f) < -1e-12) {
          inside = false;
          break;
        }
      if (!inside) continue;
      const double q = yy - 1.0;  // <x,x>
      bool in_cut = false;
      for (const Cut& c : cuts) {
        const double xc = x.dot(c.mc);
        if ((c.s - 1.0) * q - (1.0 + c.s) * xc * xc >= 0.0) {
          in_cut = true;
          break;
        }
      }
      if (in_cut) continue;
      const double w = std::pow(1.0 - yy, -(n + 1) / 2.0);
      st.sum += w;
      st.sum2 += w * w;
      ++st.accepted;
    }
    stats[ci] = st;
  };

  const int nthreads = resolve_threads(opts.threads);
  if (nthreads <= 1 || nchunks <= 1) {
    for (std::uint64_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t ci; (ci = next.fetch_add(1)) < nchunks;) run_chunk(ci);
      });
    for (auto& th : pool) th.join();
  }

  double sum = 0.0, sum2 = 0.0;
  std::uint64_t accepted = 0;
  for (const ChunkStat& st : stats) {  // fixed reduction order
    sum += st.sum;
    sum2 += st.sum2;
    accepted += st.accepted;
  }
  if (accepted == 0)
    throw std::runtime_error("mc_volume: zero acceptance rate");
  const double nn = static_cast<double>(opts.samples);
  const double mean = sum / nn;
  const double var = std::max(0.0, sum2 / nn - mean * mean) / nn;
  VolumeResult res;
  res.value = piece_total + total_euclid * mean;
  res.method = VolumeMethod::MonteCarlo;
  res.stderror = total_euclid * std::sqrt(var);
  return res;
}

}  // namespace horopack
