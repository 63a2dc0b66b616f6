#include "catch_amalgamated.hpp"

#include <random>

#include "horopack/cayley_menger.hpp"
#include "oracles.hpp"

using namespace horopack;

TEST_CASE("classical simplex volumes") {
  Mat tri = Mat::Ones(3, 3) - Mat::Identity(3, 3);
  CHECK(cayley_menger_volume(tri) ==
        Catch::Approx(std::sqrt(3.0) / 4).epsilon(1e-14));
  Mat tet = Mat::Ones(4, 4) - Mat::Identity(4, 4);
  CHECK(cayley_menger_volume(tet) ==
        Catch::Approx(std::sqrt(2.0) / 12).epsilon(1e-14));
}

TEST_CASE("random simplices match the coordinate oracle") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int m = 2; m <= 5; ++m) {
    int done = 0;
    while (done < 100) {
      Mat pts(m + 1, m);
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j < m; ++j) pts(i, j) = u(rng);
      const double vol = oracles::simplex_volume_from_points(pts);
      if (vol < 1e-3) continue;  // keep the relative comparison meaningful
      Mat L = Mat::Zero(m + 1, m + 1);
      for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
          L(i, j) = L(j, i) = (pts.row(i) - pts.row(j)).norm();
      CHECK(cayley_menger_volume(L) == Catch::Approx(vol).epsilon(1e-9));
      ++done;
    }
  }
}

TEST_CASE("non-realizable lengths are rejected") {
  Mat L(3, 3);
  L << 0, 1, 3,
       1, 0, 1,
       3, 1, 0;  // violates the triangle inequality
  CHECK_THROWS_AS(cayley_menger_volume(L), std::domain_error);
  Mat bad(3, 3);
  bad << 0, 1, 1,
         1, 0.5, 1,
         1, 1, 0;  // nonzero diagonal
  CHECK_THROWS_AS(cayley_menger_volume(bad), std::invalid_argument);
}

TEST_CASE("degenerate simplices have zero volume") {
  // four collinear-ish points: volume collapses to ~0 without throwing
  Mat pts(3, 2);
  pts << 0, 0,
         1, 0,
         2, 0;
  Mat L = Mat::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      L(i, j) = L(j, i) = (pts.row(i) - pts.row(j)).norm();
  CHECK(cayley_menger_volume(L) < 1e-12);
}
