#include "catch_amalgamated.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "horopack/polylog.hpp"
#include "oracles.hpp"

using namespace horopack;
using std::numbers::pi;

TEST_CASE("classical polylog values") {
  CHECK(dilog({1.0, 0.0}).real() == Catch::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(std::abs(dilog({1.0, 0.0}).imag()) < 1e-14);
  CHECK(trilog({1.0, 0.0}).real() == Catch::Approx(kZeta3).epsilon(1e-14));
  CHECK(trilog({-1.0, 0.0}).real() ==
        Catch::Approx(-0.75 * kZeta3).epsilon(1e-13));
  CHECK(std::abs(trilog({-1.0, 0.0}).imag()) < 1e-13);
}

TEST_CASE("lobachevsky3 anchors and symmetry") {
  CHECK(lobachevsky3(0.0) == Catch::Approx(kZeta3 / 4).epsilon(1e-14));
  CHECK(lobachevsky3(pi / 2) == Catch::Approx(-3.0 * kZeta3 / 16).epsilon(1e-13));
  CHECK(lobachevsky3(pi / 6) == Catch::Approx(kZeta3 / 12).epsilon(1e-12));
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng);
    CHECK(lobachevsky3(a) == Catch::Approx(lobachevsky3(a + pi)).margin(1e-13));
    CHECK(lobachevsky3(a) == Catch::Approx(lobachevsky3(-a)).margin(1e-13));
  }
}

TEST_CASE("clausen3 agrees with the direct series") {
  // tail of the order-3 series after K terms is below 1/(2 K^2)
  for (double t : {0.31, 1.2345, 2.2, 2.9, 4.4, 6.1}) {
    CHECK(clausen3(t) == Catch::Approx(oracles::direct_cl3(t)).margin(5e-12));
  }
}

TEST_CASE("clausen2 agrees with its defining integral") {
  // Cl2(pi/2) is Catalan's constant; anchor there to avoid the log
  // singularity of the integrand at zero.
  const double catalan = 0.91596559417721901505;
  CHECK(clausen2(std::numbers::pi / 2) == Catch::Approx(catalan).margin(1e-14));
  for (double t : {0.4, 1.0, 1.9, 2.7, 3.1}) {
    const double q =
        catalan - oracles::integrate(
                      [](double x) {
                        return std::log(std::abs(2.0 * std::sin(x / 2)));
                      },
                      std::numbers::pi / 2, t, 1e-14);
    CHECK(clausen2(t) == Catch::Approx(q).margin(2e-12));
  }
  // duplication: Cl2(2t) = 2 Cl2(t) - 2 Cl2(pi - t)
  for (double t : {0.3, 0.8, 1.4}) {
    CHECK(clausen2(2 * t) ==
          Catch::Approx(2 * clausen2(t) - 2 * clausen2(pi - t)).margin(1e-13));
  }
}

TEST_CASE("interior polylog values satisfy the square identities") {
  // Li_s(z) + Li_s(-z) = 2^{1-s} Li_s(z^2)
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.65, 0.65);
  for (int i = 0; i < 40; ++i) {
    const std::complex<double> z{u(rng), u(rng)};
    if (std::abs(z) > 0.9) continue;
    const auto lhs2 = dilog(z) + dilog(-z);
    CHECK(std::abs(lhs2 - 0.5 * dilog(z * z)) < 1e-13);
    const auto lhs3 = trilog(z) + trilog(-z);
    CHECK(std::abs(lhs3 - 0.25 * trilog(z * z)) < 1e-13);
  }
}

TEST_CASE("polylog domain errors") {
  CHECK_THROWS_AS(dilog({1.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(trilog({0.0, 1.5}), std::domain_error);
}

TEST_CASE("even zeta values") {
  CHECK(zeta_even(1) == Catch::Approx(pi * pi / 6).epsilon(1e-15));
  double s8 = 0.0;
  for (int k = 200; k >= 1; --k) s8 += std::pow(k, -8.0);
  CHECK(zeta_even(4) == Catch::Approx(s8).epsilon(1e-14));
}
