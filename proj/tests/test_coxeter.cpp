#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "horopack/coxeter.hpp"
#include "horopack/lorentz.hpp"

using namespace horopack;
using std::numbers::pi;

namespace {

const std::vector<std::vector<VertexClass>>& expected_classes() {
  using V = VertexClass;
  static const std::vector<std::vector<V>> t = {
      {V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Ideal, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Ideal, V::Proper, V::Proper, V::Proper, V::Ideal, V::UltraIdeal},
      {V::Proper, V::Proper, V::Proper, V::Proper, V::Proper, V::Ideal,
       V::UltraIdeal},
      {V::Ideal, V::Proper, V::Proper, V::Proper, V::Proper, V::Ideal,
       V::UltraIdeal},
  };
  return t;
}

}  // namespace

TEST_CASE("symbol parsing") {
  CHECK(parse_symbol("{4,4,3,4,inf}").str() == "{4,4,3,4,inf}");
  CHECK(parse_symbol("4 4 3 4 inf").str() == "{4,4,3,4,inf}");
  CHECK(parse_symbol("{4,3,4,3,3,\xe2\x88\x9e}").str() == "{4,3,4,3,3,inf}");
  CHECK_THROWS_AS(parse_symbol("{4,4,x,4,inf}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("{4,4,3,4}"), std::invalid_argument);  // no inf
  CHECK_THROWS_AS(parse_symbol("{1,3,3,3,inf}"), std::invalid_argument);
  CHECK(catalog().size() == 9);
  CHECK(in_catalog(parse_symbol("{3,4,3,3,3,4,inf}")));
  CHECK(!in_catalog(parse_symbol("{9,9,9,inf}")));
}

TEST_CASE("gram matrix from a symbol") {
  // one-weight chain, 2x2
  const Mat g1 = gram_from_weights({3});
  CHECK(g1(0, 1) == Catch::Approx(-0.5).margin(1e-15));
  CHECK(g1(0, 0) == 1.0);

  // the published 5x5 matrix of {4,4,3,4,inf}
  const Mat g = gram_from_symbol(parse_symbol("{4,4,3,4,inf}"));
  const double s2 = std::sqrt(2.0) / 2;
  Mat expect(5, 5);
  expect << 1, -s2, 0, 0, 0,
            -s2, 1, -s2, 0, 0,
            0, -s2, 1, -0.5, 0,
            0, 0, -0.5, 1, -s2,
            0, 0, 0, -s2, 1;
  CHECK((g - expect).cwiseAbs().maxCoeff() < 1e-15);

  // 6x6 sub-diagonal of {4,3,4,3,3,inf}
  const Mat g5 = gram_from_symbol(parse_symbol("{4,3,4,3,3,inf}"));
  const double sub[] = {-s2, -0.5, -s2, -0.5, -0.5};
  for (int i = 0; i < 5; ++i)
    CHECK(g5(i, i + 1) == Catch::Approx(sub[i]).margin(1e-15));

  CHECK_THROWS_AS(gram_from_weights({1, 3}), std::invalid_argument);
}

TEST_CASE("inverse classification of the published case") {
  const Mat g = gram_from_symbol(parse_symbol("{4,4,3,4,inf}"));
  const Classification c = invert_and_classify(g);
  CHECK(std::abs(c.inverse(0, 0)) < 1e-12);
  CHECK(std::abs(c.inverse(3, 3)) < 1e-12);
  CHECK(c.inverse(4, 4) == Catch::Approx(1.0).margin(1e-12));
  CHECK(c.classes == expected_classes()[1]);
  // a few published inverse entries
  CHECK(c.inverse(0, 1) == Catch::Approx(-std::sqrt(2.0)).margin(1e-12));
  CHECK(c.inverse(1, 2) == Catch::Approx(-2 * std::sqrt(2.0)).margin(1e-12));
  CHECK(c.inverse(2, 2) == Catch::Approx(-2.0).margin(1e-12));
}

TEST_CASE("vertex classification across the catalog") {
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    const Classification c =
        invert_and_classify(gram_from_symbol(catalog()[k]));
    INFO(catalog()[k].str());
    CHECK(c.classes == expected_classes()[k]);
  }
}

TEST_CASE("realize: Gram round trip, incidences, polar parallelism") {
  for (const auto& s : catalog()) {
    INFO(s.str());
    const RealizedOrthoscheme orth = realize(s);
    const int n = orth.n;
    const Mat jm = lorentz_metric(n);
    const Mat g2 = orth.normals * jm * orth.normals.transpose();
    CHECK((g2 - orth.gram).cwiseAbs().maxCoeff() < 1e-9);

    // orthogonality pattern: non-adjacent facets have exactly zero entries
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (std::abs(i - j) >= 2) CHECK(orth.gram(i, j) == 0.0);

    for (int i = 0; i <= n; ++i) {
      CHECK(orth.vertices(i, 0) == Catch::Approx(1.0).margin(1e-12));
      for (int j = 0; j <= n; ++j) {
        const double ip = linner(Vec(orth.vertex(i)), Vec(orth.normal(j)));
        if (i != j) CHECK(std::abs(ip) < 1e-9);
      }
    }
    CHECK(std::abs(orth.polar_parallelism - 1.0) < 1e-9);
    CHECK(std::abs(linner(orth.polar, orth.polar) - 1.0) < 1e-12);
  }
}

TEST_CASE("realize: truncation points") {
  for (const auto& s : catalog()) {
    const RealizedOrthoscheme orth = realize(s);
    for (int i = 0; i <= orth.n - 2; ++i) {
      const Vec t = orth.truncation_point(i);
      CHECK(std::abs(linner(t, orth.polar)) < 1e-9);
      CHECK(classify_point(t) == PointClass::Inner);
      if (orth.vertex_class[i] == VertexClass::Proper) {
        const double d = distance(Vec(orth.vertex(i)), t);
        CHECK(d > 0.0);
        CHECK(std::isfinite(d));
      }
    }
    // A_{n-1} lies on the truncating hyperplane
    CHECK(std::abs(linner(Vec(orth.vertex(orth.n - 1)), orth.polar)) < 1e-9);
  }
}

TEST_CASE("published coordinate frames are reproduced verbatim") {
  const RealizedOrthoscheme o4 = realize(parse_symbol("{4,4,3,4,inf}"));
  Mat v4(5, 5);
  const double r2 = std::sqrt(2.0);
  v4 << 1, 0, 1, 0, 0,
        1, 0, 0, 0, 0,
        1, 0.5, 0, 0.5, 0,
        1, 1, 0, 0, 0,
        1, 1, 0, 0, r2 / 2;
  CHECK((o4.vertices - v4).cwiseAbs().maxCoeff() < 1e-12);

  const RealizedOrthoscheme o5 = realize(parse_symbol("{4,3,4,3,3,inf}"));
  Vec a0(6);
  a0 << 1, std::sqrt(30.0) / 6, std::sqrt(6.0) / 6, 0, 0, 0;
  CHECK((Vec(o5.vertex(0)) - a0).cwiseAbs().maxCoeff() < 1e-12);

  // remaining cases use the canonical frame centred at vertex A_1
  for (const auto& s : catalog()) {
    if (s.str() == "{4,3,4,3,3,inf}") continue;
    const RealizedOrthoscheme orth = realize(s);
    Vec e0 = Vec::Zero(orth.n + 1);
    e0[0] = 1.0;
    CHECK((Vec(orth.vertex(1)) - e0).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("strict mode accepts only catalog symbols") {
  CHECK_THROWS_AS(realize(parse_symbol("{9,9,9,inf}")), std::invalid_argument);
  CHECK_THROWS_AS(realize(parse_symbol("{4,3,4,inf}"), RealizeMode::Permissive),
                  std::invalid_argument);  // parabolic, degenerate Gram
}

TEST_CASE("permissive mode realizes signature-valid symbols") {
  // truncated orthoscheme without parallel faces
  const RealizedOrthoscheme orth =
      realize(parse_symbol("{10,5,3,inf}"), RealizeMode::Permissive);
  CHECK(orth.vertex_class[3] == VertexClass::UltraIdeal);
  CHECK(std::abs(orth.polar_parallelism - 1.0) > 1e-6);  // divergent pair

  // spherical chain has no hyperbolic realization
  CHECK_THROWS_AS(realize(parse_symbol("{3,3,3,inf}"), RealizeMode::Permissive),
                  std::invalid_argument);
}

TEST_CASE("five-dimensional parabolicity identities") {
  auto c2 = [](int w) { return std::pow(std::cos(pi / w), 2); };
  auto s2 = [](int w) { return std::pow(std::sin(pi / w), 2); };
  {  // {4,3,4,3,3}: the A_0 principal submatrix is parabolic
    const int v1 = 4, v2 = 3, v3 = 4, v4 = 3, v5 = 3;
    (void)v1;
    CHECK(c2(v3) / s2(v2) + c2(v4) / s2(v5) == Catch::Approx(1.0).margin(1e-12));
  }
  {  // dissection piece {4,3,3,4,3}: both principal submatrices parabolic
    const int v1 = 4, v2 = 3, v3 = 3, v4 = 4, v5 = 3;
    CHECK(c2(v3) / s2(v2) + c2(v4) / s2(v5) == Catch::Approx(1.0).margin(1e-12));
    CHECK(c2(v2) / s2(v1) + c2(v3) / s2(v4) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("signature checks") {
  const SignatureInfo sig = signature(gram_from_symbol(parse_symbol("{4,4,3,4,inf}")));
  CHECK(sig.negative == 1);
  CHECK(sig.positive == 4);
  CHECK(sig.zero == 0);
  const SignatureInfo par = signature(gram_from_weights({4, 3, 4}));
  CHECK(par.zero == 1);
}
