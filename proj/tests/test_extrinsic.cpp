#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helixlab/extrinsic.hpp"

using namespace helixlab;

TEST_CASE("frames are orthonormal and span the right spaces") {
  for (const char* name : {"catenoid", "cone", "round_sphere", "complex_parabola",
                           "circle"}) {
    INFO(name);
    const ImmersionChart chart = builtin(name);
    Rng rng(31);
    for (int s = 0; s < 5; ++s) {
      const Vec u = chart.sample(rng);
      const FramePack fp = frames(chart, u);
      const Jet2 jet = chart.jet(u);
      CHECK(static_cast<int>(fp.tangent.size()) == chart.m());
      CHECK(static_cast<int>(fp.normal.size()) == chart.n() - chart.m());
      for (size_t i = 0; i < fp.tangent.size(); ++i) {
        CHECK(norm(fp.tangent[i]) == doctest::Approx(1.0));
        // tangent_chart coefficients reproduce the frame through the jacobian
        CHECK(norm(sub(jet.jacobian * fp.tangent_chart[i], fp.tangent[i])) < 1e-10);
        for (size_t j = 0; j < fp.normal.size(); ++j)
          CHECK(std::abs(dot(fp.tangent[i], fp.normal[j])) < 1e-10);
      }
      for (size_t i = 0; i < fp.normal.size(); ++i)
        for (size_t j = 0; j < fp.normal.size(); ++j)
          CHECK(dot(fp.normal[i], fp.normal[j]) ==
                doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("tangent projector") {
  const ImmersionChart tp = builtin("tilted_plane");
  const Jet2 jet = tp.jet({0.1, 0.2});
  const Mat p = tangent_projector(jet.jacobian);
  CHECK((p * p - p).max_abs() < 1e-12);  // idempotent
  // Columns of the jacobian are fixed points.
  for (int j = 0; j < 2; ++j) {
    const Vec col = jet.jacobian.column(j);
    CHECK(norm(sub(tangent_project(jet.jacobian, col), col)) < 1e-12);
  }
}

TEST_CASE("degenerate immersions are rejected") {
  const ImmersionChart bad(1, 2, {{-1.0, 1.0}}, "bad", [](const Vec&) {
    Jet2 j;
    j.value = {0.0, 0.0};
    j.jacobian = Mat(2, 1);  // zero jacobian
    j.hessians.assign(2, Mat(1, 1));
    return j;
  });
  CHECK_THROWS_AS(frames(bad, {0.0}), DegenerateImmersion);
}

TEST_CASE("sphere shape operator is -1/r times the identity") {
  const double r = 1.4;
  const ImmersionChart sphere = builtin("round_sphere", {{"r", r}});
  Rng rng(41);
  for (int s = 0; s < 6; ++s) {
    const Vec u = sphere.sample(rng);
    const FramePack fp = frames(sphere, u);
    const ShapePack sp = second_fundamental_form(sphere.jet(u), fp);
    const Vec outward = normalized(sphere.point(u));
    const Mat a = shape_operator(sp, fp, outward);
    CHECK((a - Mat::identity(2) * (-1.0 / r)).max_abs() < 1e-9);
    // H = trace(A_outward) * outward for a hypersurface with unit normal.
    CHECK(dot(sp.mean_curvature, outward) == doctest::Approx(-2.0 / r));
    CHECK(norm(sp.mean_curvature) == doctest::Approx(2.0 / r));
  }
}

TEST_CASE("cylinder principal curvatures") {
  const double r = 2.0;
  const ImmersionChart cyl = builtin("cylinder", {{"profile", 0.0}, {"radius", r}});
  const Vec u = {1.1, 0.3};
  const FramePack fp = frames(cyl, u);
  const ShapePack sp = second_fundamental_form(cyl.jet(u), fp);
  const Vec p = cyl.point(u);
  const Vec outward = normalized({p[0], p[1], 0.0});
  const EigenSystem eig = sym_eig(shape_operator(sp, fp, outward));
  CHECK(eig.values[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(eig.values[1] == doctest::Approx(-1.0 / r));
}

TEST_CASE("minimal surfaces have vanishing mean curvature") {
  for (const char* name : {"catenoid", "helicoid", "complex_parabola",
                           "complex_line", "tilted_plane", "line"}) {
    INFO(name);
    const MinimalityReport rep = minimality_report(builtin(name), 30, 1e-8);
    CHECK(rep.is_minimal);
  }
  CHECK_FALSE(minimality_report(builtin("round_sphere"), 20, 1e-8).is_minimal);
  CHECK_FALSE(minimality_report(builtin("cone"), 20, 1e-8).is_minimal);
}

TEST_CASE("second fundamental form agrees with a finite-difference oracle") {
  for (const char* name : {"catenoid", "cone", "round_sphere"}) {
    INFO(name);
    const ImmersionChart chart = builtin(name);
    Rng rng(51);
    for (int s = 0; s < 4; ++s) {
      const Vec u = chart.sample(rng, 0.1);
      const FramePack fp = frames(chart, u);
      const ShapePack exact = second_fundamental_form(chart.jet(u), fp);
      const Jet2 fd = fd_jet2([&chart](const Vec& x) { return chart.point(x); }, u,
                              1e-4);
      const ShapePack approx = second_fundamental_form(fd, fp);
      for (size_t k = 0; k < exact.alpha.size(); ++k)
        CHECK((exact.alpha[k] - approx.alpha[k]).max_abs() < 1e-5);
      CHECK(norm(sub(exact.mean_curvature, approx.mean_curvature)) < 1e-5);
    }
  }
}

TEST_CASE("circle curvature vector points inward with norm 1/r") {
  const double r = 1.6;
  const ImmersionChart circle = builtin("circle", {{"r", r}});
  const Vec u = {0.9};
  const Vec h = mean_curvature(circle, u);
  CHECK(norm(h) == doctest::Approx(1.0 / r));
  CHECK(dot(h, normalized(circle.point(u))) == doctest::Approx(-1.0 / r));
}
