#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helixlab/helix.hpp"

using namespace helixlab;

namespace {
const Vec kE3 = {0.0, 0.0, 1.0};
}

TEST_CASE("angle of a tilted plane equals its tilt") {
  for (double theta : {0.3, 0.7, 1.2}) {
    const ImmersionChart tp = builtin("tilted_plane", {{"theta", theta}});
    CHECK(helix_angle(tp, {0.1, -0.2}, kE3) == doctest::Approx(theta));
    const HelixReport hr = is_helix(tp, kE3, 30, 1e-9);
    CHECK(hr.is_helix);
    CHECK_FALSE(hr.is_cylinder);
    CHECK(hr.angle_mean == doctest::Approx(theta));
    // |grad h| = cos(theta) exactly on a constant-angle chart.
    CHECK(hr.eikonal_residual < 1e-12);
  }
}

TEST_CASE("cylinders over plane curves") {
  for (int profile : {0, 1, 2}) {
    const ImmersionChart cyl =
        builtin("cylinder", {{"profile", double(profile)}, {"radius", 1.0}});
    const HelixReport hr = is_helix(cyl, kE3, 25, 1e-9);
    CHECK(hr.is_helix);
    CHECK(hr.is_cylinder);
    CHECK(hr.angle_mean == doctest::Approx(0.0));
  }
}

TEST_CASE("cone makes a constant angle with its axis") {
  for (double k : {0.5, 1.0, 2.0}) {
    const ImmersionChart cone = builtin("cone", {{"k", k}});
    const HelixReport hr = is_helix(cone, kE3, 40, 1e-8);
    CHECK(hr.is_helix);
    // graph slope k along the radial direction: theta = arccos of
    // k/sqrt(1+k^2) measured against d... the angle with d satisfies
    // cos(theta) = |grad h| = k/sqrt(1+k^2).
    CHECK(std::cos(hr.angle_mean) == doctest::Approx(k / std::sqrt(1 + k * k)));
  }
  // The catenoid is not a helix for the vertical direction.
  CHECK_FALSE(is_helix(builtin("catenoid"), kE3, 30, 1e-6).is_helix);
}

TEST_CASE("tangential T field") {
  const ImmersionChart tp = builtin("tilted_plane", {{"theta", 0.6}});
  const Vec t = tangential_T(tp, {0.0, 0.0}, kE3);
  CHECK(norm(t) == doctest::Approx(1.0));
  // T is the normalized tangential projection of d: within the plane spanned
  // by (1, 0, cot 0.6) and e2, the projection lies along the first generator.
  const Vec gen = normalized({1.0, 0.0, 1.0 / std::tan(0.6)});
  CHECK(std::abs(dot(t, gen)) == doctest::Approx(1.0));

  // Horizontal chart: d is fully normal, so T is undefined.
  const ImmersionChart flat = builtin("tilted_plane", {{"theta", M_PI / 2.0}});
  CHECK_THROWS_AS(tangential_T(flat, {0.0, 0.0}, kE3), VerticalDirection);
}

TEST_CASE("ruled helices have straight T-curves") {
  const ImmersionChart cone = builtin("cone", {{"k", 1.0}});
  const RuledResult rr = is_ruled(cone, kE3, 10, 50, 1e-8);
  CHECK(rr.residual < 1e-6);

  const ImmersionChart tp = builtin("tilted_plane", {{"theta", 0.5}});
  CHECK(is_ruled(tp, kE3, 10, 50, 1e-8).residual < 1e-10);

  // The helicoid is not a constant-angle surface for its axis (the normal's
  // vertical component varies along the rulings).
  CHECK_FALSE(is_helix(builtin("helicoid"), kE3, 30, 1e-8).is_helix);

  // A circular helix curve is a helix whose T-curves wind, so it is not ruled.
  const ImmersionChart winding = graph_immersion(builtin("circle"), linear_field({0.9}));
  const Vec e4 = {0.0, 0.0, 0.0, 1.0};
  CHECK(is_helix(winding, e4, 30, 1e-8).is_helix);
  CHECK(is_ruled(winding, e4, 10, 50, 1e-8).residual > 1e-3);
}

TEST_CASE("structure equation nabla_X T = tan(theta) A^xi X") {
  Rng rng(13);
  for (double k : {0.5, 1.0, 2.0}) {
    const ImmersionChart cone = builtin("cone", {{"k", k}});
    for (int s = 0; s < 10; ++s) {
      const Vec u = cone.sample(rng, 0.1);
      CHECK(structure_equation_residual(cone, kE3, u) < 1e-6);
    }
  }
  const ImmersionChart tp = builtin("tilted_plane", {{"theta", 0.8}});
  CHECK(structure_equation_residual(tp, kE3, {0.2, 0.1}) < 1e-8);
}

TEST_CASE("laplacian of the height function") {
  Rng rng(17);
  const ImmersionChart cone = builtin("cone", {{"k", 1.5}});
  for (int s = 0; s < 8; ++s) {
    const Vec u = cone.sample(rng, 0.1);
    const LaplacianHeightResult lh = laplacian_height_check(cone, kE3, u);
    CHECK(lh.lhs == doctest::Approx(lh.rhs1).epsilon(1e-8));
    CHECK(lh.has_rhs2);
    CHECK(lh.rhs1 == doctest::Approx(lh.rhs2).epsilon(1e-8));
  }
  // Minimal chart: the height function is harmonic in every direction.
  const ImmersionChart cat = builtin("catenoid");
  for (int s = 0; s < 5; ++s) {
    const Vec u = cat.sample(rng, 0.1);
    const Vec d = normalized({0.3, -0.4, 0.85});
    CHECK(std::abs(laplacian_height_check(cat, d, u).lhs) < 1e-7);
  }
}

TEST_CASE("complex structure and complex helices") {
  CHECK(complex_structure({1.0, 0.0, 0.0, 0.0}) == Vec{0.0, 1.0, 0.0, 0.0});
  CHECK(complex_structure({0.0, 1.0, 2.0, 0.0}) == Vec{-1.0, 0.0, 0.0, 2.0});

  const ImmersionChart cl = builtin("complex_line");
  const Vec d4 = normalized({0.4, 0.1, 0.6, 0.2});
  const ComplexHelixResult res = complex_helix_checks(cl, d4, {0.1, -0.2});
  CHECK(res.jt_geodesic_residual < 1e-8);
  CHECK(res.bracket_residual < 1e-6);

  // A real plane spanned by e1, e3 in R^4 is not J-invariant.
  const ImmersionChart real_plane(2, 4, {{-1, 1}, {-1, 1}}, "real_plane",
                                  [](const Vec& u) {
                                    Jet2 j;
                                    j.value = {u[0], 0.0, u[1], 0.0};
                                    j.jacobian = Mat(4, 2);
                                    j.jacobian(0, 0) = 1.0;
                                    j.jacobian(2, 1) = 1.0;
                                    j.hessians.assign(4, Mat(2, 2));
                                    return j;
                                  });
  CHECK_THROWS_AS(complex_helix_checks(real_plane, d4, {0.1, 0.1}),
                  NonComplexSubmanifold);
}

TEST_CASE("gauss image of a helix hypersurface is a single height") {
  CHECK(gauss_image_check(builtin("cone", {{"k", 1.0}}), kE3, 30) < 1e-10);
  CHECK(gauss_image_check(builtin("tilted_plane"), kE3, 30) < 1e-12);
  CHECK(gauss_image_check(builtin("catenoid"), kE3, 30) > 1e-2);
}

TEST_CASE("Ricci in the T direction vanishes along rulings") {
  const ImmersionChart cone = builtin("cone", {{"k", 1.0}});
  const RicciTResult res = ricci_T_check(cone, kE3, {1.0, 0.9});
  CHECK(res.applicable);  // A T = 0: T spans the relative nullity
  CHECK(std::abs(res.ric_tt) < 1e-5);
}

TEST_CASE("affine rank distinguishes full charts") {
  CHECK(affine_rank(builtin("tilted_plane"), 40) == 2);
  CHECK(affine_rank(builtin("line"), 40) == 1);
  CHECK(affine_rank(builtin("helicoid"), 40) == 3);
  CHECK(affine_rank(builtin("complex_line"), 40) == 2);
  CHECK(affine_rank(builtin("complex_parabola"), 40) == 4);
}
