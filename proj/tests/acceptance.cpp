// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "helixlab/extrinsic.hpp"
#include "helixlab/helix.hpp"
#include "helixlab/intrinsic.hpp"
#include "helixlab/offset.hpp"
#include "helixlab/report.hpp"
#include "helixlab/trace_lemma.hpp"

using namespace helixlab;

namespace {

int failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* format, double a, double b) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b);
  return buf;
}

// 1. Exact verification table for the e^{2z}dx^2 + e^{-2z}dy^2 + dz^2 metric.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig config;
  const Report rep = cmd_sol(config);
  double worst = 0.0;
  for (const ReportRecord& r : rep.records) worst = std::max(worst, r.residual);
  const double secs = seconds_since(t0);
  verdict(1, rep.all_pass && worst < 1e-8 && secs < 1.0,
          fmt("solvable-geometry table, worst residual %.2e in %.2fs", worst, secs));
}

// 2. Offset metric and shape-trace formulas vs brute force, 50 pairs x 5 t.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto corpus = normal_field_corpus(50, 20240817);
  const Vec t_values = {0.04, 0.08, 0.12, 0.16, 0.2};
  double worst = 0.0;
  for (const NormalField& field : corpus) {
    Rng rng(97);
    for (double t : t_values) {
      const ImmersionChart offset = offset_immersion(field, t);
      const Vec u = field.base.sample(rng, 0.1);
      const OffsetData data = offset_data(field, u);
      const Mat jac = offset.jet(u).jacobian;
      const int m = field.base.m();
      Mat direct(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
          direct(r, c) = dot(jac * data.frame_chart[r], jac * data.frame_chart[c]);
      worst = std::max(worst, (offset_metric(field, u, t) - direct).max_abs() /
                                  std::max(1.0, direct.max_abs()));

      const FramePack fp = frames(offset, u);
      const ShapePack sp = second_fundamental_form(offset.jet(u), fp);
      const double oracle = trace(shape_operator(sp, fp, field.eta(u).value));
      worst = std::max(worst, std::abs(offset_shape_trace(field, u, t) - oracle) /
                                  std::max(1.0, std::abs(oracle)));
    }
  }
  const double secs = seconds_since(t0);
  verdict(2, worst < 1e-6 && secs < 30.0,
          fmt("offset formulas vs oracle, worst relative %.2e in %.2fs", worst,
              secs));
}

// 3. Rational-trace zero decision: 500 random triples plus closed forms.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  Vec grid(31);
  for (int i = 0; i < 31; ++i) grid[i] = -1.45 + 2.9 * i / 30.0;
  Rng rng(20240817);
  int false_positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const SymmetricTriple t = random_triple(rng, rng.uniform_int(1, 6));
    const LemmaDecision d = lemma_la_decision(t, grid, 1e-9);
    if (d.phi_identically_zero != d.triple_is_zero) ++false_positives;
  }
  Mat d1(2, 2);
  d1(0, 0) = 1.0;
  const SymmetricTriple one = make_triple(d1, Mat(2, 2));
  const SymmetricTriple rot = make_triple(Mat(3, 3), Mat::identity(3));
  double closed = 0.0;
  for (double s : {-0.8, -0.4, 0.0, 0.3, 0.5, 0.8}) {
    closed = std::max(closed, std::abs(trace_rational(one, s) - 1.0 / (1.0 - s)));
    closed = std::max(closed,
                      std::abs(trace_rational(rot, s) + 3.0 * s / (1.0 + s * s)));
  }
  const double secs = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "zero-decision false positives %d, closed forms %.2e in %.2fs",
                false_positives, closed, secs);
  verdict(3, false_positives == 0 && closed < 1e-10 && secs < 10.0, buf);
}

// 4. Graph minimality iff base mean-curvature and harmonicity conditions.
void criterion_4() {
  ImmersionChart flat_shifted(2, 2, {{0.4, 1.8}, {0.3, 1.7}}, "flat_shifted",
                              [inner = builtin("flat_plane")](const Vec& u) {
                                return inner.jet(u);
                              });
  const auto zero2 = [](const Vec&) {
    ScalarJet2 j;
    j.grad = Vec(2, 0.0);
    j.hess = Mat(2, 2);
    return j;
  };
  const auto paraboloid = [](const Vec& u) {
    ScalarJet2 j;
    j.value = u[0] * u[0] + u[1] * u[1];
    j.grad = {2.0 * u[0], 2.0 * u[1]};
    j.hess = Mat::identity(2) * 2.0;
    return j;
  };
  struct Case {
    ImmersionChart base;
    ScalarJetField f;
  };
  const std::vector<Case> corpus = {
      {builtin("flat_plane"), linear_field({0.3, -0.2})},
      {builtin("flat_plane"), linear_field({1.0, 0.0})},
      {builtin("flat_plane"), ScalarJetField(zero2)},
      {flat_shifted, radial_field(2)},
      {builtin("flat_plane"), square_field(0, 2)},
      {builtin("flat_plane"), ScalarJetField(paraboloid)},
      {builtin("circle"), linear_field({0.7})},
      {builtin("circle"), linear_field({2.0})},
      {builtin("tilted_plane"), linear_field({0.4, 0.1})},
      {builtin("line"), linear_field({0.6})},
      {builtin("catenoid"), ScalarJetField(zero2)},
      {builtin("round_sphere"), ScalarJetField(zero2)},
  };
  bool ok = true;
  for (const Case& c : corpus) {
    const GraphMinimalityCheck gc =
        graph_minimality_check(c.base, c.f, 25, 1e-5, 20240817);
    ok = ok && (gc.graph_minimal == gc.base_conditions);
  }
  verdict(4, ok,
          fmt("graph-minimality biconditional on %.0f charts, tol %.0e",
              double(corpus.size()), 1e-5));
}

// 5. Six comparison relations between g and h = g + df (x) df.
void criterion_5() {
  const MetricChart flat = flat_metric(2, {{0.4, 1.8}, {0.3, 1.7}});
  const ScalarField radial = scalar_radial(2);
  double worst = 0.0;
  Rng rng(20240817);
  bool ok = true;
  for (int s = 0; s < 10; ++s) {
    const Vec u = flat.sample(rng);
    for (const CheckRecord& c : comparison_report(flat, radial, u, 1e-5)) {
      worst = std::max(worst, c.residual);
      ok = ok && c.pass;
    }
    // Tilted-plane family: eikonal linear heights with varying slope.
    for (double slope : {0.4, 1.0, 2.2}) {
      const ScalarField lin = scalar_linear({slope, -0.5 * slope});
      for (const CheckRecord& c : comparison_report(flat, lin, u, 1e-5)) {
        worst = std::max(worst, c.residual);
        ok = ok && c.pass;
      }
    }
    const MetricChart h = helix_metric(flat, radial);
    const double lap = laplacian(h, radial, u);
    worst = std::max(worst, std::abs(lap - 1.0 / (2.0 * norm(u))));
    ok = ok && std::abs(lap - 1.0 / (2.0 * norm(u))) < 1e-5;
  }
  verdict(5, ok, fmt("derived-metric comparison relations, worst %.2e (tol %.0e)",
                     worst, 1e-5));
}

// 6. Structure equation and height-Laplacian identities on cones.
void criterion_6() {
  const Vec d = {0.0, 0.0, 1.0};
  double worst = 0.0;
  for (double k : {0.5, 1.0, 2.0}) {
    const ImmersionChart cone = builtin("cone", {{"k", k}});
    Rng rng(20240817);
    for (int s = 0; s < 100; ++s) {
      const Vec u = cone.sample(rng, 0.1);
      worst = std::max(worst, structure_equation_residual(cone, d, u));
      const LaplacianHeightResult lh = laplacian_height_check(cone, d, u);
      worst = std::max(worst, std::abs(lh.lhs - lh.rhs1));
      worst = std::max(worst, std::abs(lh.rhs1 - lh.rhs2));
    }
  }
  verdict(6, worst < 1e-6,
          fmt("structure/Laplacian identities on cones, worst %.2e (tol %.0e)",
              worst, 1e-6));
}

// 7. Minimal ruled helices with positive angle are never full; cylinders are
// detected as such.
void criterion_7() {
  bool ok = true;
  struct HelixCase {
    ImmersionChart chart;
    Vec d;
  };
  const std::vector<HelixCase> ruled = {
      {builtin("tilted_plane", {{"theta", 0.3}}), {0.0, 0.0, 1.0}},
      {builtin("tilted_plane", {{"theta", 0.6}}), {0.0, 0.0, 1.0}},
      {builtin("tilted_plane", {{"theta", 0.9}}), {0.0, 0.0, 1.0}},
      {builtin("tilted_plane", {{"theta", 1.2}}), {0.0, 0.0, 1.0}},
      {builtin("line"), normalized({1.0, 0.0, 1.0})},
      {builtin("line"), normalized({2.0, 1.0, 2.0})},
      {builtin("complex_line"), normalized({0.4, 0.1, 0.6, 0.2})},
  };
  for (const HelixCase& c : ruled) {
    const HelixReport hr = is_helix(c.chart, c.d, 30, 1e-8);
    const bool minimal = minimality_report(c.chart, 30, 1e-8).is_minimal;
    const bool is_ruled_chart = is_ruled(c.chart, c.d, 8, 40, 1e-8).residual < 1e-6;
    const bool not_full = affine_rank(c.chart, 40) < c.chart.n();
    ok = ok && hr.is_helix && hr.angle_mean > 1e-6 && minimal && is_ruled_chart &&
         not_full;
  }
  for (int profile : {0, 1, 2}) {
    const ImmersionChart cyl =
        builtin("cylinder", {{"profile", double(profile)}, {"radius", 1.3}});
    ok = ok && is_helix(cyl, {0.0, 0.0, 1.0}, 30, 1e-8).is_cylinder;
  }
  verdict(7, ok, "minimal ruled helices not full; cylinders detected");
}

// 8. Minimal offsets force a constant field; foliation verdicts.
void criterion_8() {
  const Vec t_grid = {0.05, 0.1, 0.15, 0.2};
  bool ok = true;
  for (const NormalField& field : normal_field_corpus(18, 20240817)) {
    const OffsetCertificate cert =
        minimal_offsets_certificate(field, t_grid, 15, 1e-7);
    if (cert.offsets_minimal && !cert.eta_constant) ok = false;
  }
  const NormalField planes = constant_field(
      affine_chart({0, 0, 0}, {{1, 0, 0}, {0, 1, 0}}), {0.0, 0.0, 1.0});
  const OffsetCertificate plane_cert =
      minimal_offsets_certificate(planes, t_grid, 15, 1e-7);
  ok = ok && plane_cert.offsets_minimal && plane_cert.eta_constant;
  ok = ok && foliation_flatness_check(planes, t_grid, 1e-7).verdict ==
                 FoliationVerdict::TotallyGeodesic;
  ok = ok && foliation_flatness_check(sphere_outward_field(1.0), t_grid,
                                      1e-7).verdict ==
                 FoliationVerdict::NotMinimalFoliation;
  verdict(8, ok, "minimal offsets imply constant field; foliation verdicts");
}

// 9. Determinism of the full suite.
void criterion_9() {
  RunConfig config;
  config.command = "suite";
  config.trials = 120;
  const std::string a = cmd_suite(config).to_json(false);
  const std::string b = cmd_suite(config).to_json(false);
  verdict(9, a == b, "suite report byte-identical across runs with a fixed seed");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("ACCEPTANCE: all 9 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criteria failed\n", failures);
  return 1;
}
