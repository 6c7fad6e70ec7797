#include "helixlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "helixlab/extrinsic.hpp"
#include "helixlab/helix.hpp"
#include "helixlab/offset.hpp"
#include "helixlab/trace_lemma.hpp"
#include "json.hpp"

namespace helixlab {

namespace {

using nlohmann::json;

ReportRecord record(const std::string& name, const std::string& anchor, double lhs,
                    double rhs, double tol) {
  ReportRecord r;
  r.name = name;
  r.anchor = anchor;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.pass = r.residual <= tol;
  return r;
}

ReportRecord info(const std::string& name, const std::string& anchor, double value) {
  ReportRecord r;
  r.name = name;
  r.anchor = anchor;
  r.lhs = value;
  r.rhs = value;
  r.pass = true;
  return r;
}

ReportRecord from_check(const CheckRecord& c, const std::string& anchor) {
  ReportRecord r;
  r.name = c.name;
  r.anchor = anchor;
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.residual = c.residual;
  r.pass = c.pass;
  return r;
}

Report finish(Report rep, std::chrono::steady_clock::time_point t0) {
  rep.all_pass = std::all_of(rep.records.begin(), rep.records.end(),
                             [](const ReportRecord& r) { return r.pass; });
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Vec default_direction(const ImmersionChart& chart, const Vec& configured) {
  if (!configured.empty()) {
    if (static_cast<int>(configured.size()) != chart.n())
      throw ParseError("direction has dimension " +
                       std::to_string(configured.size()) + ", chart lives in R^" +
                       std::to_string(chart.n()));
    return configured;
  }
  Vec d(chart.n(), 0.0);
  d.back() = 1.0;
  return d;
}

// Scalar chart function from a jet field; third derivatives are not needed by
// the gradient/Hessian/Laplacian machinery.
ScalarField field_from_jets(const ScalarJetField& f) {
  ScalarField out;
  out.value = [f](const Vec& u) { return f(u).value; };
  out.grad = [f](const Vec& u) { return f(u).grad; };
  out.hess = [f](const Vec& u) { return f(u).hess; };
  return out;
}

ScalarJetField sum_of_squares_field() {
  return [](const Vec& u) {
    ScalarJet2 jet;
    jet.value = u[0] * u[0] + u[1] * u[1];
    jet.grad = {2.0 * u[0], 2.0 * u[1]};
    jet.hess = Mat::identity(2) * 2.0;
    return jet;
  };
}

ScalarJetField zero_field(int m) {
  return [m](const Vec&) {
    ScalarJet2 jet;
    jet.grad = Vec(m, 0.0);
    jet.hess = Mat(m, m);
    return jet;
  };
}

}  // namespace

Vec parse_grid(const std::string& text) {
  double a = 0.0, b = 0.0;
  int n = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3 || n < 1)
    throw ParseError("grid must be a:b:n with n >= 1, got '" + text + "'");
  Vec grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = (n == 1) ? a : a + (b - a) * i / (n - 1.0);
  return grid;
}

Vec parse_direction(const std::string& text) {
  Vec d;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      d.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad direction component '" + tok + "'");
    }
  }
  if (d.empty()) throw ParseError("empty direction");
  return d;
}

ImmersionChart chart_from_config(const RunConfig& config) {
  if (!config.spec_file.empty()) return load_poly(config.spec_file);
  const auto colon = config.chart.find(':');
  const std::string name = config.chart.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(config.chart.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("chart parameter must be key=value, got '" + tok + "'");
      try {
        params[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
      } catch (const std::exception&) {
        throw ParseError("bad chart parameter value in '" + tok + "'");
      }
    }
  }
  return builtin(name, params);
}

GraphMinimalityCheck graph_minimality_check(const ImmersionChart& base,
                                            const ScalarJetField& f, int samples,
                                            double tol, std::uint64_t seed) {
  GraphMinimalityCheck out;
  const ImmersionChart graph = graph_immersion(base, f);
  out.graph_mean_curvature =
      minimality_report(graph, samples, tol, seed).max_mean_curvature;
  out.graph_minimal = out.graph_mean_curvature < tol;

  const MetricChart g = induced_metric(base);
  const ScalarField fs = field_from_jets(f);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec u = base.sample(rng);
    const ScalarJet2 fj = f(u);
    const Vec grad_c = solve(g.g(u), fj.grad);  // chart coords of grad_B f
    const double grad_sq = dot(fj.grad, grad_c);

    const FramePack fp = frames(base, u, seed);
    const ShapePack sp = second_fundamental_form(base.jet(u), fp);
    const Vec grad_amb = base.jet(u).jacobian * grad_c;
    Vec a(fp.tangent.size(), 0.0);
    for (size_t i = 0; i < fp.tangent.size(); ++i) a[i] = dot(grad_amb, fp.tangent[i]);

    Vec rhs(base.n(), 0.0);  // alpha_B(grad f, grad f) / (1 + |grad f|^2)
    for (size_t k = 0; k < fp.normal.size(); ++k)
      axpy(rhs, dot(a, sp.alpha[k] * a) / (1.0 + grad_sq), fp.normal[k]);
    out.base_residual =
        std::max(out.base_residual, norm(sub(sp.mean_curvature, rhs)));
    out.laplacian_residual =
        std::max(out.laplacian_residual, std::abs(laplacian(g, fs, u)));
  }
  out.base_conditions = out.base_residual < tol && out.laplacian_residual < tol;
  return out;
}

// ---- commands -----------------------------------------------------------------

Report cmd_analyze(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "analyze";
  rep.config = config;

  const ImmersionChart chart = chart_from_config(config);
  const Vec d = default_direction(chart, config.direction);
  const HelixReport hr = is_helix(chart, d, config.samples, config.tol, config.seed);

  rep.records.push_back(record("angle_spread",
                               "theta(p) = angle(T_pM, d) constant over the chart",
                               hr.angle_spread, 0.0, config.tol));
  rep.records.back().pass = true;  // classification, not an identity
  rep.records.push_back(info("is_helix", "constant-angle test verdict",
                             hr.is_helix ? 1.0 : 0.0));
  rep.records.push_back(info("theta_mean", "mean angle with d", hr.angle_mean));
  rep.records.push_back(info("is_cylinder", "theta == 0 verdict",
                             hr.is_cylinder ? 1.0 : 0.0));
  rep.records.push_back(
      info("eikonal_spread", "|grad_M <x,d>| = cos(theta) constant for a helix",
           hr.eikonal_residual));

  const MinimalityReport mr =
      minimality_report(chart, config.samples, config.tol, config.seed);
  rep.records.push_back(info("max_mean_curvature", "H = trace of the second form",
                             mr.max_mean_curvature));
  rep.records.push_back(
      info("is_minimal", "minimality verdict", mr.is_minimal ? 1.0 : 0.0));

  if (hr.is_helix && hr.t_defined && !hr.is_cylinder) {
    Rng rng(config.seed + 1);
    double struct_res = 0.0, lap_d = 0.0, lap_xi = 0.0;
    const int pts = std::min(config.samples, 8);
    for (int s = 0; s < pts; ++s) {
      const Vec u = chart.sample(rng, 0.1);
      struct_res = std::max(
          struct_res, structure_equation_residual(chart, d, u, 1e-5, config.seed));
      const LaplacianHeightResult lh =
          laplacian_height_check(chart, d, u, config.seed);
      lap_d = std::max(lap_d, std::abs(lh.lhs - lh.rhs1));
      if (lh.has_rhs2) lap_xi = std::max(lap_xi, std::abs(lh.rhs1 - lh.rhs2));
    }
    const double tol = std::max(config.tol, 1e-6);
    rep.records.push_back(record(
        "structure_equation", "nabla_X T = tan(theta) A^xi(X) along the helix",
        struct_res, 0.0, tol));
    rep.records.push_back(record("laplacian_height_d",
                                 "Laplacian of <x,d> equals <H, d>", lap_d, 0.0, tol));
    rep.records.push_back(record("laplacian_height_xi",
                                 "<H, d> = sin(theta) <H, xi>", lap_xi, 0.0, tol));

    const RuledResult rr =
        is_ruled(chart, d, std::min(config.samples, 12), 40, config.tol, config.seed);
    rep.records.push_back(
        info("ruled_residual", "deviation of T-integral curves from lines",
             rr.residual));
    if (chart.n() - chart.m() == 1) {
      rep.records.push_back(record(
          "gauss_image_spread",
          "|<unit normal, d>| constant on a helix hypersurface",
          gauss_image_check(chart, d, config.samples, config.seed), 0.0,
          std::max(config.tol, 1e-7)));
    }
  }
  return finish(std::move(rep), t0);
}

Report cmd_offsets(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "offsets";
  rep.config = config;

  const Vec t_grid =
      config.t_grid.empty() ? Vec{0.04, 0.08, 0.12, 0.16, 0.2} : config.t_grid;
  const auto corpus = normal_field_corpus(12, config.seed);

  int idx = 0;
  for (const NormalField& field : corpus) {
    double metric_res = 0.0, trace_res = 0.0;
    Rng rng(config.seed + idx);
    for (double t : t_grid) {
      const ImmersionChart offset = offset_immersion(field, t, config.seed);
      for (int s = 0; s < 2; ++s) {
        const Vec u = field.base.sample(rng, 0.1);
        const OffsetData data = offset_data(field, u, config.seed);
        const Mat formula = offset_metric(field, u, t, config.seed);

        // Oracle: Gram matrix of the actual offset-chart derivatives taken
        // along the diagonalizing directions.
        const Mat jac = offset.jet(u).jacobian;
        const int m = field.base.m();
        Mat direct(m, m);
        std::vector<Vec> x(m);
        for (int i = 0; i < m; ++i) x[i] = jac * data.frame_chart[i];
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c) direct(r, c) = dot(x[r], x[c]);
        metric_res = std::max(metric_res, (formula - direct).max_abs() /
                                              std::max(1.0, direct.max_abs()));

        // Oracle: trace of the shape operator computed on the offset chart.
        const FramePack ofp = frames(offset, u, config.seed);
        const ShapePack osp = second_fundamental_form(offset.jet(u), ofp);
        const double direct_trace =
            trace(shape_operator(osp, ofp, field.eta(u).value));
        const double formula_trace = offset_shape_trace(field, u, t, config.seed);
        trace_res = std::max(trace_res, std::abs(formula_trace - direct_trace) /
                                            std::max(1.0, std::abs(direct_trace)));
      }
    }
    const std::string tag = field.name + "_" + std::to_string(idx++);
    rep.records.push_back(
        record("metric_" + tag,
               "G_rs = (1-t l_r)(1-t l_s) d_rs + t^2 <nabla-perp eta, nabla-perp eta>",
               metric_res, 0.0, config.tol));
    rep.records.push_back(record(
        "trace_" + tag,
        "Tr(A) on the offset = Tr((D - tD^2 - tN)[1 - 2tD + t^2(D^2+N)]^{-1})",
        trace_res, 0.0, config.tol));
  }

  // Minimal offsets force a constant field: parallel planes pass, spheres fail.
  const NormalField planes =
      constant_field(affine_chart({0.0, 0.0, 0.0},
                                  {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}, "plane3"),
                     {0.0, 0.0, 1.0});
  const FoliationResult plane_res =
      foliation_flatness_check(planes, t_grid, config.tol, config.seed);
  rep.records.push_back(record(
      "parallel_planes_confirmed",
      "minimal equidistant leaves in R^n are parallel affine subspaces",
      plane_res.verdict == FoliationVerdict::TotallyGeodesic ? 1.0 : 0.0, 1.0, 0.0));

  const FoliationResult sphere_res = foliation_flatness_check(
      sphere_outward_field(1.0), t_grid, config.tol, config.seed);
  rep.records.push_back(record(
      "nested_spheres_rejected",
      "sphere offsets are not minimal, so the foliation is not minimal",
      sphere_res.verdict == FoliationVerdict::NotMinimalFoliation ? 1.0 : 0.0, 1.0,
      0.0));

  const OffsetCertificate plane_cert =
      minimal_offsets_certificate(planes, t_grid, 20, config.tol, config.seed);
  rep.records.push_back(record(
      "minimal_offsets_need_constant_eta",
      "all offsets minimal implies the normal field is constant",
      (plane_cert.offsets_minimal && plane_cert.eta_constant) ? 1.0 : 0.0, 1.0, 0.0));

  return finish(std::move(rep), t0);
}

Report cmd_lemma_la(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "lemma-la";
  rep.config = config;

  const Vec s_grid = config.t_grid.empty() ? parse_grid("-1.45:1.45:31")
                                           : config.t_grid;
  Rng rng(config.seed);
  int false_positives = 0;
  double kernel_res = 0.0;
  double subst_res = 0.0;
  for (int trial = 0; trial < config.trials; ++trial) {
    const int k = 1 + rng.uniform_int(0, std::max(1, config.dim) - 1) % 12;
    const SymmetricTriple triple = random_triple(rng, k, 1.0);
    const LemmaDecision decision = lemma_la_decision(triple, s_grid, 1e-9);
    if (decision.phi_identically_zero && !decision.triple_is_zero) ++false_positives;

    const KernelSplit split = kernel_split(triple, 1e-9);
    kernel_res = std::max({kernel_res, split.d_on_kernel, split.n_on_kernel});

    const double t = rng.uniform(0.5, 3.0);
    try {
      subst_res = std::max(subst_res, std::abs(trace_rational(triple, 1.0 / t) -
                                               t * substituted_trace(triple, t)));
    } catch (const PoleAt&) {
    }
  }
  rep.records.push_back(record("false_positives",
                               "phi == 0 on the grid only for D = N = 0",
                               false_positives, 0.0, 0.0));
  rep.records.push_back(record("kernel_inclusion",
                               "ker(D^2 + N) lies inside ker(D) and ker(N)",
                               kernel_res, 0.0, 1e-7));
  rep.records.push_back(record("substitution_identity",
                               "phi(1/t) = t Tr((tD - H)(t^2 - 2tD + H)^{-1})",
                               subst_res, 0.0, 1e-9));

  const SymmetricTriple zero = zero_triple(std::max(1, config.dim));
  const LemmaDecision zero_dec = lemma_la_decision(zero, s_grid, 1e-9);
  rep.records.push_back(record(
      "zero_triple", "the zero triple has phi == 0",
      (zero_dec.phi_identically_zero && zero_dec.triple_is_zero) ? 1.0 : 0.0, 1.0,
      0.0));

  // Closed forms: D = diag(1,0), N = 0 gives 1/(1-s); D = 0, N = I_3 gives
  // -3s/(1+s^2).
  Mat d2(2, 2);
  d2(0, 0) = 1.0;
  const SymmetricTriple simple = make_triple(d2, Mat(2, 2));
  const SymmetricTriple rotating = make_triple(Mat(3, 3), Mat::identity(3));
  double simple_res = 0.0, rotating_res = 0.0;
  for (double s : parse_grid("-0.8:0.8:17")) {
    simple_res = std::max(simple_res,
                          std::abs(trace_rational(simple, s) - 1.0 / (1.0 - s)));
    rotating_res = std::max(
        rotating_res, std::abs(trace_rational(rotating, s) + 3.0 * s / (1.0 + s * s)));
  }
  rep.records.push_back(record("closed_form_rank_one",
                               "D = diag(1,0), N = 0: phi(s) = 1/(1-s)", simple_res,
                               0.0, 1e-10));
  rep.records.push_back(record("closed_form_rotation",
                               "D = 0, N = 1: phi(s) = -k s/(1+s^2)", rotating_res,
                               0.0, 1e-10));

  // t -> 0 limit with invertible H approaches Tr(-1) = -k.
  const SymmetricTriple inv_h = make_triple(Mat(3, 3), Mat::identity(3));
  rep.records.push_back(record("small_t_limit",
                               "t -> 0 with invertible H gives Tr(-1) = -k",
                               substituted_trace(inv_h, 1e-6), -3.0, 1e-3));
  return finish(std::move(rep), t0);
}

Report cmd_sol(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "sol";
  rep.config = config;
  for (const CheckRecord& c : sol_verification(1e-8))
    rep.records.push_back(
        from_check(c, "e^{2z}dx^2 + e^{-2z}dy^2 + dz^2 verification table"));
  return finish(std::move(rep), t0);
}

Report cmd_project(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "project";
  rep.config = config;

  struct Case {
    std::string name;
    ImmersionChart base;
    ScalarJetField f;
  };
  const std::vector<Case> corpus = {
      {"plane_linear", builtin("flat_plane"), linear_field({0.3, -0.2})},
      {"plane_steep", builtin("flat_plane"), linear_field({1.0, 0.0})},
      {"plane_zero", builtin("flat_plane"), zero_field(2)},
      {"plane_radial", builtin("flat_plane"), radial_field(2)},
      {"plane_square", builtin("flat_plane"), square_field(0, 2)},
      {"plane_paraboloid", builtin("flat_plane"), sum_of_squares_field()},
      {"circle_winding", builtin("circle"), linear_field({0.7})},
      {"circle_steep", builtin("circle"), linear_field({2.0})},
      {"tilted_linear", builtin("tilted_plane"), linear_field({0.4, 0.1})},
      {"line_linear", builtin("line"), linear_field({0.6})},
      {"catenoid_zero", builtin("catenoid"), zero_field(2)},
      {"sphere_zero", builtin("round_sphere"), zero_field(2)},
  };
  const double tol = std::max(config.tol, 1e-5);
  for (const Case& c : corpus) {
    // flat_plane's domain straddles the origin where the radial field is
    // singular; shift via a sub-box chart when needed.
    ImmersionChart base =
        (c.name == "plane_radial")
            ? ImmersionChart(2, 2, {{0.4, 1.8}, {0.3, 1.7}}, "flat_shifted",
                             [inner = c.base](const Vec& u) { return inner.jet(u); })
            : c.base;
    const GraphMinimalityCheck gc =
        graph_minimality_check(base, c.f, std::min(config.samples, 25), tol,
                               config.seed);
    rep.records.push_back(record(
        "graph_" + c.name,
        "graph minimal iff H_B = alpha_B(grad f, grad f)/(1+|grad f|^2) and f harmonic",
        gc.graph_minimal ? 1.0 : 0.0, gc.base_conditions ? 1.0 : 0.0, 0.0));
  }

  // Derived-metric comparison: h = g + df (x) df against the closed relations.
  const MetricChart flat_off = flat_metric(2, {{0.4, 1.8}, {0.3, 1.7}});
  const ScalarField radial = scalar_radial(2);
  const MetricChart flat_full = flat_metric(2, {{-1.0, 1.0}, {-1.0, 1.0}});
  const ScalarField tilted = scalar_linear({0.8, -0.5});
  Rng rng(config.seed);
  double radial_worst = 0.0, tilted_worst = 0.0, lap_radial = 0.0;
  for (int s = 0; s < 6; ++s) {
    const Vec u1 = flat_off.sample(rng);
    for (const CheckRecord& c : comparison_report(flat_off, radial, u1, tol))
      radial_worst = std::max(radial_worst, c.residual);
    const Vec u2 = flat_full.sample(rng);
    for (const CheckRecord& c : comparison_report(flat_full, tilted, u2, tol))
      tilted_worst = std::max(tilted_worst, c.residual);

    const MetricChart h = helix_metric(flat_off, radial);
    lap_radial = std::max(lap_radial, std::abs(laplacian(h, radial, u1) -
                                               1.0 / (2.0 * norm(u1))));
  }
  rep.records.push_back(record(
      "comparison_radial",
      "volume/gradient/connection/Hessian/Laplacian/Ricci relations for h = g + df df",
      radial_worst, 0.0, tol));
  rep.records.push_back(record(
      "comparison_tilted_plane",
      "same relations for the eikonal height of a tilted plane", tilted_worst, 0.0,
      tol));
  rep.records.push_back(record("laplacian_h_radial",
                               "for f = r on flat R^2: Laplacian_h f = 1/(2r)",
                               lap_radial, 0.0, tol));
  return finish(std::move(rep), t0);
}

Report cmd_suite(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = "suite";
  rep.config = config;

  const auto merge = [&rep](const Report& sub) {
    for (ReportRecord r : sub.records) {
      r.name = sub.command + "." + r.name;
      rep.records.push_back(std::move(r));
    }
  };
  RunConfig c = config;
  c.chart = "tilted_plane";
  c.spec_file.clear();
  c.direction.clear();
  merge(cmd_analyze(c));
  c.chart = "cone";
  merge(cmd_analyze(c));
  merge(cmd_sol(config));
  merge(cmd_offsets(config));
  merge(cmd_lemma_la(config));
  merge(cmd_project(config));
  return finish(std::move(rep), t0);
}

// ---- serialization --------------------------------------------------------------

std::string Report::to_json(bool include_wall) const {
  json j;
  j["version"] = "1.0";
  j["command"] = command;
  j["config"] = {{"chart", config.chart},
                 {"spec_file", config.spec_file},
                 {"direction", config.direction},
                 {"samples", config.samples},
                 {"tol", config.tol},
                 {"seed", config.seed},
                 {"t_grid", config.t_grid},
                 {"trials", config.trials},
                 {"dim", config.dim}};
  j["records"] = json::array();
  for (const ReportRecord& r : records) {
    j["records"].push_back({{"name", r.name},
                            {"anchor", r.anchor},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"residual", r.residual},
                            {"pass", r.pass}});
  }
  int failures = 0;
  for (const ReportRecord& r : records) failures += r.pass ? 0 : 1;
  j["summary"] = {{"pass", all_pass},
                  {"checks", records.size()},
                  {"failures", failures}};
  if (include_wall) j["summary"]["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

std::string Report::to_table() const {
  std::ostringstream out;
  size_t width = 4;
  for (const ReportRecord& r : records) width = std::max(width, r.name.size());
  char line[512];
  std::snprintf(line, sizeof(line), "%-*s  %14s  %14s  %12s  %s\n",
                static_cast<int>(width), "name", "lhs", "rhs", "residual", "pass");
  out << line;
  for (const ReportRecord& r : records) {
    std::snprintf(line, sizeof(line), "%-*s  %14.6g  %14.6g  %12.3g  %s\n",
                  static_cast<int>(width), r.name.c_str(), r.lhs, r.rhs, r.residual,
                  r.pass ? "ok" : "FAIL");
    out << line;
  }
  out << (all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return out.str();
}

int run_command(const RunConfig& config) {
  Report rep;
  try {
    if (config.command == "analyze") rep = cmd_analyze(config);
    else if (config.command == "offsets") rep = cmd_offsets(config);
    else if (config.command == "lemma-la") rep = cmd_lemma_la(config);
    else if (config.command == "sol") rep = cmd_sol(config);
    else if (config.command == "project") rep = cmd_project(config);
    else if (config.command == "suite") rep = cmd_suite(config);
    else {
      std::cerr << "unknown command: " << config.command << "\n";
      return 2;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  std::cout << rep.to_table();
  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) {
      std::cerr << "cannot write " << config.out_path << "\n";
      return 2;
    }
    out << rep.to_json() << "\n";
  }
  return rep.all_pass ? 0 : 1;
}

}  // namespace helixlab
