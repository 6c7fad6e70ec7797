#include "helixlab/helix.hpp"

#include <algorithm>
#include <cmath>

#include "helixlab/intrinsic.hpp"

namespace helixlab {

namespace {

Vec tangential_component(const ImmersionChart& chart, const Vec& u, const Vec& d) {
  return tangent_project(chart.jet(u).jacobian, normalized(d));
}

// Chart-coordinate velocity whose pushforward equals the ambient field w.
Vec chart_velocity(const Mat& jacobian, const Vec& w) {
  return solve_least_squares(jacobian, w);
}

// One RK4 step of du/dt = vel(u).
Vec rk4_step(const std::function<Vec(const Vec&)>& vel, const Vec& u, double h) {
  const Vec k1 = vel(u);
  Vec u2 = u;
  axpy(u2, 0.5 * h, k1);
  const Vec k2 = vel(u2);
  Vec u3 = u;
  axpy(u3, 0.5 * h, k2);
  const Vec k3 = vel(u3);
  Vec u4 = u;
  axpy(u4, h, k3);
  const Vec k4 = vel(u4);
  Vec out = u;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

double line_deviation(const Vec& p, const Vec& p0, const Vec& dir) {
  Vec rel = sub(p, p0);
  axpy(rel, -dot(rel, dir), dir);
  return norm(rel);
}

// Max deviation of the integral curve of the ambient field from the straight
// line through its start.
RuledResult straightness_residual(const ImmersionChart& chart,
                                  const std::function<Vec(const Vec&)>& field,
                                  const Vec& u0, int step_count, double curve_length) {
  auto vel = [&](const Vec& u) { return chart_velocity(chart.jet(u).jacobian, field(u)); };
  RuledResult res;
  const Vec p0 = chart.point(u0);
  const Vec dir0 = normalized(field(u0));
  Vec u = u0;
  const double h = curve_length / step_count;
  for (int s = 0; s < step_count; ++s) {
    const Vec next = rk4_step(vel, u, h);
    if (!chart.contains(next, 0.01)) {
      res.truncated = true;
      break;
    }
    u = next;
    res.residual = std::max(res.residual, line_deviation(chart.point(u), p0, dir0));
  }
  return res;
}

}  // namespace

double helix_angle(const ImmersionChart& chart, const Vec& u, const Vec& d) {
  const double c = std::clamp(norm(tangential_component(chart, u, d)), 0.0, 1.0);
  return std::acos(c);
}

Vec tangential_T(const ImmersionChart& chart, const Vec& u, const Vec& d,
                 double residual_tol) {
  const Vec dt = tangential_component(chart, u, d);
  if (norm(dt) <= residual_tol)
    throw VerticalDirection("d is normal to the chart; T undefined");
  return normalized(dt);
}

HelixReport is_helix(const ImmersionChart& chart, const Vec& d, int samples,
                     double tol, std::uint64_t seed) {
  Rng rng(seed);
  HelixReport rep;
  rep.direction = normalized(d);
  double nlo = 0.0, nhi = 0.0, asum = 0.0, alo = 0.0, ahi = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vec u = chart.sample(rng);
    const double nt = norm(tangential_component(chart, u, rep.direction));
    const double theta = std::acos(std::clamp(nt, 0.0, 1.0));
    rep.angle_samples.push_back(theta);
    if (s == 0) {
      nlo = nhi = nt;
      alo = ahi = theta;
    }
    nlo = std::min(nlo, nt);
    nhi = std::max(nhi, nt);
    alo = std::min(alo, theta);
    ahi = std::max(ahi, theta);
    asum += theta;
  }
  rep.angle_mean = asum / samples;
  rep.angle_spread = ahi - alo;
  rep.eikonal_residual = nhi - nlo;
  rep.is_helix = rep.angle_spread < tol;
  rep.is_cylinder = rep.is_helix && rep.angle_mean < tol;
  rep.t_defined = (M_PI / 2.0 - rep.angle_mean) > 1e-6;
  return rep;
}

RuledResult is_ruled(const ImmersionChart& chart, const Vec& d, int samples,
                     int step_count, double /*tol*/, std::uint64_t seed,
                     double curve_length) {
  Rng rng(seed);
  const Vec dn = normalized(d);
  auto t_field = [&](const Vec& u) { return tangential_T(chart, u, dn); };
  RuledResult worst;
  for (int s = 0; s < samples; ++s) {
    const Vec u0 = chart.sample(rng, 0.1);
    const RuledResult r = straightness_residual(chart, t_field, u0, step_count,
                                                curve_length);
    worst.residual = std::max(worst.residual, r.residual);
    worst.truncated = worst.truncated || r.truncated;
  }
  return worst;
}

double structure_equation_residual(const ImmersionChart& chart, const Vec& d,
                                   const Vec& u, double fd_step, std::uint64_t seed) {
  const Vec dn = normalized(d);
  const double theta = helix_angle(chart, u, dn);
  if (theta < 1e-9) return 0.0;  // T constant, both sides vanish
  if (M_PI / 2.0 - theta < 1e-6)
    throw VerticalDirection("structure equation undefined at theta = pi/2");

  const Jet2 jet = chart.jet(u);
  const FramePack fp = frames(chart, u, seed);
  const ShapePack sp = second_fundamental_form(jet, fp);

  const Vec dtan = tangent_project(jet.jacobian, dn);
  const Vec xi = normalized(sub(dn, dtan));
  const Mat axi = shape_operator(sp, fp, xi);
  const double tan_theta = std::tan(theta);

  auto t_field = [&](const Vec& p) { return tangential_T(chart, p, dn); };

  double res = 0.0;
  const int m = chart.m();
  for (int i = 0; i < m; ++i) {
    Vec up = u, um = u;
    axpy(up, fd_step, fp.tangent_chart[i]);
    axpy(um, -fd_step, fp.tangent_chart[i]);
    const Vec dT = scaled(sub(t_field(up), t_field(um)), 0.5 / fd_step);
    const Vec cov_T = tangent_project(jet.jacobian, dT);

    Vec rhs(chart.n(), 0.0);
    for (int j = 0; j < m; ++j) axpy(rhs, tan_theta * axi(i, j), fp.tangent[j]);
    res = std::max(res, norm(sub(cov_T, rhs)));
  }
  return res;
}

LaplacianHeightResult laplacian_height_check(const ImmersionChart& chart, const Vec& d,
                                             const Vec& u, std::uint64_t seed) {
  const Vec dn = normalized(d);
  const int m = chart.m();

  // Height function pulled back to the chart; exact jets from the chart jet.
  ScalarField hd;
  hd.value = [&chart, dn](const Vec& p) { return dot(chart.point(p), dn); };
  hd.grad = [&chart, dn](const Vec& p) {
    return chart.jet(p).jacobian.transposed() * dn;
  };
  hd.hess = [&chart, dn, m](const Vec& p) {
    const Jet2 j = chart.jet(p);
    Mat h(m, m);
    for (int c = 0; c < chart.n(); ++c) h = h + j.hessians[c] * dn[c];
    return h;
  };

  const MetricChart induced = induced_metric(chart);
  LaplacianHeightResult res;
  res.lhs = laplacian(induced, hd, u);

  const Vec h = mean_curvature(chart, u, seed);
  res.rhs1 = dot(h, dn);

  const double theta = helix_angle(chart, u, dn);
  if (theta > 1e-9 && M_PI / 2.0 - theta > 1e-9) {
    const Vec dtan = tangent_project(chart.jet(u).jacobian, dn);
    const Vec xi = normalized(sub(dn, dtan));
    res.rhs2 = std::sin(theta) * dot(h, xi);
    res.has_rhs2 = true;
  }
  return res;
}

Vec complex_structure(const Vec& v) {
  if (v.size() % 2 != 0)
    throw ContractViolation("complex structure requires even ambient dimension");
  Vec w(v.size());
  for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
    w[k] = -v[k + 1];
    w[k + 1] = v[k];
  }
  return w;
}

ComplexHelixResult complex_helix_checks(const ImmersionChart& chart, const Vec& d,
                                        const Vec& u, double tol, std::uint64_t seed) {
  if (chart.n() % 2 != 0)
    throw ContractViolation("complex checks need an even ambient dimension");

  // J must preserve the tangent spaces.
  Rng rng(seed);
  for (int s = 0; s < 20; ++s) {
    const Vec p = chart.sample(rng);
    const Mat jac = chart.jet(p).jacobian;
    for (int i = 0; i < chart.m(); ++i) {
      const Vec je = complex_structure(jac.column(i));
      if (norm(sub(je, tangent_project(jac, je))) > tol * std::max(1.0, norm(je)))
        throw NonComplexSubmanifold("tangent spaces of " + chart.name() +
                                    " are not J-invariant");
    }
  }

  const Vec dn = normalized(d);
  auto t_field = [&](const Vec& p) { return tangential_T(chart, p, dn); };
  auto jt_field = [&](const Vec& p) { return complex_structure(t_field(p)); };

  ComplexHelixResult res;
  res.jt_geodesic_residual =
      straightness_residual(chart, jt_field, u, 40, 0.3).residual;

  // Flow commutator: second-order estimate of [T, JT].
  auto flow = [&](const std::function<Vec(const Vec&)>& field, Vec p, double time) {
    auto vel = [&](const Vec& q) {
      return chart_velocity(chart.jet(q).jacobian, field(q));
    };
    const int substeps = 8;
    for (int s = 0; s < substeps; ++s) p = rk4_step(vel, p, time / substeps);
    return p;
  };
  const double h = 1e-3;
  Vec p = flow(t_field, u, h);
  p = flow(jt_field, p, h);
  p = flow(t_field, p, -h);
  p = flow(jt_field, p, -h);
  res.bracket_residual = norm(sub(chart.point(p), chart.point(u))) / (h * h);
  return res;
}

double gauss_image_check(const ImmersionChart& chart, const Vec& d, int samples,
                         std::uint64_t seed) {
  if (chart.n() != chart.m() + 1)
    throw ContractViolation("gauss_image_check requires a hypersurface chart");
  Rng rng(seed);
  const Vec dn = normalized(d);
  double lo = 0.0, hi = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vec u = chart.sample(rng);
    const FramePack fp = frames(chart, u, seed);
    // |<N, d>| is orientation-free; the completed normal has no coherent sign.
    const double c = std::abs(dot(fp.normal[0], dn));
    if (s == 0) lo = hi = c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return hi - lo;
}

RicciTResult ricci_T_check(const ImmersionChart& chart, const Vec& d, const Vec& u,
                           std::uint64_t seed) {
  if (chart.n() != chart.m() + 1)
    throw ContractViolation("ricci_T_check requires a hypersurface chart");
  const Vec dn = normalized(d);
  const Vec t = tangential_T(chart, u, dn);

  const Jet2 jet = chart.jet(u);
  const FramePack fp = frames(chart, u, seed);
  const ShapePack sp = second_fundamental_form(jet, fp);

  // A^N T in the tangent frame.
  Vec t_frame(chart.m());
  for (int i = 0; i < chart.m(); ++i) t_frame[i] = dot(t, fp.tangent[i]);
  RicciTResult res;
  res.shape_t_norm = norm(sp.alpha[0] * t_frame);
  res.applicable = res.shape_t_norm < 1e-6;

  const MetricChart induced = induced_metric(chart);
  const Mat ric = ricci(induced, u);
  const Vec t_chart = solve_least_squares(jet.jacobian, t);
  res.ric_tt = dot(t_chart, ric * t_chart);
  return res;
}

int affine_rank(const ImmersionChart& chart, int samples, double cutoff,
                std::uint64_t seed) {
  Rng rng(seed);
  const int n = chart.n();
  std::vector<Vec> pts;
  Vec centroid(n, 0.0);
  for (int s = 0; s < samples; ++s) {
    pts.push_back(chart.point(chart.sample(rng)));
    axpy(centroid, 1.0, pts.back());
  }
  centroid = scaled(centroid, 1.0 / samples);

  Mat cov(n, n);
  for (const Vec& p : pts) {
    const Vec r = sub(p, centroid);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cov(i, j) += r[i] * r[j];
  }
  const EigenSystem es = sym_eig(cov);
  const double top = std::max(es.values[0], 0.0);
  if (top == 0.0) return 0;
  // Threshold the covariance eigenvalues directly: rounding noise in a
  // rank-deficient Gram matrix sits at machine epsilon relative to the top
  // eigenvalue, whereas its square root would land near sqrt(eps).
  int rank = 0;
  for (double lam : es.values)
    if (lam > cutoff * top) ++rank;
  return rank;
}

}  // namespace helixlab
