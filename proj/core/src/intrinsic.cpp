#include "helixlab/intrinsic.hpp"

#include <cmath>

namespace helixlab {

CheckRecord make_check(const std::string& name, double lhs, double rhs, double tol) {
  CheckRecord r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.pass = r.residual < tol;
  return r;
}

ScalarField scalar_linear(Vec coeffs) {
  const int m = static_cast<int>(coeffs.size());
  ScalarField f;
  f.value = [coeffs](const Vec& u) { return dot(coeffs, u); };
  f.grad = [coeffs](const Vec&) { return coeffs; };
  f.hess = [m](const Vec&) { return Mat(m, m); };
  f.third = [m](const Vec&) { return std::vector<Mat>(m, Mat(m, m)); };
  return f;
}

ScalarField scalar_coordinate(int axis, int m) {
  Vec c(m, 0.0);
  c[axis] = 1.0;
  return scalar_linear(c);
}

ScalarField scalar_radial(int m) {
  ScalarField f;
  f.value = [](const Vec& u) { return norm(u); };
  f.grad = [](const Vec& u) { return scaled(u, 1.0 / norm(u)); };
  f.hess = [m](const Vec& u) {
    const double r = norm(u);
    Mat h(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        h(i, j) = ((i == j ? 1.0 : 0.0) - u[i] * u[j] / (r * r)) / r;
    return h;
  };
  f.third = [m](const Vec& u) {
    const double r = norm(u);
    const double r3 = r * r * r, r5 = r3 * r * r;
    std::vector<Mat> t(m, Mat(m, m));
    auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          t[a](i, j) = -(kron(i, j) * u[a] + kron(i, a) * u[j] + kron(j, a) * u[i]) / r3 +
                       3.0 * u[i] * u[j] * u[a] / r5;
    return t;
  };
  return f;
}

ScalarField scalar_square(int axis, int m) {
  ScalarField f;
  f.value = [axis](const Vec& u) { return u[axis] * u[axis]; };
  f.grad = [axis, m](const Vec& u) {
    Vec g(m, 0.0);
    g[axis] = 2.0 * u[axis];
    return g;
  };
  f.hess = [axis, m](const Vec&) {
    Mat h(m, m);
    h(axis, axis) = 2.0;
    return h;
  };
  f.third = [m](const Vec&) { return std::vector<Mat>(m, Mat(m, m)); };
  return f;
}

MetricChart::MetricChart(int m, Box domain, std::string name,
                         std::function<Mat(const Vec&)> g,
                         std::function<std::vector<Mat>(const Vec&)> dg,
                         std::function<std::vector<std::vector<Mat>>(const Vec&)> ddg)
    : m_(m), domain_(std::move(domain)), name_(std::move(name)), g_(std::move(g)),
      dg_(std::move(dg)), ddg_(std::move(ddg)) {
  if (m_ < 1) throw ContractViolation("metric dimension must be positive");
  if (static_cast<int>(domain_.size()) != m_)
    throw ContractViolation("metric domain dimension mismatch");
}

MetricChart MetricChart::with_fd_derivatives(int m, Box domain, std::string name,
                                             std::function<Mat(const Vec&)> g,
                                             double step) {
  auto dg = [g, m, step](const Vec& u) {
    std::vector<Mat> d(m, Mat(m, m));
    for (int k = 0; k < m; ++k) {
      Vec up = u, um = u;
      up[k] += step;
      um[k] -= step;
      d[k] = (g(up) - g(um)) * (0.5 / step);
    }
    return d;
  };
  auto ddg = [g, m, step](const Vec& u) {
    std::vector<std::vector<Mat>> d(m, std::vector<Mat>(m, Mat(m, m)));
    const Mat g0 = g(u);
    for (int k = 0; k < m; ++k) {
      Vec up = u, um = u;
      up[k] += step;
      um[k] -= step;
      d[k][k] = (g(up) - g0 * 2.0 + g(um)) * (1.0 / (step * step));
      for (int l = k + 1; l < m; ++l) {
        Vec pp = u, pm = u, mp = u, mm = u;
        pp[k] += step; pp[l] += step;
        pm[k] += step; pm[l] -= step;
        mp[k] -= step; mp[l] += step;
        mm[k] -= step; mm[l] -= step;
        d[k][l] = (g(pp) - g(pm) - g(mp) + g(mm)) * (0.25 / (step * step));
        d[l][k] = d[k][l];
      }
    }
    return d;
  };
  return MetricChart(m, std::move(domain), std::move(name), std::move(g), dg, ddg);
}

Mat MetricChart::g(const Vec& u) const {
  if (static_cast<int>(u.size()) != m_)
    throw ContractViolation("metric point dimension mismatch");
  const Mat gm = g_(u);
  const EigenSystem es = sym_eig(gm);
  if (es.values.back() <= 0.0)
    throw NonPositiveDefinite("metric " + name_ + " not positive definite at sample");
  return gm;
}

std::vector<Mat> MetricChart::dg(const Vec& u) const { return dg_(u); }
std::vector<std::vector<Mat>> MetricChart::ddg(const Vec& u) const { return ddg_(u); }

Vec MetricChart::sample(Rng& rng, double margin_frac) const {
  Vec u(m_);
  for (int i = 0; i < m_; ++i) {
    const double w = domain_[i][1] - domain_[i][0];
    u[i] = rng.uniform(domain_[i][0] + margin_frac * w, domain_[i][1] - margin_frac * w);
  }
  return u;
}

Vec MetricChart::center() const {
  Vec c(m_);
  for (int i = 0; i < m_; ++i) c[i] = 0.5 * (domain_[i][0] + domain_[i][1]);
  return c;
}

MetricChart flat_metric(int m, Box domain) {
  return MetricChart(
      m, std::move(domain), "flat", [m](const Vec&) { return Mat::identity(m); },
      [m](const Vec&) { return std::vector<Mat>(m, Mat(m, m)); },
      [m](const Vec&) {
        return std::vector<std::vector<Mat>>(m, std::vector<Mat>(m, Mat(m, m)));
      });
}

MetricChart sol_metric() {
  Box dom = {{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  auto g = [](const Vec& u) {
    return Mat::diagonal({std::exp(2.0 * u[2]), std::exp(-2.0 * u[2]), 1.0});
  };
  auto dg = [](const Vec& u) {
    std::vector<Mat> d(3, Mat(3, 3));
    d[2] = Mat::diagonal({2.0 * std::exp(2.0 * u[2]), -2.0 * std::exp(-2.0 * u[2]), 0.0});
    return d;
  };
  auto ddg = [](const Vec& u) {
    std::vector<std::vector<Mat>> d(3, std::vector<Mat>(3, Mat(3, 3)));
    d[2][2] = Mat::diagonal({4.0 * std::exp(2.0 * u[2]), 4.0 * std::exp(-2.0 * u[2]), 0.0});
    return d;
  };
  return MetricChart(3, dom, "sol", g, dg, ddg);
}

MetricChart polar_flat_metric() {
  Box dom = {{{0.5, 2.0}, {0.2, 2.8}}};
  auto g = [](const Vec& u) { return Mat::diagonal({1.0, u[0] * u[0]}); };
  auto dg = [](const Vec& u) {
    std::vector<Mat> d(2, Mat(2, 2));
    d[0](1, 1) = 2.0 * u[0];
    return d;
  };
  auto ddg = [](const Vec&) {
    std::vector<std::vector<Mat>> d(2, std::vector<Mat>(2, Mat(2, 2)));
    d[0][0](1, 1) = 2.0;
    return d;
  };
  return MetricChart(2, dom, "polar_flat", g, dg, ddg);
}

MetricChart induced_metric(const ImmersionChart& chart, double fd_step) {
  const int m = chart.m();
  auto dg_analytic = [chart, m](const Vec& u) {
    const Jet2 jet = chart.jet(u);
    const int n = chart.n();
    std::vector<Mat> d(m, Mat(m, m));
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          double s = 0.0;
          for (int c = 0; c < n; ++c)
            s += jet.hessians[c](k, i) * jet.jacobian(c, j) +
                 jet.jacobian(c, i) * jet.hessians[c](k, j);
          d[k](i, j) = s;
        }
    return d;
  };
  auto g = [chart](const Vec& u) {
    const Mat j = chart.jet(u).jacobian;
    return j.transposed() * j;
  };
  // Second derivatives of g need third derivatives of the chart; differentiate
  // the analytic first derivatives instead.
  auto ddg = [dg_analytic, m, fd_step](const Vec& u) {
    std::vector<std::vector<Mat>> d(m, std::vector<Mat>(m, Mat(m, m)));
    for (int l = 0; l < m; ++l) {
      Vec up = u, um = u;
      up[l] += fd_step;
      um[l] -= fd_step;
      const auto dp = dg_analytic(up);
      const auto dm = dg_analytic(um);
      for (int k = 0; k < m; ++k) d[k][l] = (dp[k] - dm[k]) * (0.5 / fd_step);
    }
    // Symmetrize d_k d_l.
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        const Mat s = (d[k][l] + d[l][k]) * 0.5;
        d[k][l] = s;
        d[l][k] = s;
      }
    return d;
  };
  return MetricChart(m, chart.domain(), chart.name() + "_induced", g, dg_analytic, ddg);
}

MetricChart helix_metric(const MetricChart& gm, const ScalarField& f) {
  const int m = gm.m();
  auto g = [gm, f, m](const Vec& u) {
    Mat h = gm.g(u);
    const Vec df = f.grad(u);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) h(i, j) += df[i] * df[j];
    return h;
  };
  auto dg = [gm, f, m](const Vec& u) {
    std::vector<Mat> d = gm.dg(u);
    const Vec df = f.grad(u);
    const Mat hf = f.hess(u);
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          d[k](i, j) += hf(k, i) * df[j] + df[i] * hf(k, j);
    return d;
  };
  auto ddg = [gm, f, m](const Vec& u) {
    std::vector<std::vector<Mat>> d = gm.ddg(u);
    const Vec df = f.grad(u);
    const Mat hf = f.hess(u);
    const std::vector<Mat> tf = f.third(u);
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            d[k][l](i, j) += tf[l](k, i) * df[j] + hf(k, i) * hf(l, j) +
                             hf(l, i) * hf(k, j) + df[i] * tf[l](k, j);
    return d;
  };
  return MetricChart(m, gm.domain(), gm.name() + "_helix", g, dg, ddg);
}

std::vector<Mat> christoffels(const MetricChart& metric, const Vec& u) {
  const int m = metric.m();
  const Mat g = metric.g(u);
  const Mat gi = inv(g);
  const std::vector<Mat> dg = metric.dg(u);
  std::vector<Mat> gamma(m, Mat(m, m));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double s = 0.0;
        for (int a = 0; a < m; ++a)
          s += gi(k, a) * (dg[i](j, a) + dg[j](i, a) - dg[a](i, j));
        gamma[k](i, j) = 0.5 * s;
        gamma[k](j, i) = gamma[k](i, j);
      }
  return gamma;
}

double CurvaturePack::bianchi_residual() const {
  double res = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          res = std::max(res, std::abs(up(i, j, k, l) + up(j, k, i, l) + up(k, i, j, l)));
  return res;
}

CurvaturePack curvature(const MetricChart& metric, const Vec& u) {
  const int m = metric.m();
  const Mat g = metric.g(u);
  const Mat gi = inv(g);
  const std::vector<Mat> dg = metric.dg(u);
  const std::vector<std::vector<Mat>> ddg = metric.ddg(u);

  CurvaturePack cp;
  cp.m = m;
  cp.christoffels = christoffels(metric, u);

  // dgamma[l][k](i,j) = d_l Gamma^k_ij
  std::vector<Mat> dgi(m, Mat(m, m));
  for (int l = 0; l < m; ++l) dgi[l] = (gi * dg[l] * gi) * -1.0;
  std::vector<std::vector<Mat>> dgamma(m, std::vector<Mat>(m, Mat(m, m)));
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          double s = 0.0;
          for (int a = 0; a < m; ++a) {
            s += dgi[l](k, a) * (dg[i](j, a) + dg[j](i, a) - dg[a](i, j));
            s += gi(k, a) * (ddg[l][i](j, a) + ddg[l][j](i, a) - ddg[l][a](i, j));
          }
          dgamma[l][k](i, j) = 0.5 * s;
        }

  cp.riemann_up.assign(m * m * m * m, 0.0);
  cp.riemann_low.assign(m * m * m * m, 0.0);
  const auto& ga = cp.christoffels;
  auto idx = [m](int i, int j, int k, int l) { return ((i * m + j) * m + k) * m + l; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double s = -dgamma[i][l](j, k) + dgamma[j][l](i, k);
          for (int a = 0; a < m; ++a)
            s += -ga[a](j, k) * ga[l](i, a) + ga[a](i, k) * ga[l](j, a);
          cp.riemann_up[idx(i, j, k, l)] = s;
        }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          double s = 0.0;
          for (int a = 0; a < m; ++a) s += cp.riemann_up[idx(i, j, k, a)] * g(a, l);
          cp.riemann_low[idx(i, j, k, l)] = s;
        }

  // Ric_ij = g^{ab} <R(d_i, d_a) d_j, d_b>; equivalent to summing over any
  // g-orthonormal frame.
  cp.ricci = Mat(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s += gi(a, b) * cp.riemann_low[idx(i, a, j, b)];
      cp.ricci(i, j) = s;
    }
  return cp;
}

Mat ricci(const MetricChart& metric, const Vec& u) { return curvature(metric, u).ricci; }

Vec gradient(const MetricChart& metric, const ScalarField& f, const Vec& u) {
  return inv(metric.g(u)) * f.grad(u);
}

Mat hessian(const MetricChart& metric, const ScalarField& f, const Vec& u) {
  const int m = metric.m();
  const std::vector<Mat> gamma = christoffels(metric, u);
  const Vec df = f.grad(u);
  Mat h = f.hess(u);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) h(i, j) -= gamma[k](i, j) * df[k];
  return h;
}

double laplacian(const MetricChart& metric, const ScalarField& f, const Vec& u) {
  const Mat gi = inv(metric.g(u));
  const Mat h = hessian(metric, f, u);
  double s = 0.0;
  for (int i = 0; i < metric.m(); ++i)
    for (int j = 0; j < metric.m(); ++j) s += gi(i, j) * h(i, j);
  return s;
}

double gradient_norm(const MetricChart& metric, const ScalarField& f, const Vec& u) {
  const Vec df = f.grad(u);
  return std::sqrt(dot(df, inv(metric.g(u)) * df));
}

EikonalReport eikonal_check(const MetricChart& metric, const ScalarField& f,
                            int samples, double tol, std::uint64_t seed) {
  Rng rng(seed);
  double lo = 0.0, hi = 0.0, sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double n = gradient_norm(metric, f, metric.sample(rng));
    if (s == 0) lo = hi = n;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
    sum += n;
  }
  EikonalReport rep;
  rep.norm_mean = sum / samples;
  rep.spread = hi - lo;
  rep.is_eikonal = rep.spread < tol;
  return rep;
}

std::vector<CheckRecord> comparison_report(const MetricChart& g, const ScalarField& f,
                                           const Vec& u, double tol) {
  const EikonalReport eik = eikonal_check(g, f, 40, 1e-6);
  if (!eik.is_eikonal)
    throw NotEikonal("comparison_report requires an eikonal field on " + g.name());

  const MetricChart h = helix_metric(g, f);
  const int m = g.m();
  const double c = gradient_norm(g, f, u);
  const double w = 1.0 + c * c;

  std::vector<CheckRecord> out;

  out.push_back(make_check("volume_form", std::sqrt(det(h.g(u))),
                           std::sqrt(w) * std::sqrt(det(g.g(u))), tol));

  const Vec grad_h = gradient(h, f, u);
  const Vec grad_g = gradient(g, f, u);
  out.push_back(make_check("gradient", norm(sub(grad_h, scaled(grad_g, 1.0 / w))), 0.0, tol));

  const std::vector<Mat> gam_h = christoffels(h, u);
  const std::vector<Mat> gam_g = christoffels(g, u);
  const Mat hess_g = hessian(g, f, u);
  double conn_res = 0.0;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        conn_res = std::max(conn_res,
                            std::abs(gam_h[k](i, j) -
                                     (gam_g[k](i, j) + hess_g(i, j) / w * grad_g[k])));
  out.push_back(make_check("connection", conn_res, 0.0, tol));

  const Mat hess_h = hessian(h, f, u);
  out.push_back(make_check("hessian", (hess_h - hess_g * (1.0 / w)).max_abs(), 0.0, tol));

  out.push_back(make_check("laplacian", laplacian(h, f, u), laplacian(g, f, u) / w, tol));

  const Mat ric_h = ricci(h, u);
  const Mat ric_g = ricci(g, u);
  const double lhs_ric = dot(grad_h, ric_h * grad_h);
  const double rhs_ric = dot(grad_g, ric_g * grad_g) / (w * w);
  out.push_back(make_check("ricci_along_gradient", lhs_ric, rhs_ric, tol));

  return out;
}

double ricci_gradient_check(const MetricChart& g, const ScalarField& f, const Vec& u) {
  const Vec grad_g = gradient(g, f, u);
  return dot(grad_g, ricci(g, u) * grad_g);
}

std::vector<CheckRecord> sol_verification(double tol) {
  const MetricChart sol = sol_metric();
  const ScalarField fz = scalar_coordinate(2, 3);
  std::vector<CheckRecord> out;

  const std::vector<Vec> points = {{0.2, -0.4, 0.0}, {-0.3, 0.6, 0.3}, {0.1, 0.2, -0.5}};
  for (const Vec& u : points) {
    const double z = u[2];
    const std::string at = "@z=" + std::to_string(z);
    const std::vector<Mat> gam = christoffels(sol, u);
    out.push_back(make_check("conn_xx_z" + at, gam[2](0, 0), -std::exp(2.0 * z), tol));
    out.push_back(make_check("conn_xz_x" + at, gam[0](0, 2), 1.0, tol));
    out.push_back(make_check("conn_yz_y" + at, gam[1](1, 2), -1.0, tol));
    out.push_back(make_check("conn_yy_z" + at, gam[2](1, 1), std::exp(-2.0 * z), tol));
    out.push_back(make_check("conn_xy_all" + at,
                             std::max({std::abs(gam[0](0, 1)), std::abs(gam[1](0, 1)),
                                       std::abs(gam[2](0, 1))}),
                             0.0, tol));
    out.push_back(make_check("conn_zz_all" + at,
                             std::max({std::abs(gam[0](2, 2)), std::abs(gam[1](2, 2)),
                                       std::abs(gam[2](2, 2))}),
                             0.0, tol));

    const CurvaturePack cp = curvature(sol, u);
    out.push_back(make_check("curv_xyxy" + at, cp.low(0, 1, 0, 1), 1.0, tol));
    out.push_back(make_check("curv_xzxz" + at, cp.low(0, 2, 0, 2), -std::exp(2.0 * z), tol));

    out.push_back(make_check("ricci_xx" + at, cp.ricci(0, 0), 0.0, tol));
    out.push_back(make_check("ricci_yy" + at, cp.ricci(1, 1), 0.0, tol));
    out.push_back(make_check("ricci_zz" + at, cp.ricci(2, 2), -2.0, tol));
    out.push_back(make_check("ricci_xy" + at, cp.ricci(0, 1), 0.0, tol));
    out.push_back(make_check("ricci_xz" + at, cp.ricci(0, 2), 0.0, tol));
    out.push_back(make_check("ricci_yz" + at, cp.ricci(1, 2), 0.0, tol));

    out.push_back(make_check("grad_norm_z" + at, gradient_norm(sol, fz, u), 1.0, tol));
    out.push_back(make_check("laplacian_z" + at, laplacian(sol, fz, u), 0.0, tol));

    // nabla_{d_x} d_z = d_x, so d_z is not parallel: |nabla_{d_x} d_z|_g = e^z.
    Vec cov(3, 0.0);
    for (int k = 0; k < 3; ++k) cov[k] = gam[k](0, 2);
    const Mat g = sol.g(u);
    out.push_back(make_check("dz_not_parallel" + at, std::sqrt(dot(cov, g * cov)),
                             std::exp(z), tol));
  }
  return out;
}

}  // namespace helixlab
