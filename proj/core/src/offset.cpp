#include "helixlab/offset.hpp"

#include <cmath>
#include <utility>

namespace helixlab {

namespace {

// Diagonalizing tangent frame of A_eta plus the normal-connection components.
OffsetData compute_data(const NormalField& field, const Vec& u, std::uint64_t seed) {
  const FramePack fp = frames(field.base, u, seed);
  const Jet2 jet = field.base.jet(u);
  const ShapePack sp = second_fundamental_form(jet, fp);
  const Jet2 eta_jet = field.eta(u);
  eta_jet.check_shapes();

  const int m = field.base.m();
  const int q = static_cast<int>(fp.normal.size());
  const Mat a_eta = shape_operator(sp, fp, eta_jet.value);

  EigenSystem eig = sym_eig(a_eta);

  OffsetData data;
  data.lambdas = eig.values;
  data.frame.resize(m);
  data.frame_chart.resize(m);
  for (int i = 0; i < m; ++i) {
    Vec e(jet.n(), 0.0);
    Vec ec(m, 0.0);
    for (int j = 0; j < m; ++j) {
      axpy(e, eig.vectors(j, i), fp.tangent[j]);
      axpy(ec, eig.vectors(j, i), fp.tangent_chart[j]);
    }
    data.frame[i] = e;
    data.frame_chart[i] = ec;
  }
  data.normal = fp.normal;

  data.conn = Mat(m, q);
  for (int i = 0; i < m; ++i) {
    const Vec deta = eta_jet.jacobian * data.frame_chart[i];
    for (int k = 0; k < q; ++k) data.conn(i, k) = dot(deta, fp.normal[k]);
  }
  data.Dm = Mat::diagonal(data.lambdas);
  data.Nm = Mat(m, m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) data.Nm(r, s) = dot(data.conn.row(r), data.conn.row(s));
  return data;
}

Jet2 offset_jet(const NormalField& field, double t, const Vec& u) {
  Jet2 base = field.base.jet(u);
  const Jet2 eta = field.eta(u);
  axpy(base.value, t, eta.value);
  base.jacobian = base.jacobian + eta.jacobian * t;
  for (int c = 0; c < base.n(); ++c)
    base.hessians[c] = base.hessians[c] + eta.hessians[c] * t;
  return base;
}

}  // namespace

void validate_normal_field(const NormalField& field, int samples, double tol,
                           std::uint64_t seed) {
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec u = field.base.sample(rng);
    const Jet2 jet = field.base.jet(u);
    const Jet2 eta = field.eta(u);
    eta.check_shapes();
    if (eta.n() != jet.n() || eta.m() != jet.m())
      throw ContractViolation("normal field shape mismatch on " + field.base.name());
    if (std::abs(norm(eta.value) - field.length) > tol)
      throw ContractViolation("normal field length drifts on " + field.base.name());
    for (int j = 0; j < jet.m(); ++j) {
      if (std::abs(dot(eta.value, jet.jacobian.column(j))) > tol)
        throw ContractViolation("field is not normal to " + field.base.name());
    }
  }
}

OffsetData offset_data(const NormalField& field, const Vec& u, std::uint64_t seed) {
  return compute_data(field, u, seed);
}

Mat normal_connection(const NormalField& field, const Vec& u, std::uint64_t seed) {
  return compute_data(field, u, seed).conn;
}

ImmersionChart offset_immersion(const NormalField& field, double t,
                                std::uint64_t seed) {
  Rng rng(seed);
  const int m = field.base.m();
  for (int s = 0; s < 20; ++s) {
    const Vec u = field.base.sample(rng);
    const OffsetData data = compute_data(field, u, seed);
    Mat shrink = Mat::identity(m);
    for (int i = 0; i < m; ++i) shrink(i, i) -= t * data.lambdas[i];
    if (std::abs(det(shrink)) < 1e-10) throw ImmersionDegeneratesAtT(t);
  }
  NormalField copy = field;
  return ImmersionChart(
      m, field.base.n(), field.base.domain(), field.base.name() + "_offset",
      [copy, t](const Vec& u) { return offset_jet(copy, t, u); });
}

OffsetFrames offset_frames(const NormalField& field, const Vec& u, double t,
                           std::uint64_t seed) {
  OffsetFrames out;
  out.data = compute_data(field, u, seed);
  const OffsetData& data = out.data;
  const int m = field.base.m();
  const int q = static_cast<int>(data.normal.size());

  out.tangent.resize(m);
  for (int i = 0; i < m; ++i) {
    Vec x = scaled(data.frame[i], 1.0 - t * data.lambdas[i]);
    for (int k = 0; k < q; ++k) axpy(x, t * data.conn(i, k), data.normal[k]);
    out.tangent[i] = x;
  }
  out.normal.resize(q);
  for (int j = 0; j < q; ++j) {
    Vec xi = data.normal[j];
    for (int k = 0; k < m; ++k) {
      const double shrink = 1.0 - t * data.lambdas[k];
      if (std::abs(shrink) < 1e-12) throw ImmersionDegeneratesAtT(t);
      axpy(xi, -t * data.conn(k, j) / shrink, data.frame[k]);
    }
    out.normal[j] = xi;
  }
  return out;
}

Mat offset_metric(const NormalField& field, const Vec& u, double t,
                  std::uint64_t seed) {
  const OffsetData data = compute_data(field, u, seed);
  const int m = field.base.m();
  Mat g = data.Nm * (t * t);
  for (int r = 0; r < m; ++r) g(r, r) += (1.0 - t * data.lambdas[r]) * (1.0 - t * data.lambdas[r]);
  return g;
}

double offset_shape_trace(const NormalField& field, const Vec& u, double t,
                          std::uint64_t seed) {
  const OffsetData data = compute_data(field, u, seed);
  const Mat d2 = data.Dm * data.Dm;
  const Mat num = data.Dm - (d2 + data.Nm) * t;
  Mat den = d2 * (t * t) + data.Nm * (t * t) - data.Dm * (2.0 * t);
  for (int i = 0; i < den.rows(); ++i) den(i, i) += 1.0;
  const double scale = den.max_abs();
  if (std::abs(det(den)) <= 1e-12 * std::pow(std::max(scale, 1.0), den.rows()))
    throw SingularOffsetMetric("offset shape trace singular at t = " +
                               std::to_string(t));
  return trace(num * inv(den));
}

OffsetCertificate minimal_offsets_certificate(const NormalField& field,
                                              const std::vector<double>& t_grid,
                                              int samples, double tol,
                                              std::uint64_t seed) {
  OffsetCertificate cert;
  cert.offsets_minimal = true;
  for (double t : t_grid) {
    const ImmersionChart offset = offset_immersion(field, t, seed);
    const MinimalityReport rep = minimality_report(offset, samples, tol, seed);
    cert.max_offset_mean_curvature =
        std::max(cert.max_offset_mean_curvature, rep.max_mean_curvature);
    cert.offsets_minimal = cert.offsets_minimal && rep.is_minimal;
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const Vec u = field.base.sample(rng);
    const OffsetData data = compute_data(field, u, seed);
    cert.max_connection = std::max(cert.max_connection, data.conn.max_abs());
    cert.max_shape = std::max(cert.max_shape, data.Dm.max_abs());
  }
  cert.eta_constant = cert.max_connection < tol && cert.max_shape < tol;
  return cert;
}

FoliationResult foliation_flatness_check(const NormalField& field,
                                         const std::vector<double>& t_grid,
                                         double tol, std::uint64_t seed) {
  FoliationResult out;
  const OffsetCertificate cert =
      minimal_offsets_certificate(field, t_grid, 30, tol, seed);
  if (!cert.offsets_minimal) {
    out.verdict = FoliationVerdict::NotMinimalFoliation;
    return out;
  }

  // All leaves minimal: the base leaf must then sit in an affine subspace.
  Rng rng(seed);
  const Vec u0 = field.base.center();
  const Vec p0 = field.base.point(u0);
  const Jet2 eta0 = field.eta(u0);
  for (int s = 0; s < 40; ++s) {
    const Vec u = field.base.sample(rng);
    const ShapePack sp = second_fundamental_form(field.base, u, seed);
    for (const Mat& a : sp.alpha)
      out.max_leaf_sff = std::max(out.max_leaf_sff, a.max_abs());
    const Vec p = field.base.point(u);
    out.max_affine_residual =
        std::max(out.max_affine_residual, std::abs(dot(eta0.value, sub(p, p0))));
  }
  out.verdict = (out.max_leaf_sff < tol && out.max_affine_residual < 1e-8)
                    ? FoliationVerdict::TotallyGeodesic
                    : FoliationVerdict::NotMinimalFoliation;
  return out;
}

// ---- field catalog -----------------------------------------------------------

ImmersionChart affine_chart(const Vec& p0, const std::vector<Vec>& spans,
                            const std::string& name) {
  const int m = static_cast<int>(spans.size());
  const int n = static_cast<int>(p0.size());
  Box domain(m, {-1.0, 1.0});
  return ImmersionChart(m, n, domain, name, [p0, spans, m, n](const Vec& u) {
    Jet2 jet;
    jet.value = p0;
    jet.jacobian = Mat(n, m);
    for (int i = 0; i < m; ++i) {
      axpy(jet.value, u[i], spans[i]);
      for (int c = 0; c < n; ++c) jet.jacobian(c, i) = spans[i][c];
    }
    jet.hessians.assign(n, Mat(m, m));
    return jet;
  });
}

NormalField constant_field(const ImmersionChart& base, const Vec& eta0) {
  const int m = base.m();
  const int n = base.n();
  VectorJetField eta = [eta0, m, n](const Vec&) {
    Jet2 jet;
    jet.value = eta0;
    jet.jacobian = Mat(n, m);
    jet.hessians.assign(n, Mat(m, m));
    return jet;
  };
  return NormalField{base, std::move(eta), norm(eta0), "constant"};
}

NormalField sphere_outward_field(double r) {
  ImmersionChart base = builtin("round_sphere", {{"r", r}});
  VectorJetField eta = [base, r](const Vec& u) {
    Jet2 jet = base.jet(u);
    const double s = 1.0 / r;
    for (double& v : jet.value) v *= s;
    jet.jacobian = jet.jacobian * s;
    for (Mat& h : jet.hessians) h = h * s;
    return jet;
  };
  return NormalField{base, std::move(eta), 1.0, "sphere_outward"};
}

NormalField circle_rotating_field(double r, double a, double b) {
  VectorJetField eta = [a, b](const Vec& u) {
    const double t = u[0];
    const double cp = std::cos(a * t + b), sp = std::sin(a * t + b);
    const double ct = std::cos(t), st = std::sin(t);
    Jet2 jet;
    jet.value = {cp * ct, cp * st, sp};
    jet.jacobian = Mat(3, 1);
    jet.jacobian(0, 0) = -a * sp * ct - cp * st;
    jet.jacobian(1, 0) = -a * sp * st + cp * ct;
    jet.jacobian(2, 0) = a * cp;
    jet.hessians.assign(3, Mat(1, 1));
    jet.hessians[0](0, 0) = -(a * a + 1.0) * cp * ct + 2.0 * a * sp * st;
    jet.hessians[1](0, 0) = -(a * a + 1.0) * cp * st - 2.0 * a * sp * ct;
    jet.hessians[2](0, 0) = -a * a * sp;
    return jet;
  };
  return NormalField{builtin("circle", {{"r", r}}), std::move(eta), 1.0,
                     "circle_rotating"};
}

NormalField plane_rotating_field(const Vec& p0, const Vec& t1, const Vec& t2,
                                 const Vec& n1, const Vec& n2, double a, double c,
                                 double b) {
  const int n = static_cast<int>(p0.size());
  VectorJetField eta = [n1, n2, a, c, b, n](const Vec& u) {
    const double phi = a * u[0] + c * u[1] + b;
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double dphi[2] = {a, c};
    Jet2 jet;
    jet.value = add(scaled(n1, cp), scaled(n2, sp));
    const Vec dpsi = add(scaled(n1, -sp), scaled(n2, cp));  // d(eta)/d(phi)
    jet.jacobian = Mat(n, 2);
    for (int comp = 0; comp < n; ++comp)
      for (int j = 0; j < 2; ++j) jet.jacobian(comp, j) = dphi[j] * dpsi[comp];
    jet.hessians.assign(n, Mat(2, 2));
    for (int comp = 0; comp < n; ++comp)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          jet.hessians[comp](i, j) = -dphi[i] * dphi[j] * jet.value[comp];
    return jet;
  };
  return NormalField{affine_chart(p0, {t1, t2}, "plane4"), std::move(eta), 1.0,
                     "plane_rotating"};
}

NormalField line_rotating_field(double a) {
  VectorJetField eta = [a](const Vec& u) {
    const double phi = a * u[0];
    const double cp = std::cos(phi), sp = std::sin(phi);
    Jet2 jet;
    jet.value = {0.0, cp, sp};
    jet.jacobian = Mat(3, 1);
    jet.jacobian(1, 0) = -a * sp;
    jet.jacobian(2, 0) = a * cp;
    jet.hessians.assign(3, Mat(1, 1));
    jet.hessians[1](0, 0) = -a * a * cp;
    jet.hessians[2](0, 0) = -a * a * sp;
    return jet;
  };
  return NormalField{builtin("line"), std::move(eta), 1.0, "line_rotating"};
}

NormalField cylinder_outward_field(double radius) {
  VectorJetField eta = [](const Vec& u) {
    const double ct = std::cos(u[0]), st = std::sin(u[0]);
    Jet2 jet;
    jet.value = {ct, st, 0.0};
    jet.jacobian = Mat(3, 2);
    jet.jacobian(0, 0) = -st;
    jet.jacobian(1, 0) = ct;
    jet.hessians.assign(3, Mat(2, 2));
    jet.hessians[0](0, 0) = -ct;
    jet.hessians[1](0, 0) = -st;
    return jet;
  };
  return NormalField{builtin("cylinder", {{"profile", 0.0}, {"radius", radius}}),
                     std::move(eta), 1.0, "cylinder_outward"};
}

NormalField catenoid_normal_field() {
  VectorJetField eta = [](const Vec& uv) {
    const double u = uv[0], v = uv[1];
    const double cu = std::cos(u), su = std::sin(u);
    const double sech = 1.0 / std::cosh(v), th = std::tanh(v);
    Jet2 jet;
    jet.value = {cu * sech, su * sech, -th};
    jet.jacobian = Mat(3, 2);
    jet.jacobian(0, 0) = -su * sech;
    jet.jacobian(0, 1) = -cu * sech * th;
    jet.jacobian(1, 0) = cu * sech;
    jet.jacobian(1, 1) = -su * sech * th;
    jet.jacobian(2, 1) = -sech * sech;
    jet.hessians.assign(3, Mat(2, 2));
    const double dvv = sech * th * th - sech * sech * sech;  // d^2(sech)/dv^2
    jet.hessians[0](0, 0) = -cu * sech;
    jet.hessians[0](0, 1) = jet.hessians[0](1, 0) = su * sech * th;
    jet.hessians[0](1, 1) = cu * dvv;
    jet.hessians[1](0, 0) = -su * sech;
    jet.hessians[1](0, 1) = jet.hessians[1](1, 0) = -cu * sech * th;
    jet.hessians[1](1, 1) = su * dvv;
    jet.hessians[2](1, 1) = 2.0 * sech * sech * th;
    return jet;
  };
  return NormalField{builtin("catenoid"), std::move(eta), 1.0, "catenoid_normal"};
}

std::vector<NormalField> normal_field_corpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NormalField> corpus;
  corpus.reserve(count);
  while (static_cast<int>(corpus.size()) < count) {
    NormalField field = [&]() -> NormalField {
      switch (static_cast<int>(corpus.size()) % 6) {
        case 0:
          return circle_rotating_field(rng.uniform(0.7, 2.0), rng.uniform(0.3, 2.0),
                                       rng.uniform(0.0, 3.0));
        case 1: {
          const Mat frame = rng.orthogonal(4);
          return plane_rotating_field(rng.vector(4, -0.5, 0.5), frame.column(0),
                                      frame.column(1), frame.column(2),
                                      frame.column(3), rng.uniform(0.3, 1.5),
                                      rng.uniform(0.3, 1.5), rng.uniform(0.0, 3.0));
        }
        case 2:
          return sphere_outward_field(rng.uniform(0.8, 2.5));
        case 3:
          return cylinder_outward_field(rng.uniform(0.8, 2.5));
        case 4:
          return line_rotating_field(rng.uniform(0.3, 2.0));
        default:
          return catenoid_normal_field();
      }
    }();
    validate_normal_field(field);
    corpus.push_back(std::move(field));
  }
  return corpus;
}

}  // namespace helixlab
