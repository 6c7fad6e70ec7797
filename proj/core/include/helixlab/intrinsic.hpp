#pragma once

#include <string>
#include <vector>

#include "helixlab/immersion.hpp"
#include "helixlab/numerics.hpp"

namespace helixlab {

// One verified identity: left side, right side, their distance.
struct CheckRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool pass = false;
};

CheckRecord make_check(const std::string& name, double lhs, double rhs, double tol);

// Scalar field with exact derivatives up to third order.
struct ScalarField {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> grad;
  std::function<Mat(const Vec&)> hess;
  // third(u)[a](i,j) = d_a d_i d_j f; needed to build exact derived metrics.
  std::function<std::vector<Mat>(const Vec&)> third;
};

ScalarField scalar_linear(Vec coeffs);
ScalarField scalar_coordinate(int axis, int m);
ScalarField scalar_radial(int m);
ScalarField scalar_square(int axis, int m);

// Intrinsic Riemannian metric field on a chart box, with exact first and
// second coordinate derivatives of g.
class MetricChart {
 public:
  MetricChart(int m, Box domain, std::string name,
              std::function<Mat(const Vec&)> g,
              std::function<std::vector<Mat>(const Vec&)> dg,
              std::function<std::vector<std::vector<Mat>>(const Vec&)> ddg);

  // dg and ddg obtained by central differences of g.
  static MetricChart with_fd_derivatives(int m, Box domain, std::string name,
                                         std::function<Mat(const Vec&)> g,
                                         double step = 1e-4);

  int m() const { return m_; }
  const Box& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  Mat g(const Vec& u) const;
  std::vector<Mat> dg(const Vec& u) const;                // [k] = d_k g
  std::vector<std::vector<Mat>> ddg(const Vec& u) const;  // [k][l] = d_k d_l g
  Vec sample(Rng& rng, double margin_frac = 0.05) const;
  Vec center() const;

 private:
  int m_;
  Box domain_;
  std::string name_;
  std::function<Mat(const Vec&)> g_;
  std::function<std::vector<Mat>(const Vec&)> dg_;
  std::function<std::vector<std::vector<Mat>>(const Vec&)> ddg_;
};

// ---- metric catalog ---------------------------------------------------------

MetricChart flat_metric(int m, Box domain);
// e^{2z} dx^2 + e^{-2z} dy^2 + dz^2 on R^3.
MetricChart sol_metric();
// Flat R^2 written in polar coordinates (r, theta).
MetricChart polar_flat_metric();
// Pullback of the Euclidean metric under an immersion; second derivatives of
// g come from central differences of the analytic first derivatives.
MetricChart induced_metric(const ImmersionChart& chart, double fd_step = 1e-4);
// h = g + df (x) df, with exact derivatives (uses f's third-order jets).
MetricChart helix_metric(const MetricChart& g, const ScalarField& f);

// ---- curvature machinery ------------------------------------------------------

// Sign convention throughout: R(X,Y)Z = -Nabla_X Nabla_Y Z + Nabla_Y Nabla_X Z
// + Nabla_{[X,Y]} Z, and Ric(X,Y) = sum_j <R(X,E_j)Y, E_j> over an orthonormal
// frame. This is the negative of the more common convention; it is fixed here
// and asserted by the flat/space-form tests, never configurable.
struct CurvaturePack {
  int m = 0;
  std::vector<Mat> christoffels;  // [k](i,j) = Gamma^k_ij
  std::vector<double> riemann_up;   // R(d_i,d_j)d_k = sum_l up(i,j,k,l) d_l
  std::vector<double> riemann_low;  // <R(d_i,d_j)d_k, d_l>
  Mat ricci;

  double up(int i, int j, int k, int l) const {
    return riemann_up[((i * m + j) * m + k) * m + l];
  }
  double low(int i, int j, int k, int l) const {
    return riemann_low[((i * m + j) * m + k) * m + l];
  }
  // Max residual of R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0.
  double bianchi_residual() const;
};

std::vector<Mat> christoffels(const MetricChart& metric, const Vec& u);
CurvaturePack curvature(const MetricChart& metric, const Vec& u);
Mat ricci(const MetricChart& metric, const Vec& u);

Vec gradient(const MetricChart& metric, const ScalarField& f, const Vec& u);
Mat hessian(const MetricChart& metric, const ScalarField& f, const Vec& u);
double laplacian(const MetricChart& metric, const ScalarField& f, const Vec& u);
double gradient_norm(const MetricChart& metric, const ScalarField& f, const Vec& u);

struct EikonalReport {
  double norm_mean = 0.0;
  double spread = 0.0;
  bool is_eikonal = false;
};

EikonalReport eikonal_check(const MetricChart& metric, const ScalarField& f,
                            int samples, double tol,
                            std::uint64_t seed = Tolerances{}.seed);

// The derived-metric comparison suite: volume form, gradient, connection,
// Hessian, Laplacian and Ricci-along-gradient relations between (B,g) and
// (B, h = g + df (x) df) for an eikonal f. Left sides come from the generic
// machinery on h; right sides from the closed formulas on g-quantities.
std::vector<CheckRecord> comparison_report(const MetricChart& g, const ScalarField& f,
                                           const Vec& u, double tol = 1e-5);

// Ric_g(grad_g f, grad_g f).
double ricci_gradient_check(const MetricChart& g, const ScalarField& f, const Vec& u);

// Full verification table for the Sol metric: connection coefficients,
// curvature pairings, the Ricci table, harmonicity/eikonality of f = z, and
// non-parallelism of d_z.
std::vector<CheckRecord> sol_verification(double tol = 1e-8);

}  // namespace helixlab
