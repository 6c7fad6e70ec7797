#include "helixlab/extrinsic.hpp"

#include <cmath>

namespace helixlab {

Mat tangent_projector(const Mat& jacobian) {
  const Mat jt = jacobian.transposed();
  return jacobian * inv(jt * jacobian) * jt;
}

Vec tangent_project(const Mat& jacobian, const Vec& v) {
  const Mat jt = jacobian.transposed();
  const Vec a = solve(jt * jacobian, jt * v);
  return jacobian * a;
}

FramePack frames(const ImmersionChart& chart, const Vec& u, std::uint64_t seed,
                 double rank_tol) {
  const Jet2 jet = chart.jet(u);
  const int m = chart.m(), n = chart.n();
  if (min_singular_value(jet.jacobian) <= rank_tol)
    throw DegenerateImmersion("jacobian rank deficient at sampled point of " +
                              chart.name());

  std::vector<Vec> cols;
  for (int j = 0; j < m; ++j) cols.push_back(jet.jacobian.column(j));
  FramePack fp;
  fp.u = u;
  fp.tangent = gram_schmidt(cols, rank_tol);
  if (static_cast<int>(fp.tangent.size()) != m)
    throw DegenerateImmersion("tangent frame collapsed at sampled point of " +
                              chart.name());

  Rng rng(seed);
  std::vector<Vec> combined = fp.tangent;
  while (static_cast<int>(combined.size()) < n) {
    std::vector<Vec> cand = combined;
    cand.push_back(rng.unit_vector(n));
    combined = gram_schmidt(cand, 1e-6);
  }
  fp.normal.assign(combined.begin() + m, combined.end());

  const Mat jt = jet.jacobian.transposed();
  const Mat gram_inv = inv(jt * jet.jacobian);
  for (const Vec& e : fp.tangent) fp.tangent_chart.push_back(gram_inv * (jt * e));
  return fp;
}

ShapePack second_fundamental_form(const Jet2& jet, const FramePack& fp) {
  const int m = jet.m(), n = jet.n();
  const int codim = n - m;
  ShapePack sp;
  sp.alpha.assign(codim, Mat(m, m));
  sp.mean_curvature.assign(n, 0.0);

  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      // Second derivative of the chart along the frame directions; its normal
      // projection is alpha (tangential Christoffel terms drop out).
      Vec w(n);
      for (int c = 0; c < n; ++c)
        w[c] = dot(fp.tangent_chart[i], jet.hessians[c] * fp.tangent_chart[j]);
      for (int k = 0; k < codim; ++k) {
        const double a = dot(w, fp.normal[k]);
        sp.alpha[k](i, j) = a;
        sp.alpha[k](j, i) = a;
      }
    }
  }
  sp.shape_ops = sp.alpha;
  for (int k = 0; k < codim; ++k)
    axpy(sp.mean_curvature, trace(sp.alpha[k]), fp.normal[k]);
  return sp;
}

ShapePack second_fundamental_form(const ImmersionChart& chart, const Vec& u,
                                  std::uint64_t seed) {
  const FramePack fp = frames(chart, u, seed);
  return second_fundamental_form(chart.jet(u), fp);
}

Vec mean_curvature(const ImmersionChart& chart, const Vec& u, std::uint64_t seed) {
  return second_fundamental_form(chart, u, seed).mean_curvature;
}

Mat shape_operator(const ShapePack& sp, const FramePack& fp, const Vec& xi) {
  const int m = static_cast<int>(fp.tangent.size());
  Mat a(m, m);
  for (std::size_t k = 0; k < fp.normal.size(); ++k) {
    const double c = dot(xi, fp.normal[k]);
    if (c != 0.0) a = a + sp.alpha[k] * c;
  }
  return a;
}

MinimalityReport minimality_report(const ImmersionChart& chart, int sample_count,
                                   double tol, std::uint64_t seed) {
  if (sample_count < 1) throw ContractViolation("sample_count must be >= 1");
  Rng rng(seed);
  MinimalityReport rep;
  for (int s = 0; s < sample_count; ++s) {
    const Vec u = chart.sample(rng);
    const double h = norm(mean_curvature(chart, u, seed));
    rep.max_mean_curvature = std::max(rep.max_mean_curvature, h);
  }
  rep.is_minimal = rep.max_mean_curvature < tol;
  return rep;
}

}  // namespace helixlab
