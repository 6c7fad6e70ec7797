#pragma once

#include "helixlab/immersion.hpp"
#include "helixlab/numerics.hpp"

namespace helixlab {

// Orthonormal tangent and normal frames at a chart point. tangent_chart holds
// the chart-coordinate coefficients a_i with jacobian * a_i = tangent[i].
struct FramePack {
  Vec u;
  std::vector<Vec> tangent;        // m ambient vectors E_i
  std::vector<Vec> normal;         // n-m ambient vectors xi_j
  std::vector<Vec> tangent_chart;  // m chart vectors
};

// Second fundamental form data at a point, expressed in the FramePack frames.
struct ShapePack {
  std::vector<Mat> alpha;      // per normal direction: <alpha(E_i,E_j), xi_k>
  std::vector<Mat> shape_ops;  // A_{xi_k} in the tangent frame (equals alpha[k])
  Vec mean_curvature;          // ambient H = sum_k trace(alpha[k]) xi_k
};

struct MinimalityReport {
  double max_mean_curvature = 0.0;
  bool is_minimal = false;
};

// Tangent-space projector J (J^T J)^{-1} J^T; smooth in the base point.
Mat tangent_projector(const Mat& jacobian);
Vec tangent_project(const Mat& jacobian, const Vec& v);

// Normal frame is completed from seeded reference vectors; deterministic.
FramePack frames(const ImmersionChart& chart, const Vec& u,
                 std::uint64_t seed = Tolerances{}.seed, double rank_tol = 1e-8);

// alpha(E_i, E_j) from the exact second jet; sign convention A_eta(X) = -(D_X eta)^T.
ShapePack second_fundamental_form(const ImmersionChart& chart, const Vec& u,
                                  std::uint64_t seed = Tolerances{}.seed);
ShapePack second_fundamental_form(const Jet2& jet, const FramePack& fp);

Vec mean_curvature(const ImmersionChart& chart, const Vec& u,
                   std::uint64_t seed = Tolerances{}.seed);

// Shape operator matrix in the tangent frame for an arbitrary normal direction.
Mat shape_operator(const ShapePack& sp, const FramePack& fp, const Vec& xi);

MinimalityReport minimality_report(const ImmersionChart& chart, int sample_count,
                                   double tol, std::uint64_t seed = Tolerances{}.seed);

}  // namespace helixlab
