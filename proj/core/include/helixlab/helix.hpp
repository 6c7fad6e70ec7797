#pragma once

#include "helixlab/extrinsic.hpp"
#include "helixlab/immersion.hpp"
#include "helixlab/numerics.hpp"

namespace helixlab {

// Angle statistics of a chart against a fixed ambient direction d.
struct HelixReport {
  Vec direction;  // normalized d
  std::vector<double> angle_samples;
  double angle_mean = 0.0;
  double angle_spread = 0.0;
  double eikonal_residual = 0.0;  // spread of |grad_M h_d|
  bool is_helix = false;
  bool is_cylinder = false;
  bool t_defined = true;  // false when theta ~ pi/2 (T undefined, checks skipped)
};

struct RuledResult {
  double residual = 0.0;
  bool truncated = false;  // an integral curve left the chart box
};

struct LaplacianHeightResult {
  double lhs = 0.0;   // Laplace-Beltrami of the height function
  double rhs1 = 0.0;  // <H, d>
  double rhs2 = 0.0;  // sin(theta) <H, xi>
  bool has_rhs2 = false;
};

struct ComplexHelixResult {
  double jt_geodesic_residual = 0.0;
  double bracket_residual = 0.0;
};

struct RicciTResult {
  double ric_tt = 0.0;
  double shape_t_norm = 0.0;  // |A^N T|; relative nullity when ~0
  bool applicable = false;
};

// theta = arccos |d^T| with d normalized; equals the angle between T_pM and d.
double helix_angle(const ImmersionChart& chart, const Vec& u, const Vec& d);

// T = d^T / |d^T|; throws VerticalDirection when theta ~ pi/2.
Vec tangential_T(const ImmersionChart& chart, const Vec& u, const Vec& d,
                 double residual_tol = 1e-6);

HelixReport is_helix(const ImmersionChart& chart, const Vec& d, int samples,
                     double tol, std::uint64_t seed = Tolerances{}.seed);

// Integrates the T field and measures deviation of the ambient curve from the
// straight line through its start. Small residual = ruled.
RuledResult is_ruled(const ImmersionChart& chart, const Vec& d, int samples,
                     int step_count, double tol,
                     std::uint64_t seed = Tolerances{}.seed,
                     double curve_length = 0.5);

// max_i |nabla_{E_i} T - tan(theta) A^xi(E_i)| with xi = d^perp/|d^perp|.
double structure_equation_residual(const ImmersionChart& chart, const Vec& d,
                                   const Vec& u, double fd_step = 1e-5,
                                   std::uint64_t seed = Tolerances{}.seed);

LaplacianHeightResult laplacian_height_check(const ImmersionChart& chart, const Vec& d,
                                             const Vec& u,
                                             std::uint64_t seed = Tolerances{}.seed);

// Straightness of JT integral curves and the [T, JT] flow commutator, for
// charts with J-invariant tangent spaces (throws NonComplexSubmanifold).
ComplexHelixResult complex_helix_checks(const ImmersionChart& chart, const Vec& d,
                                        const Vec& u, double tol = 1e-6,
                                        std::uint64_t seed = Tolerances{}.seed);

// Standard complex structure on R^{2k}: (x1,y1,...) -> (-y1,x1,...).
Vec complex_structure(const Vec& v);

// Hypersurfaces only: spread of |<unit normal, d>| over seeded samples.
double gauss_image_check(const ImmersionChart& chart, const Vec& d, int samples,
                         std::uint64_t seed = Tolerances{}.seed);

RicciTResult ricci_T_check(const ImmersionChart& chart, const Vec& d, const Vec& u,
                           std::uint64_t seed = Tolerances{}.seed);

// Affine rank of sampled ambient points (singular-value cutoff, relative).
int affine_rank(const ImmersionChart& chart, int samples, double cutoff = 1e-8,
                std::uint64_t seed = Tolerances{}.seed);

}  // namespace helixlab
