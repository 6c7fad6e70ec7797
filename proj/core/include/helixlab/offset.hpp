#pragma once

#include "helixlab/extrinsic.hpp"
#include "helixlab/immersion.hpp"

namespace helixlab {

// Constant-length normal field along a base chart, with exact jets.
struct NormalField {
  ImmersionChart base;
  VectorJetField eta;
  double length = 1.0;
  std::string name;
};

// Checks normality and constant length at seeded samples.
void validate_normal_field(const NormalField& field, int samples = 25,
                           double tol = 1e-9, std::uint64_t seed = Tolerances{}.seed);

// Shape-operator eigendata of the base in direction eta, plus the D and N
// matrices built from it: D = diag(lambda), N_ij = <nabla^perp_i eta, nabla^perp_j eta>.
struct OffsetData {
  Vec lambdas;                  // descending eigenvalues of A_eta
  std::vector<Vec> frame;       // diagonalizing tangent frame (ambient)
  std::vector<Vec> frame_chart; // chart coefficients of the frame
  std::vector<Vec> normal;      // orthonormal normal frame
  Mat conn;                     // (i,k) = <D_{E_i} eta, xi_k>
  Mat Dm;
  Mat Nm;
};

OffsetData offset_data(const NormalField& field, const Vec& u,
                       std::uint64_t seed = Tolerances{}.seed);

// Components of nabla^perp_{E_i} eta in the normal frame (rows: frame index).
Mat normal_connection(const NormalField& field, const Vec& u,
                      std::uint64_t seed = Tolerances{}.seed);

// u -> base(u) + t*eta(u); throws ImmersionDegeneratesAtT when det(1 - t A_eta)
// vanishes at a seeded sample.
ImmersionChart offset_immersion(const NormalField& field, double t,
                                std::uint64_t seed = Tolerances{}.seed);

struct OffsetFrames {
  std::vector<Vec> tangent;  // X_i = (1 - t lambda_i) E_i + t nabla^perp_{E_i} eta
  std::vector<Vec> normal;   // xi~_j
  OffsetData data;
};

OffsetFrames offset_frames(const NormalField& field, const Vec& u, double t,
                           std::uint64_t seed = Tolerances{}.seed);

// G_rs = (1 - t lambda_r)(1 - t lambda_s) delta_rs + t^2 N_rs.
Mat offset_metric(const NormalField& field, const Vec& u, double t,
                  std::uint64_t seed = Tolerances{}.seed);

// Tr((D - tD^2 - tN)[1 - 2tD + t^2(D^2 + N)]^{-1}).
double offset_shape_trace(const NormalField& field, const Vec& u, double t,
                          std::uint64_t seed = Tolerances{}.seed);

struct OffsetCertificate {
  bool offsets_minimal = false;
  bool eta_constant = false;
  double max_offset_mean_curvature = 0.0;
  double max_connection = 0.0;
  double max_shape = 0.0;
};

OffsetCertificate minimal_offsets_certificate(const NormalField& field,
                                              const std::vector<double>& t_grid,
                                              int samples, double tol,
                                              std::uint64_t seed = Tolerances{}.seed);

enum class FoliationVerdict { TotallyGeodesic, NotMinimalFoliation };

struct FoliationResult {
  FoliationVerdict verdict = FoliationVerdict::NotMinimalFoliation;
  double max_leaf_sff = 0.0;
  double max_affine_residual = 0.0;
};

// If every leaf base + t*eta in the grid is minimal, asserts the leaf is an
// open piece of an affine subspace (vanishing sff and hyperplane containment).
FoliationResult foliation_flatness_check(const NormalField& field,
                                         const std::vector<double>& t_grid,
                                         double tol,
                                         std::uint64_t seed = Tolerances{}.seed);

// ---- field catalog -----------------------------------------------------------

ImmersionChart affine_chart(const Vec& p0, const std::vector<Vec>& spans,
                            const std::string& name = "affine");

NormalField constant_field(const ImmersionChart& base, const Vec& eta0);
// Outward unit normal on round_sphere(r).
NormalField sphere_outward_field(double r);
// On circle(r) in R^3: cos(a t + b) * radial + sin(a t + b) * e3.
NormalField circle_rotating_field(double r, double a, double b);
// On an affine plane span(t1, t2) in R^4 with normals (n1, n2):
// cos(a u + c v + b) n1 + sin(a u + c v + b) n2.
NormalField plane_rotating_field(const Vec& p0, const Vec& t1, const Vec& t2,
                                 const Vec& n1, const Vec& n2, double a, double c,
                                 double b);
// On the line along e1 in R^3: cos(a t) e2 + sin(a t) e3.
NormalField line_rotating_field(double a);
// Outward unit normal on the circular cylinder of the given radius.
NormalField cylinder_outward_field(double radius);
// Unit normal of the catenoid chart.
NormalField catenoid_normal_field();

// Seeded mix of the families above (validated); deterministic given the seed.
std::vector<NormalField> normal_field_corpus(int count, std::uint64_t seed);

}  // namespace helixlab
