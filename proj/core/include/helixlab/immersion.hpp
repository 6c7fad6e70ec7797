#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "helixlab/numerics.hpp"

namespace helixlab {

// Value, gradient and Hessian of a scalar field on a chart box.
struct ScalarJet2 {
  double value = 0.0;
  Vec grad;
  Mat hess;
};

using ScalarJetField = std::function<ScalarJet2(const Vec&)>;
// R^m -> R^n field with exact jets (vector fields along a chart).
using VectorJetField = std::function<Jet2(const Vec&)>;

using Box = std::vector<std::array<double, 2>>;

// Parametrized immersion of an m-dimensional chart box into R^n with exact
// second-order jets. Immutable after construction.
class ImmersionChart {
 public:
  ImmersionChart(int m, int n, Box domain, std::string name,
                 std::function<Jet2(const Vec&)> eval);

  int m() const { return m_; }
  int n() const { return n_; }
  const Box& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  Jet2 jet(const Vec& u) const;
  Vec point(const Vec& u) const;
  Vec center() const;
  // Seeded interior sample, keeping a relative margin from the boundary.
  Vec sample(Rng& rng, double margin_frac = 0.05) const;
  bool contains(const Vec& u, double margin_frac = 0.0) const;

 private:
  int m_;
  int n_;
  Box domain_;
  std::string name_;
  std::function<Jet2(const Vec&)> eval_;
};

// Smallest singular value of a (tall) matrix; rank test helper.
double min_singular_value(const Mat& m);

// Checks jacobian rank == m at `samples` seeded interior points.
bool immersion_rank_check(const ImmersionChart& chart, int samples, Rng& rng,
                          double tol = 1e-8);

// ---- builtin corpus -------------------------------------------------------

// Known names: flat_plane, line, tilted_plane(theta), cylinder(profile, radius),
// cone(k), catenoid, helicoid, round_sphere(r), circle(r), complex_parabola,
// complex_line. Unknown names or invalid parameters throw ContractViolation.
ImmersionChart builtin(const std::string& name,
                       const std::map<std::string, double>& params = {});

// ---- graph construction (projection method) --------------------------------

// u -> (base(u), f(u)); the last ambient coordinate is the graph direction.
ImmersionChart graph_immersion(const ImmersionChart& base, const ScalarJetField& f,
                               const std::string& name = "graph");

// ---- scalar field catalog ---------------------------------------------------

ScalarJetField linear_field(Vec coeffs);
// sqrt(u_1^2 + ... + u_m^2); singular at the origin, keep domains away from it.
ScalarJetField radial_field(int m);
ScalarJetField product_field();  // u*v on 2d charts
ScalarJetField square_field(int axis, int m);

// ---- polynomial custom immersions ------------------------------------------

struct PolyTerm {
  double c = 0.0;
  std::vector<int> e;  // one exponent per chart variable
};
using PolyComponent = std::vector<PolyTerm>;

struct PolySpec {
  int m = 0;
  int n = 0;
  Box domain;
  std::vector<PolyComponent> components;  // exactly n
};

ScalarJet2 poly_jet(const PolyComponent& comp, const Vec& u);
PolySpec parse_poly_spec(const std::string& json_text);
ImmersionChart chart_from_spec(const PolySpec& spec, const std::string& name = "poly");
ImmersionChart load_poly(const std::string& path);

// ---- slice method -----------------------------------------------------------

// p -> p + s*T(p) for a unit field T along L (validated at seeded samples).
ImmersionChart slice_extension(const ImmersionChart& L, const VectorJetField& T,
                               double s, double residual_tol = 1e-6);

}  // namespace helixlab
