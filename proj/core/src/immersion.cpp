#include "helixlab/immersion.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace helixlab {

ImmersionChart::ImmersionChart(int m, int n, Box domain, std::string name,
                               std::function<Jet2(const Vec&)> eval)
    : m_(m), n_(n), domain_(std::move(domain)), name_(std::move(name)),
      eval_(std::move(eval)) {
  if (m_ < 1 || n_ < m_) throw ContractViolation("chart requires 1 <= m <= n");
  if (static_cast<int>(domain_.size()) != m_)
    throw ContractViolation("chart domain dimension mismatch");
  for (const auto& r : domain_)
    if (!(r[0] < r[1])) throw ContractViolation("chart domain box is empty");
}

Jet2 ImmersionChart::jet(const Vec& u) const {
  if (static_cast<int>(u.size()) != m_)
    throw ContractViolation("chart point dimension mismatch");
  Jet2 j = eval_(u);
  return j;
}

Vec ImmersionChart::point(const Vec& u) const { return jet(u).value; }

Vec ImmersionChart::center() const {
  Vec c(m_);
  for (int i = 0; i < m_; ++i) c[i] = 0.5 * (domain_[i][0] + domain_[i][1]);
  return c;
}

Vec ImmersionChart::sample(Rng& rng, double margin_frac) const {
  Vec u(m_);
  for (int i = 0; i < m_; ++i) {
    const double w = domain_[i][1] - domain_[i][0];
    u[i] = rng.uniform(domain_[i][0] + margin_frac * w, domain_[i][1] - margin_frac * w);
  }
  return u;
}

bool ImmersionChart::contains(const Vec& u, double margin_frac) const {
  for (int i = 0; i < m_; ++i) {
    const double w = domain_[i][1] - domain_[i][0];
    if (u[i] < domain_[i][0] + margin_frac * w || u[i] > domain_[i][1] - margin_frac * w)
      return false;
  }
  return true;
}

double min_singular_value(const Mat& m) {
  const Mat gram = m.transposed() * m;
  const EigenSystem es = sym_eig(gram);
  const double lam = es.values.back();
  return std::sqrt(std::max(lam, 0.0));
}

bool immersion_rank_check(const ImmersionChart& chart, int samples, Rng& rng,
                          double tol) {
  for (int s = 0; s < samples; ++s) {
    const Vec u = chart.sample(rng);
    if (min_singular_value(chart.jet(u).jacobian) <= tol) return false;
  }
  return true;
}

namespace {

Jet2 make_jet(int m, int n) {
  Jet2 j;
  j.value.assign(n, 0.0);
  j.jacobian = Mat(n, m);
  j.hessians.assign(n, Mat(m, m));
  return j;
}

double param(const std::map<std::string, double>& p, const std::string& key,
             double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

ImmersionChart make_flat_plane() {
  return ImmersionChart(2, 2, {{{-1.0, 1.0}, {-1.0, 1.0}}}, "flat_plane",
                        [](const Vec& u) {
                          Jet2 j = make_jet(2, 2);
                          j.value = u;
                          j.jacobian(0, 0) = 1.0;
                          j.jacobian(1, 1) = 1.0;
                          return j;
                        });
}

ImmersionChart make_line() {
  return ImmersionChart(1, 3, {{{-1.0, 1.0}}}, "line", [](const Vec& u) {
    Jet2 j = make_jet(1, 3);
    j.value[0] = u[0];
    j.jacobian(0, 0) = 1.0;
    return j;
  });
}

ImmersionChart make_tilted_plane(double theta) {
  if (!(theta > 0.0 && theta <= M_PI / 2.0 + 1e-12))
    throw ContractViolation("tilted_plane needs theta in (0, pi/2]");
  const double slope = std::abs(theta - M_PI / 2.0) < 1e-12 ? 0.0 : 1.0 / std::tan(theta);
  return ImmersionChart(2, 3, {{{-1.0, 1.0}, {-1.0, 1.0}}}, "tilted_plane",
                        [slope](const Vec& u) {
                          Jet2 j = make_jet(2, 3);
                          j.value = {u[0], u[1], slope * u[0]};
                          j.jacobian(0, 0) = 1.0;
                          j.jacobian(1, 1) = 1.0;
                          j.jacobian(2, 0) = slope;
                          return j;
                        });
}

ImmersionChart make_cone(double k) {
  if (!(k > 0.0)) throw ContractViolation("cone slope k must be positive");
  // Box in the positive quadrant: stays clear of the apex singularity.
  Box dom = {{{0.4, 2.2}, {0.35, 2.1}}};
  return ImmersionChart(2, 3, dom, "cone", [k](const Vec& u) {
    const double x = u[0], y = u[1];
    const double r = std::sqrt(x * x + y * y);
    Jet2 j = make_jet(2, 3);
    j.value = {x, y, k * r};
    j.jacobian(0, 0) = 1.0;
    j.jacobian(1, 1) = 1.0;
    j.jacobian(2, 0) = k * x / r;
    j.jacobian(2, 1) = k * y / r;
    const double r3 = r * r * r;
    j.hessians[2](0, 0) = k * y * y / r3;
    j.hessians[2](1, 1) = k * x * x / r3;
    j.hessians[2](0, 1) = -k * x * y / r3;
    j.hessians[2](1, 0) = j.hessians[2](0, 1);
    return j;
  });
}

ImmersionChart make_catenoid() {
  Box dom = {{{0.2, 1.8}, {-0.9, 0.9}}};
  return ImmersionChart(2, 3, dom, "catenoid", [](const Vec& uv) {
    const double u = uv[0], v = uv[1];
    const double cu = std::cos(u), su = std::sin(u);
    const double ch = std::cosh(v), sh = std::sinh(v);
    Jet2 j = make_jet(2, 3);
    j.value = {ch * cu, ch * su, v};
    j.jacobian(0, 0) = -ch * su;
    j.jacobian(0, 1) = sh * cu;
    j.jacobian(1, 0) = ch * cu;
    j.jacobian(1, 1) = sh * su;
    j.jacobian(2, 1) = 1.0;
    j.hessians[0](0, 0) = -ch * cu;
    j.hessians[0](0, 1) = -sh * su;
    j.hessians[0](1, 0) = -sh * su;
    j.hessians[0](1, 1) = ch * cu;
    j.hessians[1](0, 0) = -ch * su;
    j.hessians[1](0, 1) = sh * cu;
    j.hessians[1](1, 0) = sh * cu;
    j.hessians[1](1, 1) = ch * su;
    return j;
  });
}

ImmersionChart make_helicoid() {
  Box dom = {{{-1.0, 1.0}, {0.5, 1.6}}};
  return ImmersionChart(2, 3, dom, "helicoid", [](const Vec& uv) {
    const double u = uv[0], v = uv[1];
    const double cu = std::cos(u), su = std::sin(u);
    Jet2 j = make_jet(2, 3);
    j.value = {v * cu, v * su, u};
    j.jacobian(0, 0) = -v * su;
    j.jacobian(0, 1) = cu;
    j.jacobian(1, 0) = v * cu;
    j.jacobian(1, 1) = su;
    j.jacobian(2, 0) = 1.0;
    j.hessians[0](0, 0) = -v * cu;
    j.hessians[0](0, 1) = -su;
    j.hessians[0](1, 0) = -su;
    j.hessians[1](0, 0) = -v * su;
    j.hessians[1](0, 1) = cu;
    j.hessians[1](1, 0) = cu;
    return j;
  });
}

ImmersionChart make_round_sphere(double r) {
  if (!(r > 0.0)) throw ContractViolation("round_sphere radius must be positive");
  // Polar coordinate u stays away from both poles.
  Box dom = {{{0.5, 2.4}, {0.2, 2.8}}};
  return ImmersionChart(2, 3, dom, "round_sphere", [r](const Vec& uv) {
    const double u = uv[0], v = uv[1];
    const double su = std::sin(u), cu = std::cos(u);
    const double sv = std::sin(v), cv = std::cos(v);
    Jet2 j = make_jet(2, 3);
    j.value = {r * su * cv, r * su * sv, r * cu};
    j.jacobian(0, 0) = r * cu * cv;
    j.jacobian(0, 1) = -r * su * sv;
    j.jacobian(1, 0) = r * cu * sv;
    j.jacobian(1, 1) = r * su * cv;
    j.jacobian(2, 0) = -r * su;
    j.hessians[0](0, 0) = -r * su * cv;
    j.hessians[0](0, 1) = -r * cu * sv;
    j.hessians[0](1, 0) = -r * cu * sv;
    j.hessians[0](1, 1) = -r * su * cv;
    j.hessians[1](0, 0) = -r * su * sv;
    j.hessians[1](0, 1) = r * cu * cv;
    j.hessians[1](1, 0) = r * cu * cv;
    j.hessians[1](1, 1) = -r * su * sv;
    j.hessians[2](0, 0) = -r * cu;
    return j;
  });
}

ImmersionChart make_circle(double r) {
  if (!(r > 0.0)) throw ContractViolation("circle radius must be positive");
  Box dom = {{{0.0, 5.9}}};
  return ImmersionChart(1, 3, dom, "circle", [r](const Vec& t) {
    const double c = std::cos(t[0]), s = std::sin(t[0]);
    Jet2 j = make_jet(1, 3);
    j.value = {r * c, r * s, 0.0};
    j.jacobian(0, 0) = -r * s;
    j.jacobian(1, 0) = r * c;
    j.hessians[0](0, 0) = -r * c;
    j.hessians[1](0, 0) = -r * s;
    return j;
  });
}

ImmersionChart make_cylinder(int profile, double radius) {
  if (!(radius > 0.0)) throw ContractViolation("cylinder radius must be positive");
  Box dom = {{{0.0, 3.0}, {-1.0, 1.0}}};
  return ImmersionChart(2, 3, dom, "cylinder", [profile, radius](const Vec& ts) {
    const double t = ts[0], s = ts[1];
    Jet2 j = make_jet(2, 3);
    switch (profile) {
      case 0: {  // circle
        j.value = {radius * std::cos(t), radius * std::sin(t), s};
        j.jacobian(0, 0) = -radius * std::sin(t);
        j.jacobian(1, 0) = radius * std::cos(t);
        j.hessians[0](0, 0) = -radius * std::cos(t);
        j.hessians[1](0, 0) = -radius * std::sin(t);
        break;
      }
      case 1: {  // parabola
        j.value = {t, radius * t * t, s};
        j.jacobian(0, 0) = 1.0;
        j.jacobian(1, 0) = 2.0 * radius * t;
        j.hessians[1](0, 0) = 2.0 * radius;
        break;
      }
      case 2: {  // sine wave
        j.value = {t, radius * std::sin(t), s};
        j.jacobian(0, 0) = 1.0;
        j.jacobian(1, 0) = radius * std::cos(t);
        j.hessians[1](0, 0) = -radius * std::sin(t);
        break;
      }
      default:
        throw ContractViolation("cylinder profile must be 0, 1 or 2");
    }
    j.jacobian(2, 1) = 1.0;
    return j;
  });
}

ImmersionChart make_complex_parabola() {
  // z -> (z, z^2) as a real chart into R^4 with coordinates (Re, Im) pairs.
  Box dom = {{{0.3, 1.7}, {-0.7, 0.7}}};
  return ImmersionChart(2, 4, dom, "complex_parabola", [](const Vec& u) {
    const double x = u[0], y = u[1];
    Jet2 j = make_jet(2, 4);
    j.value = {x, y, x * x - y * y, 2.0 * x * y};
    j.jacobian(0, 0) = 1.0;
    j.jacobian(1, 1) = 1.0;
    j.jacobian(2, 0) = 2.0 * x;
    j.jacobian(2, 1) = -2.0 * y;
    j.jacobian(3, 0) = 2.0 * y;
    j.jacobian(3, 1) = 2.0 * x;
    j.hessians[2](0, 0) = 2.0;
    j.hessians[2](1, 1) = -2.0;
    j.hessians[3](0, 1) = 2.0;
    j.hessians[3](1, 0) = 2.0;
    return j;
  });
}

ImmersionChart make_complex_line(double off2, double off3) {
  Box dom = {{{-1.0, 1.0}, {-1.0, 1.0}}};
  return ImmersionChart(2, 4, dom, "complex_line", [off2, off3](const Vec& u) {
    Jet2 j = make_jet(2, 4);
    j.value = {u[0], u[1], off2, off3};
    j.jacobian(0, 0) = 1.0;
    j.jacobian(1, 1) = 1.0;
    return j;
  });
}

}  // namespace

ImmersionChart builtin(const std::string& name,
                       const std::map<std::string, double>& params) {
  if (name == "flat_plane") return make_flat_plane();
  if (name == "line") return make_line();
  if (name == "tilted_plane") return make_tilted_plane(param(params, "theta", M_PI / 4.0));
  if (name == "cone") return make_cone(param(params, "k", 1.0));
  if (name == "catenoid") return make_catenoid();
  if (name == "helicoid") return make_helicoid();
  if (name == "round_sphere") return make_round_sphere(param(params, "r", 1.0));
  if (name == "circle") return make_circle(param(params, "r", 1.0));
  if (name == "cylinder")
    return make_cylinder(static_cast<int>(param(params, "profile", 0.0)),
                         param(params, "radius", 1.0));
  if (name == "complex_parabola") return make_complex_parabola();
  if (name == "complex_line")
    return make_complex_line(param(params, "off2", 0.0), param(params, "off3", 0.0));
  throw ContractViolation("unknown builtin chart: " + name);
}

ImmersionChart graph_immersion(const ImmersionChart& base, const ScalarJetField& f,
                               const std::string& name) {
  const int m = base.m();
  const int n = base.n() + 1;
  return ImmersionChart(m, n, base.domain(), name, [m, n, base, f](const Vec& u) {
    const Jet2 b = base.jet(u);
    const ScalarJet2 s = f(u);
    Jet2 j;
    j.value = b.value;
    j.value.push_back(s.value);
    j.jacobian = Mat(n, m);
    for (int i = 0; i < n - 1; ++i)
      for (int k = 0; k < m; ++k) j.jacobian(i, k) = b.jacobian(i, k);
    for (int k = 0; k < m; ++k) j.jacobian(n - 1, k) = s.grad[k];
    j.hessians = b.hessians;
    j.hessians.push_back(s.hess);
    return j;
  });
}

ScalarJetField linear_field(Vec coeffs) {
  return [coeffs](const Vec& u) {
    const int m = static_cast<int>(u.size());
    ScalarJet2 s;
    s.value = dot(coeffs, u);
    s.grad = coeffs;
    s.hess = Mat(m, m);
    return s;
  };
}

ScalarJetField radial_field(int m) {
  return [m](const Vec& u) {
    const double r = norm(u);
    if (r < 1e-12) throw ContractViolation("radial field singular at the origin");
    ScalarJet2 s;
    s.value = r;
    s.grad = scaled(u, 1.0 / r);
    s.hess = Mat(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        s.hess(i, j) = ((i == j ? 1.0 : 0.0) - u[i] * u[j] / (r * r)) / r;
    return s;
  };
}

ScalarJetField product_field() {
  return [](const Vec& u) {
    ScalarJet2 s;
    s.value = u[0] * u[1];
    s.grad = {u[1], u[0]};
    s.hess = Mat(2, 2);
    s.hess(0, 1) = 1.0;
    s.hess(1, 0) = 1.0;
    return s;
  };
}

ScalarJetField square_field(int axis, int m) {
  return [axis, m](const Vec& u) {
    ScalarJet2 s;
    s.value = u[axis] * u[axis];
    s.grad.assign(m, 0.0);
    s.grad[axis] = 2.0 * u[axis];
    s.hess = Mat(m, m);
    s.hess(axis, axis) = 2.0;
    return s;
  };
}

namespace {

double pow_int(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

ScalarJet2 poly_jet(const PolyComponent& comp, const Vec& u) {
  const int m = static_cast<int>(u.size());
  ScalarJet2 s;
  s.grad.assign(m, 0.0);
  s.hess = Mat(m, m);
  for (const PolyTerm& t : comp) {
    double base = t.c;
    for (int i = 0; i < m; ++i) base *= pow_int(u[i], t.e[i]);
    // Re-derive per-variable factors so zero coordinates are handled exactly.
    auto partial = [&](int i) {
      if (t.e[i] == 0) return 0.0;
      double v = t.c * t.e[i] * pow_int(u[i], t.e[i] - 1);
      for (int k = 0; k < m; ++k)
        if (k != i) v *= pow_int(u[k], t.e[k]);
      return v;
    };
    auto partial2 = [&](int i, int j) {
      if (i == j) {
        if (t.e[i] < 2) return 0.0;
        double v = t.c * t.e[i] * (t.e[i] - 1) * pow_int(u[i], t.e[i] - 2);
        for (int k = 0; k < m; ++k)
          if (k != i) v *= pow_int(u[k], t.e[k]);
        return v;
      }
      if (t.e[i] == 0 || t.e[j] == 0) return 0.0;
      double v = t.c * t.e[i] * t.e[j] * pow_int(u[i], t.e[i] - 1) *
                 pow_int(u[j], t.e[j] - 1);
      for (int k = 0; k < m; ++k)
        if (k != i && k != j) v *= pow_int(u[k], t.e[k]);
      return v;
    };
    s.value += base;
    for (int i = 0; i < m; ++i) {
      s.grad[i] += partial(i);
      for (int j = i; j < m; ++j) {
        const double p2 = partial2(i, j);
        s.hess(i, j) += p2;
        if (i != j) s.hess(j, i) += p2;
      }
    }
  }
  return s;
}

PolySpec parse_poly_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  PolySpec spec;
  try {
    spec.m = j.at("m").get<int>();
    spec.n = j.at("n").get<int>();
    for (const auto& r : j.at("domain"))
      spec.domain.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
    for (const auto& comp : j.at("components")) {
      PolyComponent c;
      for (const auto& term : comp) {
        PolyTerm t;
        t.c = term.at("c").get<double>();
        for (const auto& e : term.at("e")) t.e.push_back(e.get<int>());
        c.push_back(t);
      }
      spec.components.push_back(c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial spec: ") + e.what());
  }
  if (spec.m < 1) throw ParseError("field m: must be >= 1");
  if (spec.m >= spec.n) throw ParseError("field n: need m < n for a custom immersion");
  if (static_cast<int>(spec.domain.size()) != spec.m)
    throw ParseError("field domain: expected exactly m ranges");
  if (static_cast<int>(spec.components.size()) != spec.n)
    throw ParseError("field components: expected exactly n component lists");
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    if (spec.components[ci].empty())
      throw ParseError("field components[" + std::to_string(ci) + "]: empty term list");
    for (const PolyTerm& t : spec.components[ci]) {
      if (static_cast<int>(t.e.size()) != spec.m)
        throw ParseError("field components[" + std::to_string(ci) +
                         "]: exponent list length must equal m");
      for (int e : t.e)
        if (e < 0)
          throw ParseError("field components[" + std::to_string(ci) +
                           "]: negative exponent");
    }
  }
  return spec;
}

ImmersionChart chart_from_spec(const PolySpec& spec, const std::string& name) {
  auto components = spec.components;
  const int m = spec.m, n = spec.n;
  return ImmersionChart(m, n, spec.domain, name, [components, m, n](const Vec& u) {
    Jet2 j;
    j.value.assign(n, 0.0);
    j.jacobian = Mat(n, m);
    j.hessians.assign(n, Mat(m, m));
    for (int c = 0; c < n; ++c) {
      const ScalarJet2 s = poly_jet(components[c], u);
      j.value[c] = s.value;
      for (int k = 0; k < m; ++k) j.jacobian(c, k) = s.grad[k];
      j.hessians[c] = s.hess;
    }
    return j;
  });
}

ImmersionChart load_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return chart_from_spec(parse_poly_spec(ss.str()), path);
}

ImmersionChart slice_extension(const ImmersionChart& L, const VectorJetField& T,
                               double s, double residual_tol) {
  Rng rng(1234);
  for (int i = 0; i < 20; ++i) {
    const Vec u = L.sample(rng);
    const double len = norm(T(u).value);
    if (std::abs(len - 1.0) > residual_tol)
      throw ContractViolation("slice_extension requires a unit field T");
  }
  const int m = L.m(), n = L.n();
  return ImmersionChart(m, n, L.domain(), L.name() + "_slice", [L, T, s, m, n](const Vec& u) {
    const Jet2 a = L.jet(u);
    const Jet2 b = T(u);
    Jet2 j;
    j.value = add(a.value, scaled(b.value, s));
    j.jacobian = a.jacobian + b.jacobian * s;
    j.hessians.resize(n);
    for (int c = 0; c < n; ++c) j.hessians[c] = a.hessians[c] + b.hessians[c] * s;
    return j;
  });
}

}  // namespace helixlab
