#pragma once

#include <string>
#include <vector>

#include "helixlab/immersion.hpp"
#include "helixlab/intrinsic.hpp"
#include "helixlab/numerics.hpp"

namespace helixlab {

struct RunConfig {
  std::string command;
  std::string chart = "catenoid";  // "name" or "name:key=v,key=v"
  std::string spec_file;           // polynomial chart JSON; overrides chart
  Vec direction;                   // empty -> last ambient axis
  int samples = 40;
  double tol = 1e-6;
  std::uint64_t seed = 20240817;
  Vec t_grid;  // empty -> command default
  std::string out_path;
  int trials = 200;  // lemma-la: number of random triples
  int dim = 4;       // lemma-la: matrix size k
};

struct ReportRecord {
  std::string name;
  std::string anchor;  // the identity being checked, as text
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  bool pass = false;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ReportRecord> records;
  bool all_pass = false;
  double wall_seconds = 0.0;

  // Stable-schema JSON {version, command, config, records, summary}; the wall
  // time can be omitted for byte-level comparisons.
  std::string to_json(bool include_wall = true) const;
  std::string to_table() const;
};

// "a:b:n" -> n evenly spaced values from a to b inclusive.
Vec parse_grid(const std::string& text);
// "x,y,z" -> vector.
Vec parse_direction(const std::string& text);

// Chart selector resolution (builtin name with optional params, or spec file).
ImmersionChart chart_from_config(const RunConfig& config);

Report cmd_analyze(const RunConfig& config);
Report cmd_offsets(const RunConfig& config);
Report cmd_lemma_la(const RunConfig& config);
Report cmd_sol(const RunConfig& config);
Report cmd_project(const RunConfig& config);
Report cmd_suite(const RunConfig& config);

// Dispatches on config.command, prints the table, writes JSON to out_path if
// set. Returns 0 when all checks pass, 1 on check failures (report still
// written), 2 on configuration errors.
int run_command(const RunConfig& config);

// Minimality of a graph chart vs the equivalent conditions on its base:
// mean curvature of the base equals alpha_B(grad f, grad f)/(1 + |grad f|^2)
// and f is harmonic on the base.
struct GraphMinimalityCheck {
  double graph_mean_curvature = 0.0;
  double base_residual = 0.0;
  double laplacian_residual = 0.0;
  bool graph_minimal = false;
  bool base_conditions = false;
};

GraphMinimalityCheck graph_minimality_check(const ImmersionChart& base,
                                            const ScalarJetField& f, int samples,
                                            double tol,
                                            std::uint64_t seed = Tolerances{}.seed);

}  // namespace helixlab
