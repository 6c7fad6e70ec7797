#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "helixlab/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for constant-angle submanifolds, parallel "
               "offsets and derived metrics"};
  app.require_subcommand(1);

  helixlab::RunConfig config;
  std::string direction_text, t_grid_text;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--chart", config.chart,
                    "builtin chart, optionally name:key=v,key=v");
    cmd->add_option("--spec", config.spec_file, "polynomial chart JSON file");
    cmd->add_option("--direction", direction_text, "ambient direction x,y,...");
    cmd->add_option("--samples", config.samples, "sample count per check");
    cmd->add_option("--tol", config.tol, "check tolerance");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--t-grid", t_grid_text, "grid a:b:n of offset/trace values");
    cmd->add_option("--out", config.out_path, "write the JSON report here");
    cmd->add_option("--trials", config.trials, "random trials (lemma-la)");
    cmd->add_option("--dim", config.dim, "matrix size k (lemma-la)");
  };
  for (const char* name : {"analyze", "offsets", "lemma-la", "sol", "project",
                           "suite"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();

  try {
    if (!direction_text.empty())
      config.direction = helixlab::parse_direction(direction_text);
    if (!t_grid_text.empty()) config.t_grid = helixlab::parse_grid(t_grid_text);
    if (const char* env_seed = std::getenv("HELIXLAB_SEED"))
      config.seed = std::stoull(env_seed);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  return helixlab::run_command(config);
}
