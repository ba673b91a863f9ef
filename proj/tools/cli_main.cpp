// Command-line front end; talks to the library through the C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "w1plus/w1plus.h"

int main(int argc, char** argv) {
  CLI::App app{"w1plus: W1+ geodesics and entropy convexity reports on finite graphs"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  double tol = 0.0;
  int grid = 0;
  auto* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "JSON scenario document")->required();
  run->add_option("--out", out_path, "override the output artifact path");
  run->add_option("--tol", tol, "override the solver tolerance");
  run->add_option("--grid", grid, "override the t-grid point count");

  unsigned long long seed = 0;
  auto* selftest = app.add_subcommand("selftest", "run the bundled invariant suites");
  selftest->add_option("--seed", seed, "random seed (default 0)");

  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;
  if (run->parsed()) {
    w1p_status st = w1p_run_scenario(scenario_path.c_str(),
                                     out_path.empty() ? nullptr : out_path.c_str(), tol, grid,
                                     &exit_code);
    if (st != W1P_OK) {
      std::fprintf(stderr, "error: %s\n", w1p_last_error());
      return st == W1P_ERR_PARSE ? 2 : 1;
    }
    return exit_code;
  }
  if (selftest->parsed()) {
    w1p_status st = w1p_selftest(seed, &exit_code);
    if (st != W1P_OK) {
      std::fprintf(stderr, "error: %s\n", w1p_last_error());
      return 1;
    }
    return exit_code;
  }
  return 0;
}
