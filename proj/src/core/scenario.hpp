#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace w1plus {

struct ScenarioOverrides {
  std::optional<double> tol;
  std::optional<int> grid_count;
  std::optional<std::string> out;
  std::optional<unsigned long long> seed;
};

// Executes a JSON scenario document and writes its artifacts.
// Exit codes: 0 all requested checks pass, 1 check failure, 2 parse/input
// error, 3 solver non-convergence.
int run_scenario_file(const std::string& path, const ScenarioOverrides& ov, std::ostream& log);
int run_scenario_text(const std::string& text, const ScenarioOverrides& ov, std::ostream& log);

} // namespace w1plus
