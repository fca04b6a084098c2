#pragma once

#include <string>

#include "laxlab/scenario.hpp"

namespace laxlab {

/// Exit-code contract: 0 = pass, 1 = checked and failed, 2 = could not check.
int cmd_verify(const Scenario& s, const std::string& out_dir);
int cmd_solve(const Scenario& s, const std::string& out_dir);
int cmd_reconstruct(const Scenario& s, const std::string& out_dir);
int cmd_report(const Scenario& s, const std::string& out_dir);

/// Shared entry: loads the scenario, applies the --out override, dispatches.
int run_command(const std::string& command, const std::string& scenario_path,
                const std::string& out_override);

}  // namespace laxlab
