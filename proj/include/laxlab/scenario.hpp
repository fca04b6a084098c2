#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "laxlab/fields.hpp"

namespace laxlab {

/// Fully validated run description. Parsing rejects unknown keys and fills
/// in defaults; to_json echoes the resolved form for the run manifest.
struct Scenario {
    FamilySpec family;
    GridSpec grid;

    double residual_tolerance = 1e-2;
    double branch_threshold = 0.0;  // 0 = pick default by family (1e-10, csv 1e-6)
    double degeneracy_guard = 0.05;
    DerivStrategy derivatives = DerivStrategy::Auto;

    std::string output_dir = "out";
    double cfl_bound = 0.5;
    std::vector<int> report_resolutions;
    double u23_perturbation = 1.0;  // multiplies u23 before verification

    double effective_branch_threshold() const;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const Scenario& s);

}  // namespace laxlab
