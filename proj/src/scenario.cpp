#include "laxlab/scenario.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace laxlab {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.contains(it.key()))
            throw ScenarioError("unknown key '" + it.key() + "' in " + where);
}

double num(const json& obj, const std::string& key, std::optional<double> fallback = {}) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ScenarioError("missing key '" + key + "'");
    }
    if (!obj.at(key).is_number()) throw ScenarioError("key '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

int integer(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer())
        throw ScenarioError("key '" + key + "' must be an integer");
    return obj.at(key).get<int>();
}

FamilySpec parse_family(const json& j) {
    if (!j.is_object() || !j.contains("name"))
        throw ScenarioError("family must be an object with a 'name'");
    FamilySpec f;
    f.name = j.at("name").get<std::string>();
    if (f.name == "zero") {
        reject_unknown(j, {"name"}, "family");
    } else if (f.name == "constant") {
        reject_unknown(j, {"name", "u12", "u13", "u23", "v12", "v13", "v23", "h11", "h22", "h"},
                       "family");
        f.u12 = num(j, "u12", 0.0);
        f.u13 = num(j, "u13", 0.0);
        f.u23 = num(j, "u23", 0.0);
        f.v12 = num(j, "v12", 0.0);
        f.v13 = num(j, "v13", 0.0);
        f.v23 = num(j, "v23", 0.0);
        f.h11 = num(j, "h11", 0.0);
        f.h22 = num(j, "h22", 0.0);
        f.h = num(j, "h", 0.0);
    } else if (f.name == "sine_gordon_kink") {
        reject_unknown(j, {"name", "v", "x0"}, "family");
        f.velocity = num(j, "v", 0.0);
        f.x0 = num(j, "x0", 0.0);
        if (std::abs(f.velocity) >= 1.0) throw ScenarioError("family key 'v' must satisfy |v| < 1");
    } else if (f.name == "custom_csv") {
        reject_unknown(j, {"name", "path"}, "family");
        if (!j.contains("path")) throw ScenarioError("custom_csv family requires 'path'");
        f.csv_path = j.at("path").get<std::string>();
    } else {
        throw ScenarioError("unknown family name '" + f.name + "'");
    }
    return f;
}

GridSpec parse_grid(const json& j) {
    if (!j.is_object()) throw ScenarioError("grid must be an object");
    reject_unknown(j, {"x_min", "x_max", "t_min", "t_max", "nx", "nt"}, "grid");
    GridSpec g;
    g.x_min = num(j, "x_min");
    g.x_max = num(j, "x_max");
    g.t_min = num(j, "t_min");
    g.t_max = num(j, "t_max");
    g.nx = integer(j, "nx");
    g.nt = integer(j, "nt");
    try {
        g.validate();
    } catch (const FieldError& e) {
        throw ScenarioError(e.what());
    }
    return g;
}

}  // namespace

double Scenario::effective_branch_threshold() const {
    if (branch_threshold > 0.0) return branch_threshold;
    return family.name == "custom_csv" ? 1e-6 : 1e-10;
}

Scenario parse_scenario(const json& j) {
    if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
    reject_unknown(j,
                   {"family", "grid", "tolerances", "derivatives", "output_dir", "solver",
                    "report", "perturbation"},
                   "scenario");
    if (!j.contains("family")) throw ScenarioError("missing key 'family'");
    if (!j.contains("grid")) throw ScenarioError("missing key 'grid'");

    Scenario s;
    s.family = parse_family(j.at("family"));
    s.grid = parse_grid(j.at("grid"));

    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        reject_unknown(t, {"residual", "branch_threshold", "degeneracy_guard"}, "tolerances");
        s.residual_tolerance = num(t, "residual", s.residual_tolerance);
        s.branch_threshold = num(t, "branch_threshold", 0.0);
        s.degeneracy_guard = num(t, "degeneracy_guard", s.degeneracy_guard);
        if (s.residual_tolerance <= 0) throw ScenarioError("tolerances.residual must be > 0");
    }
    if (j.contains("derivatives")) {
        const std::string d = j.at("derivatives").get<std::string>();
        if (d == "auto")
            s.derivatives = DerivStrategy::Auto;
        else if (d == "finite_difference")
            s.derivatives = DerivStrategy::FiniteDifference;
        else
            throw ScenarioError("derivatives must be 'auto' or 'finite_difference'");
    }
    if (j.contains("output_dir")) s.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("solver")) {
        const json& so = j.at("solver");
        reject_unknown(so, {"cfl"}, "solver");
        s.cfl_bound = num(so, "cfl", s.cfl_bound);
        if (s.cfl_bound <= 0) throw ScenarioError("solver.cfl must be > 0");
    }
    if (j.contains("report")) {
        const json& r = j.at("report");
        reject_unknown(r, {"resolutions"}, "report");
        if (!r.contains("resolutions") || !r.at("resolutions").is_array())
            throw ScenarioError("report.resolutions must be an array of integers");
        for (const auto& v : r.at("resolutions")) {
            if (!v.is_number_integer()) throw ScenarioError("report.resolutions entries must be integers");
            const int res = v.get<int>();
            if (res < 3) throw ScenarioError("report resolution must be >= 3");
            s.report_resolutions.push_back(res);
        }
    }
    if (j.contains("perturbation")) {
        const json& p = j.at("perturbation");
        reject_unknown(p, {"u23_factor"}, "perturbation");
        s.u23_perturbation = num(p, "u23_factor", 1.0);
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
    }
    return parse_scenario(j);
}

json scenario_to_json(const Scenario& s) {
    json fam{{"name", s.family.name}};
    if (s.family.name == "constant") {
        fam["u12"] = s.family.u12;
        fam["u13"] = s.family.u13;
        fam["u23"] = s.family.u23;
        fam["v12"] = s.family.v12;
        fam["v13"] = s.family.v13;
        fam["v23"] = s.family.v23;
        fam["h11"] = s.family.h11;
        fam["h22"] = s.family.h22;
        fam["h"] = s.family.h;
    } else if (s.family.name == "sine_gordon_kink") {
        fam["v"] = s.family.velocity;
        fam["x0"] = s.family.x0;
    } else if (s.family.name == "custom_csv") {
        fam["path"] = s.family.csv_path;
    }

    json j{{"family", fam},
           {"grid",
            {{"x_min", s.grid.x_min},
             {"x_max", s.grid.x_max},
             {"t_min", s.grid.t_min},
             {"t_max", s.grid.t_max},
             {"nx", s.grid.nx},
             {"nt", s.grid.nt}}},
           {"tolerances",
            {{"residual", s.residual_tolerance},
             {"branch_threshold", s.effective_branch_threshold()},
             {"degeneracy_guard", s.degeneracy_guard}}},
           {"derivatives",
            s.derivatives == DerivStrategy::Auto ? "auto" : "finite_difference"},
           {"output_dir", s.output_dir},
           {"solver", {{"cfl", s.cfl_bound}}},
           {"perturbation", {{"u23_factor", s.u23_perturbation}}}};
    if (!s.report_resolutions.empty()) j["report"] = {{"resolutions", s.report_resolutions}};
    return j;
}

}  // namespace laxlab
