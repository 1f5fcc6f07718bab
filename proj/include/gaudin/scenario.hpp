#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaudin/model.hpp"

namespace gaudin {

struct Scenario {
    std::string name, description;
    ModelParams params;  // params.t4 holds the default t4
    std::vector<double> t4_sweep;
    std::optional<std::pair<double, double>> t4_range;
    std::optional<FixedPointTag> point;
    int resolution = 512;
    std::vector<std::string> commands;
    std::string output_dir = "out";
    // expected per-sweep counts, empty when the fixture states none
    std::vector<int> expect_hyperbolic, expect_cusps;
    std::string origin;
};

struct ScenarioError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ScenarioError(std::vector<std::string> v);
};

// directory for fixture names; GAUDIN_SCENARIO_DIR overrides the built-in one
std::string scenario_dir();
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");
// a path to an existing file, or a fixture name resolved in scenario_dir()
Scenario load_scenario(const std::string& name_or_path);
std::vector<std::string> fixture_names();

} // namespace gaudin
