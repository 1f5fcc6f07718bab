#include "gaudin/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#ifndef GAUDIN_DEFAULT_SCENARIO_DIR
#define GAUDIN_DEFAULT_SCENARIO_DIR "scenarios"
#endif

namespace gaudin {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

} // namespace

ScenarioError::ScenarioError(std::vector<std::string> v)
    : std::runtime_error("scenario schema violations: " + join(v)), violations(std::move(v)) {}

std::string scenario_dir() {
    if (const char* env = std::getenv("GAUDIN_SCENARIO_DIR"); env && *env) return env;
    return GAUDIN_DEFAULT_SCENARIO_DIR;
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    using nlohmann::json;
    std::vector<std::string> bad;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError({"$: not valid JSON (" + std::string(e.what()) + ")"});
    }
    if (!doc.is_object()) throw ScenarioError({"$: expected an object"});

    Scenario s;
    s.origin = origin;
    static const std::set<std::string> known{"name", "description", "R1", "R2", "w", "t0", "t1", "t2", "t3", "t4",
                                             "t4_sweep", "t4_values", "t4_range", "point", "resolution",
                                             "commands", "output_dir", "expect"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key())) bad.push_back("$." + it.key() + ": unknown field");

    auto number = [&](const json& v, const std::string& path, double& out) {
        if (!v.is_number()) {
            bad.push_back(path + ": expected a number");
            return false;
        }
        out = v.get<double>();
        if (!std::isfinite(out)) {
            bad.push_back(path + ": must be finite");
            return false;
        }
        return true;
    };

    if (doc.contains("name")) {
        if (doc["name"].is_string())
            s.name = doc["name"].get<std::string>();
        else
            bad.push_back("$.name: expected a string");
    } else {
        bad.push_back("$.name: required");
    }
    if (doc.contains("description")) {
        if (doc["description"].is_string())
            s.description = doc["description"].get<std::string>();
        else
            bad.push_back("$.description: expected a string");
    }
    std::pair<const char*, double*> fields[] = {{"R1", &s.params.R1}, {"R2", &s.params.R2}, {"w", &s.params.w},
                                                {"t0", &s.params.t0}, {"t1", &s.params.t1}, {"t2", &s.params.t2},
                                                {"t3", &s.params.t3}, {"t4", &s.params.t4}};
    for (auto& [key, dst] : fields)
        if (doc.contains(key)) number(doc[key], std::string("$.") + key, *dst);
    if (s.params.R1 <= 0) bad.push_back("$.R1: must be positive");
    if (s.params.R2 <= 0) bad.push_back("$.R2: must be positive");

    const char* sweep_key = doc.contains("t4_sweep") ? "t4_sweep" : (doc.contains("t4_values") ? "t4_values" : nullptr);
    if (doc.contains("t4_sweep") && doc.contains("t4_values")) bad.push_back("$: give t4_sweep or t4_values, not both");
    if (sweep_key) {
        const json& a = doc[sweep_key];
        if (!a.is_array()) {
            bad.push_back(std::string("$.") + sweep_key + ": expected an array");
        } else {
            for (size_t i = 0; i < a.size(); ++i) {
                double v;
                if (number(a[i], std::string("$.") + sweep_key + "[" + std::to_string(i) + "]", v))
                    s.t4_sweep.push_back(v);
            }
        }
    }
    if (doc.contains("t4_range")) {
        const json& r = doc["t4_range"];
        double a = 0, b = 0;
        if (!r.is_array() || r.size() != 2) {
            bad.push_back("$.t4_range: expected [lo, hi]");
        } else if (number(r[0], "$.t4_range[0]", a) && number(r[1], "$.t4_range[1]", b)) {
            if (!(a < b))
                bad.push_back("$.t4_range: must be ordered lo < hi");
            else
                s.t4_range = std::make_pair(a, b);
        }
    }
    if (doc.contains("point")) {
        try {
            s.point = parse_fixed_point(doc["point"].get<std::string>());
        } catch (const std::exception&) {
            bad.push_back("$.point: expected one of m0, m1, m2, m3");
        }
    }
    if (doc.contains("resolution")) {
        const json& r = doc["resolution"];
        if (!r.is_number_integer() || r.get<long long>() < 2 || r.get<long long>() > 4096)
            bad.push_back("$.resolution: expected an integer in [2, 4096]");
        else
            s.resolution = r.get<int>();
    }
    if (doc.contains("commands")) {
        static const std::set<std::string> cmds{"classify", "thresholds", "normal-form", "unfold",
                                                "image",    "events",     "sweep",       "verify"};
        const json& c = doc["commands"];
        if (!c.is_array()) {
            bad.push_back("$.commands: expected an array");
        } else {
            for (size_t i = 0; i < c.size(); ++i) {
                if (!c[i].is_string() || !cmds.count(c[i].get<std::string>()))
                    bad.push_back("$.commands[" + std::to_string(i) + "]: unknown command");
                else
                    s.commands.push_back(c[i].get<std::string>());
            }
        }
    }
    if (doc.contains("output_dir")) {
        if (doc["output_dir"].is_string())
            s.output_dir = doc["output_dir"].get<std::string>();
        else
            bad.push_back("$.output_dir: expected a string");
    }
    if (doc.contains("expect")) {
        const json& e = doc["expect"];
        if (!e.is_object()) {
            bad.push_back("$.expect: expected an object");
        } else {
            for (auto it = e.begin(); it != e.end(); ++it) {
                std::vector<int>* dst = it.key() == "hyperbolic_segments" ? &s.expect_hyperbolic
                                        : it.key() == "cusps"             ? &s.expect_cusps
                                                                          : nullptr;
                std::string path = "$.expect." + it.key();
                if (!dst) {
                    bad.push_back(path + ": unknown field");
                    continue;
                }
                if (!it->is_array() || it->size() != s.t4_sweep.size()) {
                    bad.push_back(path + ": expected one integer per t4_sweep entry");
                    continue;
                }
                for (size_t i = 0; i < it->size(); ++i) {
                    if (!(*it)[i].is_number_integer())
                        bad.push_back(path + "[" + std::to_string(i) + "]: expected an integer");
                    else
                        dst->push_back((*it)[i].get<int>());
                }
            }
        }
    }
    if (!bad.empty()) throw ScenarioError(bad);
    if (!doc.contains("t4") && !s.t4_sweep.empty()) s.params.t4 = s.t4_sweep.front();
    return s;
}

Scenario load_scenario(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    fs::path path(name_or_path);
    if (!fs::is_regular_file(path)) {
        fs::path cand = fs::path(scenario_dir()) / (name_or_path + ".json");
        if (!fs::is_regular_file(cand)) throw ScenarioError({"$: no scenario file or fixture named '" + name_or_path + "'"});
        path = cand;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ScenarioError({"$: cannot read " + path.string()});
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str(), path.string());
}

std::vector<std::string> fixture_names() {
    namespace fs = std::filesystem;
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(scenario_dir(), ec))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gaudin
