#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gaudin/cli.hpp"
#include "gaudin/scenario.hpp"

using namespace gaudin;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("gaudin_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("fixtures load with the caption parameters")
{
    Scenario s5 = load_scenario("fig5");
    CHECK(s5.params.R1 == 1);
    CHECK(s5.params.R2 == 1);
    CHECK(s5.params.w == 1);
    CHECK(s5.params.t0 == 0);
    CHECK(s5.params.t1 == -0.5);
    CHECK(s5.params.t2 == 0);
    CHECK(s5.params.t3 == -0.5);

    Scenario s7 = load_scenario("fig7");
    CHECK(s7.params.R1 == 1);
    CHECK(s7.params.R2 == 2);
    CHECK(s7.params.t0 == 0.5);
    CHECK(s7.params.w == 0);
    CHECK(s7.params.t3 == doctest::Approx(-3 / std::sqrt(2.0)).epsilon(1e-15));

    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Scenario s = load_scenario(name);
        CHECK(s.name == name);
        if (s.t4_range) CHECK(s.t4_range->first < s.t4_range->second);
        if (!s.expect_hyperbolic.empty()) CHECK(s.expect_hyperbolic.size() == s.t4_sweep.size());
    }
    CHECK(fixture_names().size() >= 11u);
}

TEST_CASE("scenario defaults and schema errors")
{
    Scenario s = parse_scenario(R"({"name": "bare"})");
    CHECK(s.params.R1 == 1);
    CHECK(s.params.R2 == 1);
    CHECK(s.params.w == 1);
    CHECK(s.params.t0 == 0);
    CHECK(s.params.t3 == 0);
    CHECK(s.params.t4 == 0);

    CHECK_THROWS_AS(parse_scenario(""), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("{}"), ScenarioError);
    try {
        parse_scenario(R"({"name": "x", "R1": -1, "bogus": 2, "t4_range": [1, 0]})");
        FAIL("expected a schema error");
    } catch (const ScenarioError& e) {
        CHECK(e.violations.size() == 3u);
        std::string all;
        for (auto& v : e.violations) all += v + "\n";
        CHECK(all.find("$.R1") != std::string::npos);
        CHECK(all.find("$.bogus") != std::string::npos);
        CHECK(all.find("$.t4_range") != std::string::npos);
    }
}

TEST_CASE("empty scenario file exits with the schema code")
{
    fs::path dir = scratch("empty");
    std::ofstream(dir / "empty.json").close();
    auto r = run({"classify", "--scenario", (dir / "empty.json").string()});
    CHECK(r.code == 65);
    CHECK(r.err.find("schema") != std::string::npos);
}

TEST_CASE("scenario directory override")
{
    fs::path dir = scratch("override");
    std::ofstream(dir / "mine.json") << R"({"name": "mine", "t1": 0.5, "t3": 0.5, "t4": 0.5})";
    setenv("GAUDIN_SCENARIO_DIR", dir.string().c_str(), 1);
    auto r = run({"classify", "--scenario", "mine", "--point", "m0"});
    unsetenv("GAUDIN_SCENARIO_DIR");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["class"] == "focus-focus");
    CHECK(run({"classify", "--scenario", "mine"}).code == 65);
}

TEST_CASE("classify example")
{
    auto r = run({"classify", "--scenario", "fig1b", "--point", "m0"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["class"] == "focus-focus");
    CHECK(j["point"] == "m0");
    CHECK(j["eigenvalues"].size() == 4u);

    auto all = run({"classify", "--scenario", "fig1b", "--t4-range", "-1:1:5"});
    REQUIRE(all.code == 0);
    int lines = 0;
    std::istringstream in(all.out);
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 20);
}

TEST_CASE("thresholds example")
{
    auto r = run({"thresholds", "--scenario", "fig6", "--point", "m0"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["t4_minus"].get<double>() == doctest::Approx(-0.4714045207910317).epsilon(1e-15));
    CHECK(j["t4_plus"].get<double>() == doctest::Approx(0.4714045207910317).epsilon(1e-15));

    auto e = run({"thresholds", "--scenario", "fig5", "--point", "m0", "--rational"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["exact"]["t4_plus"] == "-3/4");
}

TEST_CASE("normal form record")
{
    auto r = run({"normal-form", "--scenario", "fig5", "--point", "m2"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    for (auto key : {"raw", "scaled", "generating", "criticality", "source", "residuals"}) CHECK(j.contains(key));
    CHECK(j["criticality"]["verdict"] == "Supercritical");
    CHECK(j["source"] == "lie-series");

    auto a = run({"normal-form", "--scenario", "fig5", "--source", "appendix"});
    REQUIRE(a.code == 0);
    CHECK(json::parse(a.out)["source"] == "appendix");
}

TEST_CASE("unfold record")
{
    auto r = run({"unfold", "--scenario", "fig5"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["dnu2_dt4"].get<double>() == doctest::Approx(1).epsilon(1e-8));
}

TEST_CASE("exit codes")
{
    CHECK(run({"events", "--scenario", "fig1a"}).code == 2);
    CHECK(run({"normal-form", "--scenario", "fig4a"}).code == 2);
    CHECK(run({"classify", "--bogus"}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"classify", "--point", "m7"}).code == 64);
    CHECK(run({"classify", "--set", "R9=1"}).code == 64);
    CHECK(run({"classify", "--scenario", "no-such-fixture"}).code == 65);
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("sweep") != std::string::npos);
}

TEST_CASE("parameter overrides")
{
    auto r = run({"thresholds", "--set", "t1=-0.5", "--set", "t3=-0.5", "--point", "m0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["t4_plus"].get<double>() == doctest::Approx(-0.75));
}

TEST_CASE("appendix verification reports the sixth-order mismatch")
{
    auto r = run({"verify", "--suite", "appendix", "--draws", "3"});
    CHECK(r.code == 3);
    auto j = json::parse(r.out);
    CHECK(j["failed"] == 3);
    for (auto& d : j["draws"]) {
        CHECK(d["a2_zero"] == true);
        CHECK(d["a9_zero"] == true);
        for (auto& m : d["mismatches"]) {
            std::string n = m["name"];
            CHECK((n == "a6" || n == "a7" || n == "a8" || n[0] == 'e' || n[0] == 'f'));
        }
    }
}

TEST_CASE("image writes the requested formats")
{
    fs::path dir = scratch("image");
    auto r = run({"image", "--scenario", "fig1d", "--format", "all", "--out", dir.string(), "--resolution", "128"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["hyperbolic_segments"] == 1);
    CHECK(j["outside_occupancy"] == 0);
    for (auto ext : {"svg", "csv", "json"}) CHECK(fs::exists(dir / (std::string("fig1d_t4_m1p5.") + ext)));

    auto t = run({"image", "--scenario", "fig4a", "--out", dir.string(), "--resolution", "64", "--format", "json"});
    CHECK(t.code == 0);
    CHECK(json::parse(t.out)["curves"] == 0);
}

TEST_CASE("sweep checks the fixture expectations")
{
    fs::path dir = scratch("sweep");
    auto r = run({"sweep", "--scenario", "fig5", "--out", dir.string(), "--format", "csv", "--resolution", "256"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["ok"] == true);

    fs::path bad = scratch("sweep_bad");
    std::ofstream(bad / "bad.json") << R"({"name": "bad", "t1": 0.5, "t3": 0.5, "t4_sweep": [-1.5],
        "expect": {"hyperbolic_segments": [0], "cusps": [0]}})";
    auto b = run({"sweep", "--scenario", (bad / "bad.json").string(), "--out", bad.string(), "--resolution", "64"});
    CHECK(b.code == 3);
}

TEST_CASE("events over a range")
{
    auto r = run({"events", "--scenario", "fig6", "--t4-range", "-1:0"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    int birth = 0, hopf = 0;
    for (auto& e : j["events"]) {
        if (e["kind"] == "CuspBirthDeath") ++birth;
        if (e["kind"] == "HopfSuper") ++hopf;
    }
    CHECK(birth == 1);
    CHECK(hopf == 2);
}

TEST_CASE("outputs are byte-identical across runs")
{
    fs::path a = scratch("det_a"), b = scratch("det_b");
    for (auto& dir : {a, b})
        REQUIRE(run({"sweep", "--scenario", "fig6", "--format", "all", "--out", dir.string(), "--resolution", "256"}).code == 0);
    int compared = 0;
    for (auto& e : fs::directory_iterator(a)) {
        std::string ext = e.path().extension().string();
        if (ext != ".json" && ext != ".csv" && ext != ".svg") continue;
        CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
        ++compared;
    }
    CHECK(compared == 30);
    CHECK(run({"classify", "--scenario", "fig6"}).out == run({"classify", "--scenario", "fig6"}).out);
}
