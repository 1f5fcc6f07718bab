#include "gaudin/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaudin/linear.hpp"
#include "gaudin/momentum.hpp"
#include "gaudin/normal_form.hpp"
#include "gaudin/scenario.hpp"
#include "gaudin/verify.hpp"

namespace gaudin::cli {

namespace {

using json = nlohmann::ordered_json;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string scenario;
    std::string point;
    std::optional<double> t4;
    std::string t4_range;
    std::optional<int> resolution;
    std::string format = "json";
    std::string out_dir;
    double tolerance = 1e-8;
    bool rational = false;
    std::string side = "plus";
    std::string source = "lie-series";
    std::string suite = "appendix";
    int draws = 20;
    unsigned long long seed = 20240601;
    std::vector<std::string> sets;
};

struct Range {
    double a, b;
    int n;
};

Range parse_range(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3) throw CLI::ValidationError("--t4-range", "expected a:b or a:b:n");
    try {
        Range r{std::stod(parts[0]), std::stod(parts[1]), parts.size() == 3 ? std::stoi(parts[2]) : 0};
        if (!(r.a <= r.b) || !std::isfinite(r.a) || !std::isfinite(r.b) || r.n < 0)
            throw CLI::ValidationError("--t4-range", "bounds must be finite and ordered");
        return r;
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--t4-range", "not a number in '" + s + "'");
    }
}

std::vector<double> range_values(const Range& r, int default_n)
{
    int n = r.n > 0 ? r.n : default_n;
    std::vector<double> v;
    if (n == 1) return {r.a};
    for (int i = 0; i < n; ++i) v.push_back(r.a + (r.b - r.a) * i / (n - 1));
    return v;
}

Scenario resolve(const Options& o)
{
    Scenario s;
    if (!o.scenario.empty()) {
        s = load_scenario(o.scenario);
    } else {
        s.name = "custom";
    }
    for (const std::string& kv : o.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--set", "expected key=value, got '" + kv + "'");
        std::string k = kv.substr(0, eq);
        double v;
        try {
            v = std::stod(kv.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--set", "not a number in '" + kv + "'");
        }
        double* dst = k == "R1" ? &s.params.R1 : k == "R2" ? &s.params.R2 : k == "w" ? &s.params.w
                    : k == "t0" ? &s.params.t0 : k == "t1" ? &s.params.t1 : k == "t2" ? &s.params.t2
                    : k == "t3" ? &s.params.t3 : k == "t4" ? &s.params.t4 : nullptr;
        if (!dst) throw CLI::ValidationError("--set", "unknown parameter '" + k + "'");
        *dst = v;
    }
    if (o.t4) s.params.t4 = *o.t4;
    if (o.resolution) s.resolution = *o.resolution;
    return s;
}

json params_json(const ModelParams& p)
{
    return json{{"R1", p.R1}, {"R2", p.R2}, {"w", p.w}, {"t0", p.t0}, {"t1", p.t1}, {"t2", p.t2}, {"t3", p.t3}, {"t4", p.t4}};
}

std::vector<FixedPointTag> points(const Options& o, const Scenario& s, std::vector<FixedPointTag> fallback)
{
    if (!o.point.empty()) return {parse_fixed_point(o.point)};
    (void)s;
    return fallback;
}

std::vector<double> t4_values(const Options& o, const Scenario& s)
{
    if (!o.t4_range.empty()) return range_values(parse_range(o.t4_range), 11);
    if (o.t4 || s.t4_sweep.empty()) return {s.params.t4};
    return s.t4_sweep;
}

json matrix_json(const Mat4& m)
{
    json a = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k) row.push_back(m(i, k));
        a.push_back(row);
    }
    return a;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    auto pts = points(o, s, {FixedPointTag::m0, FixedPointTag::m1, FixedPointTag::m2, FixedPointTag::m3});
    for (double t4 : t4_values(o, s)) {
        ModelParams p = s.params;
        p.t4 = t4;
        for (FixedPointTag fp : pts) {
            EigenClassification c = classify(p, fp);
            json ev = json::array();
            for (auto& z : c.eigenvalues) ev.push_back({z.real(), z.imag()});
            out << json{{"point", to_string(fp)}, {"t4", t4}, {"class", to_string(c.cls)}, {"eigenvalues", ev},
                        {"discriminant", c.discriminant}}
                       .dump()
                << "\n";
        }
    }
    return ok;
}

int cmd_thresholds(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    for (FixedPointTag fp : points(o, s, {FixedPointTag::m0, FixedPointTag::m2})) {
        Thresholds t = thresholds(s.params, fp);
        json j{{"point", to_string(fp)}, {"t4_minus", t.t4_minus}, {"t4_plus", t.t4_plus}, {"lower", t.lower()},
               {"upper", t.upper()}, {"ff_window_realized", t.ff_window_realized}};
        if (o.rational) {
            auto ex = as_exact(s.params);
            if (ex) {
                j["exact"] = {{"t4_minus", threshold_value(*ex, fp, Side::minus).str()},
                              {"t4_plus", threshold_value(*ex, fp, Side::plus).str()}};
            } else {
                j["exact"] = nullptr;
            }
        }
        out << j.dump() << "\n";
    }
    return ok;
}

json criticality_json(const Criticality& c)
{
    return json{{"verdict", to_string(c.verdict)}, {"a3", c.a3}, {"a6", c.a6}, {"t4", c.t4},
                {"source", to_string(c.source)}, {"exact", c.exact}, {"note", c.note}};
}

int cmd_normal_form(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    FixedPointTag fp = o.point.empty() ? (s.point ? *s.point : FixedPointTag::m0) : parse_fixed_point(o.point);
    Side side = parse_side(o.side);
    CriticalitySource src = parse_source(o.source);
    require_t3_nonzero(s.params);

    json j;
    j["point"] = to_string(fp);
    j["side"] = to_string(side);
    ModelParams at = s.params;
    at.t4 = threshold_value(as_double(s.params), fp, side);
    j["t4"] = at.t4;

    RawCoefficients raw;
    GeneratingCoefficients gen;
    json residuals;
    std::string used = "lie-series";
    if (src == CriticalitySource::Appendix && side == Side::plus) {
        ModelParams frame = to_model(to_m0_frame(at, fp));
        raw = eval_raw_coefficients(frame);
        gen = eval_generating_coefficients(frame);
        used = "appendix";
        residuals = nullptr;
    } else {
        LieSeriesResultT<double> d;
        lie_series_normal_form(at, fp, side, 6, &d);
        raw = d.raw;
        gen = d.gen;
        residuals = {{"normalization", d.residual}, {"odd", d.odd_residual}, {"t", d.t_residual}};
    }
    json rj{{"b", raw.b}};
    for (int i = 1; i <= 9; ++i) rj["a" + std::to_string(i)] = raw.a[i];
    j["raw"] = rj;
    ScaledCoefficients sc = scale(raw, side, fp);
    json sj;
    for (int i = 1; i <= 9; ++i) sj["a" + std::to_string(i)] = sc.a[i];
    j["scaled"] = sj;
    json gj;
    for (int i = 0; i < 3; ++i) gj["e" + std::to_string(i + 1)] = gen.e[i];
    for (int i = 0; i < 6; ++i) gj["f" + std::to_string(i + 1)] = gen.f[i];
    j["generating"] = gj;
    j["criticality"] = criticality_json(classify_criticality(s.params, fp, side, src, o.rational));
    j["source"] = used;
    j["residuals"] = residuals;
    if (o.rational) {
        auto ex = as_exact(s.params);
        if (ex && fp == FixedPointTag::m0) {
            ex->t4 = threshold_value(*ex, fp, side);
            auto r = lie_series_raw(*ex, side);
            json e{{"b", r.raw.b.str()}};
            for (int i = 1; i <= 9; ++i) e["a" + std::to_string(i)] = r.raw.a[i].str();
            j["exact"] = e;
        } else {
            j["exact"] = nullptr;
        }
    }
    out << j.dump(2) << "\n";
    return ok;
}

int cmd_unfold(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    FixedPointTag fp = o.point.empty() ? (s.point ? *s.point : FixedPointTag::m0) : parse_fixed_point(o.point);
    Side side = parse_side(o.side);
    Unfolding u = unfolding(s.params, fp, side);
    BCDecomposition bc = burgoyne_cushman(s.params, fp, side);
    json j{{"point", to_string(fp)},
           {"side", to_string(side)},
           {"t4_star", u.t4_star},
           {"alpha", bc.alpha},
           {"beta", bc.beta},
           {"sigma_sign", u.sigma_sign},
           {"rho", u.rho},
           {"dnu2_dt4", u.dnu2_dt4_at_threshold},
           {"dnu2_closed_form", u.dnu2_closed_form},
           {"normal", matrix_json(bc.normal)}};
    json nu = json::array();
    std::vector<double> ts = o.t4_range.empty() ? std::vector<double>{s.params.t4} : range_values(parse_range(o.t4_range), 11);
    for (double t : ts) nu.push_back({{"t4", t}, {"nu1", u.nu1(t)}, {"nu2", u.nu2(t)}});
    j["nu"] = nu;
    out << j.dump(2) << "\n";
    return ok;
}

std::string slug(double t4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", t4);
    std::string s = buf;
    for (char& c : s)
        if (c == '-') c = 'm';
        else if (c == '.') c = 'p';
    return s;
}

struct Panel {
    FigureData fd;
    bool contained = true;
    int outside = 0;
};

Panel build_panel(const ModelParams& p, double t4, int resolution)
{
    Panel pan;
    if (p.t3 != 0) {
        pan.fd = trace_curves(p, t4, default_j_grid(p));
    } else {
        pan.fd = trace_curves(p, t4, {});
    }
    pan.fd.occupancy = sample_image(p, t4, resolution);
    for (const Curve& c : pan.fd.curves)
        for (const CurvePoint& q : c.pts)
            if (!pan.fd.occupancy->contains(q.j, q.H)) ++pan.outside;
    for (const CuspMarker& c : pan.fd.cusps)
        if (!pan.fd.occupancy->contains(c.j, c.H)) ++pan.outside;
    pan.contained = pan.outside == 0;
    return pan;
}

std::vector<FigureFormat> formats(const std::string& f)
{
    if (f == "all") return {FigureFormat::svg, FigureFormat::csv, FigureFormat::json};
    try {
        return {parse_format(f)};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--format", "expected svg, csv, json or all");
    }
}

std::string extension(FigureFormat f)
{
    return f == FigureFormat::svg ? "svg" : f == FigureFormat::csv ? "csv" : "json";
}

json panel_summary(const Panel& pan, double t4)
{
    int hyp = pan.fd.hyperbolic_segments();
    return json{{"t4", t4},
                {"curves", pan.fd.curves.size()},
                {"hyperbolic_segments", hyp},
                {"cusps", pan.fd.cusps.size()},
                {"cells", pan.fd.occupancy ? pan.fd.occupancy->count() : 0},
                {"multi_cells", pan.fd.occupancy ? pan.fd.occupancy->count_multi() : 0},
                {"outside_occupancy", pan.outside}};
}

std::vector<std::string> write_panel(const Panel& pan, const Scenario& s, double t4, const Options& o)
{
    namespace fs = std::filesystem;
    fs::path dir = o.out_dir.empty() ? fs::path(s.output_dir) : fs::path(o.out_dir);
    fs::create_directories(dir);
    std::vector<std::string> files;
    for (FigureFormat f : formats(o.format)) {
        fs::path file = dir / (s.name + "_t4_" + slug(t4) + "." + extension(f));
        emit_figure(pan.fd, f, file.string());
        files.push_back(file.string());
    }
    return files;
}

int cmd_image(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    double t4 = s.params.t4;
    Panel pan = build_panel(s.params, t4, s.resolution);
    json j = panel_summary(pan, t4);
    j["scenario"] = s.name;
    j["files"] = write_panel(pan, s, t4, o);
    out << j.dump(2) << "\n";
    return ok;
}

json event_json(const BifurcationEvent& e)
{
    json j{{"kind", to_string(e.kind)}, {"t4", e.t4}, {"j", e.j}, {"K", e.K}, {"H", e.H}, {"branch", e.branch},
           {"confirmed", e.confirmed}, {"residual", e.residual}};
    j["point"] = e.fp ? json(to_string(*e.fp)) : json(nullptr);
    j["note"] = e.note;
    return j;
}

int cmd_events(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    require_t3_nonzero(s.params);
    double a, b;
    EventScan scan;
    if (!o.t4_range.empty()) {
        Range r = parse_range(o.t4_range);
        a = r.a;
        b = r.b;
        if (r.n > 1) scan.n_t4 = r.n;
    } else if (s.t4_range) {
        a = s.t4_range->first;
        b = s.t4_range->second;
    } else {
        throw CLI::ValidationError("--t4-range", "required when the scenario has no t4_range");
    }
    auto ev = detect_events(s.params, a, b, all_event_kinds(), scan);
    json arr = json::array();
    for (const auto& e : ev) arr.push_back(event_json(e));
    json j{{"scenario", s.name}, {"params", params_json(s.params)}, {"t4_range", {a, b}}, {"events", arr}};
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        std::ofstream f(std::filesystem::path(o.out_dir) / (s.name + "_events.json"), std::ios::binary);
        f << j.dump(2) << "\n";
    }
    out << j.dump(2) << "\n";
    return ok;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    Scenario s = resolve(o);
    std::vector<double> ts = o.t4_range.empty() ? s.t4_sweep : range_values(parse_range(o.t4_range), 11);
    if (ts.empty()) ts = {s.params.t4};
    bool check = o.t4_range.empty();
    json panels = json::array();
    bool good = true;
    for (size_t i = 0; i < ts.size(); ++i) {
        Panel pan = build_panel(s.params, ts[i], s.resolution);
        json j = panel_summary(pan, ts[i]);
        j["files"] = write_panel(pan, s, ts[i], o);
        if (check && i < s.expect_hyperbolic.size() && s.expect_hyperbolic[i] != pan.fd.hyperbolic_segments()) {
            j["mismatch"] = "hyperbolic_segments expected " + std::to_string(s.expect_hyperbolic[i]);
            good = false;
        }
        if (check && i < s.expect_cusps.size() && s.expect_cusps[i] != static_cast<int>(pan.fd.cusps.size())) {
            j["mismatch"] = "cusps expected " + std::to_string(s.expect_cusps[i]);
            good = false;
        }
        if (!pan.contained) good = false;
        panels.push_back(j);
    }
    out << json{{"scenario", s.name}, {"params", params_json(s.params)}, {"panels", panels}, {"ok", good}}.dump(2)
        << "\n";
    if (!good) throw VerificationFailure("sweep expectations not met for " + s.name);
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (o.suite == "appendix") {
        std::mt19937_64 rng(o.seed);
        json draws = json::array();
        int failed = 0;
        for (int k = 0; k < o.draws; ++k) {
            ModelParams p = random_admissible(rng);
            AppendixReport r = compare_appendix(p, o.tolerance, true);
            json bad = json::array();
            for (const auto& c : r.checks)
                if (!c.ok) bad.push_back({{"name", c.name}, {"oracle", c.oracle}, {"printed", c.printed}, {"rel_err", c.rel_err}});
            if (!r.ok()) ++failed;
            draws.push_back({{"params", params_json(r.params)}, {"exact", r.exact}, {"a2_zero", r.a2_zero},
                             {"a9_zero", r.a9_zero}, {"ok", r.ok()}, {"mismatches", bad}});
        }
        out << json{{"suite", "appendix"}, {"draws", draws}, {"failed", failed}, {"tolerance", o.tolerance}}.dump(2)
            << "\n";
        if (failed) throw VerificationFailure(std::to_string(failed) + " of " + std::to_string(o.draws) +
                                              " draws disagree with the appendix tables");
        return ok;
    }
    if (o.suite == "figures") {
        json res = json::array();
        int failed = 0;
        for (const std::string& name : fixture_names()) {
            Options sub = o;
            sub.scenario = name;
            sub.t4_range.clear();
            Scenario s = resolve(sub);
            if (s.expect_hyperbolic.empty()) continue;
            std::ostringstream sink;
            sub.out_dir = o.out_dir.empty() ? (std::filesystem::temp_directory_path() / "gaudin_verify").string() : o.out_dir;
            bool good = true;
            try {
                cmd_sweep(sub, sink);
            } catch (const VerificationFailure&) {
                good = false;
                ++failed;
            }
            res.push_back({{"scenario", name}, {"ok", good}});
        }
        out << json{{"suite", "figures"}, {"results", res}, {"failed", failed}}.dump(2) << "\n";
        if (failed) throw VerificationFailure("figure expectations failed");
        return ok;
    }
    throw CLI::ValidationError("--suite", "expected appendix or figures");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized su(2) Gaudin system on S2 x S2: rank-0 analysis, Hopf normal forms, momentum-map images",
                 "gaudin"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--scenario", o.scenario, "fixture name or scenario file");
        c->add_option("--point", o.point, "fixed point")->check(CLI::IsMember({"m0", "m1", "m2", "m3"}));
        c->add_option("--t4", o.t4, "t4 value");
        c->add_option("--t4-range", o.t4_range, "a:b[:n]");
        c->add_option("--resolution", o.resolution, "occupancy grid size")->check(CLI::Range(2, 4096));
        c->add_option("--format", o.format, "svg, csv, json or all");
        c->add_option("--out", o.out_dir, "output directory");
        c->add_option("--tolerance", o.tolerance, "verification tolerance");
        c->add_flag("--rational", o.rational, "exact rational arithmetic where possible");
        c->add_option("--set", o.sets, "override a parameter, key=value");
    };
    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&);
    };
    const Cmd cmds[] = {{"classify", "classify rank-0 points", cmd_classify},
                        {"thresholds", "Hopf thresholds of m0 and m2", cmd_thresholds},
                        {"normal-form", "sixth-order normal form at a threshold", cmd_normal_form},
                        {"unfold", "linear normal form and unfolding", cmd_unfold},
                        {"image", "emit one momentum-map figure", cmd_image},
                        {"events", "detect bifurcation events over a t4 range", cmd_events},
                        {"sweep", "emit figures over the scenario t4 sweep", cmd_sweep},
                        {"verify", "compare against oracles", cmd_verify}};
    std::vector<std::pair<CLI::App*, const Cmd*>> subs;
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        common(sub);
        if (std::string(c.name) == "normal-form" || std::string(c.name) == "unfold")
            sub->add_option("--side", o.side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
        if (std::string(c.name) == "normal-form")
            sub->add_option("--source", o.source, "lie-series, appendix or closed-form")
                ->check(CLI::IsMember({"lie-series", "appendix", "closed-form"}));
        if (std::string(c.name) == "verify") {
            sub->add_option("--suite", o.suite, "appendix or figures");
            sub->add_option("--draws", o.draws, "random configurations")->check(CLI::PositiveNumber);
            sub->add_option("--seed", o.seed, "random seed");
        }
        subs.push_back({sub, &c});
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    try {
        for (auto& [sub, c] : subs)
            if (sub->parsed()) return c->fn(o, out);
        err << app.help();
        return usage;
    } catch (const ScenarioError& e) {
        for (const auto& v : e.violations) err << "schema: " << v << "\n";
        return schema;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_failed;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const PreconditionError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return internal;
    }
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace gaudin::cli
