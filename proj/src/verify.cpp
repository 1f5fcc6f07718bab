#include "gaudin/verify.hpp"

#include <chrono>
#include <cmath>

#include "gaudin/normal_form.hpp"

namespace gaudin {

bool AppendixReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !exact || (a2_zero && a9_zero);
}

double rel_diff(double a, double b, double floor) {
    double d = std::abs(a - b);
    double s = std::max(std::abs(a), std::abs(b));
    if (s <= floor) return d <= floor ? 0.0 : d / floor;
    return d / s;
}

ModelParams random_admissible(std::mt19937_64& rng) {
    static const double radii[] = {0.25, 1.0, 4.0, 9.0};
    std::uniform_int_distribution<int> pick_r(0, 3), num(-9, 9), den(2, 11), coin(0, 1);
    auto rat = [&]() {
        int n = 0;
        while (n == 0) n = num(rng);
        return static_cast<double>(n) / den(rng);
    };
    for (;;) {
        ModelParams p;
        p.R1 = radii[pick_r(rng)];
        p.R2 = radii[pick_r(rng)];
        if (p.R1 == p.R2) continue;
        p.w = coin(rng);
        p.t0 = rat();
        p.t1 = rat();
        p.t2 = rat();
        p.t3 = rat();
        p.t4 = threshold_value(as_double(p), FixedPointTag::m0, Side::plus);
        double alpha = ((p.w * p.t1 - p.t4) * p.R2 + (p.w * p.t2 + p.t4) * p.R1) / (2 * p.R1 * p.R2);
        if (std::abs(alpha) < 1e-3) continue;
        auto raw = eval_raw_coefficients(p);
        if (std::abs(raw.b) < 1e-6) continue;
        return p;
    }
}

AppendixReport compare_appendix(const ModelParams& p_in, double tol, bool rational) {
    auto t0 = std::chrono::steady_clock::now();
    AppendixReport rep;
    ModelParams p = p_in;
    p.t4 = threshold_value(as_double(p), FixedPointTag::m0, Side::plus);
    rep.params = p;

    RawCoefficients oracle;
    GeneratingCoefficients ogen;
    std::optional<ParamsT<Rational>> ex = rational ? as_exact(p) : std::nullopt;
    if (ex) {
        ex->t4 = threshold_value(*ex, FixedPointTag::m0, Side::plus);
        auto r = lie_series_raw(*ex, Side::plus);
        rep.exact = true;
        rep.a2_zero = r.raw.a[2] == 0;
        rep.a9_zero = r.raw.a[9] == 0;
        for (int i = 1; i <= 9; ++i) oracle.a[i] = to_double(r.raw.a[i]);
        oracle.b = to_double(r.raw.b);
        for (int i = 0; i < 3; ++i) ogen.e[i] = to_double(r.gen.e[i]);
        for (int i = 0; i < 6; ++i) ogen.f[i] = to_double(r.gen.f[i]);
    } else {
        auto r = lie_series_raw(as_double(p), Side::plus);
        oracle = r.raw;
        ogen = r.gen;
    }
    auto printed = eval_raw_coefficients(p);
    auto pgen = eval_generating_coefficients(p);

    auto add = [&](const std::string& name, double o, double pr) {
        CoefficientCheck c;
        c.name = name;
        c.oracle = o;
        c.printed = pr;
        c.rel_err = rel_diff(o, pr);
        c.ok = c.rel_err <= tol;
        rep.checks.push_back(c);
    };
    for (int i = 1; i <= 9; ++i) add("a" + std::to_string(i), oracle.a[i] / oracle.b, printed.a[i] / printed.b);
    for (int i = 0; i < 3; ++i) add("e" + std::to_string(i + 1), ogen.e[i], pgen.e[i]);
    for (int i = 0; i < 6; ++i) add("f" + std::to_string(i + 1), ogen.f[i], pgen.f[i]);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace gaudin
