#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gaudin/momentum.hpp"

using namespace gaudin;

namespace {

const double kRt2 = std::sqrt(2.0);

ModelParams fig1()
{
    ModelParams p;
    p.t1 = 0.5;
    p.t3 = 0.5;
    return p;
}

ModelParams fig5()
{
    ModelParams p;
    p.t1 = -0.5;
    p.t3 = -0.5;
    return p;
}

ModelParams fig6()
{
    ModelParams p;
    p.R1 = 1;
    p.R2 = 2;
    p.w = 0;
    p.t0 = -0.5;
    p.t3 = 0.5;
    return p;
}

// random interior (j, K) with a margin from the interval ends
std::pair<double, double> random_jk(const ModelParams& p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    double J = p.R1 + p.R2;
    for (;;) {
        double j = -J + 2 * J * u(rng);
        auto [lo, hi] = k_interval(p, j);
        if (hi - lo < 0.2) continue;
        return {j, lo + 0.05 + (hi - lo - 0.1) * u(rng)};
    }
}

double xi_on_branch(const ModelParams& p, double j, double K, int br)
{
    double z1 = (j + K) / (2 * p.R1), z2 = (j - K) / (2 * p.R2);
    return z1 * z2 + br * std::sqrt((1 - z1 * z1) * (1 - z2 * z2));
}

int count_type(const std::vector<ReducedCriticalPoint>& v, CriticalType t)
{
    int n = 0;
    for (auto& c : v)
        if (c.type == t) ++n;
    return n;
}

} // namespace

TEST_CASE("reduced Hamiltonian examples")
{
    ModelParams p = fig6();
    p.t4 = -7.0 / 8;
    CHECK(reduced_hamiltonian(p, 0, 0, 1) == doctest::Approx(0.5).epsilon(1e-14));
    p.t4 = 3.0 / 8;
    CHECK(reduced_hamiltonian(p, 0, 0, -1) == doctest::Approx(-0.5).epsilon(1e-14));

    ModelParams z = fig6();
    z.t3 = 0;
    z.t4 = 0.7;
    CHECK(reduced_hamiltonian(z, 0.3, 0.4, 1) == reduced_hamiltonian(z, 0.3, 0.4, -1));

    auto [lo, hi] = k_interval(p, 0.5);
    CHECK(lo == doctest::Approx(-2.5));
    CHECK(hi == doctest::Approx(1.5));
    CHECK_THROWS_AS(reduced_hamiltonian(p, 0.5, 1.6, 1), DomainError);
}

TEST_CASE("printed displays of the worked configuration")
{
    CHECK(printed_f(0, 0, 0) == doctest::Approx(1.0 / 8).epsilon(1e-15));
    std::mt19937_64 rng(1);
    ModelParams p = fig6();
    for (int k = 0; k < 200; ++k) {
        auto [j, K] = random_jk(p, rng);
        double t4 = std::uniform_real_distribution<double>(-2, 2)(rng);
        p.t4 = t4;
        for (int br : {1, -1}) {
            double xi = xi_on_branch(p, j, K, br);
            CHECK(printed_reduced_hamiltonian(t4, j, K, xi) == doctest::Approx(reduced_hamiltonian(p, j, K, br)).epsilon(1e-12));
            auto jet = reduced_jets(p, j, K, br).at(t4);
            CHECK(jet.d(0, 1) == doctest::Approx(-printed_F(br, t4, j, K, 0) / 8).epsilon(1e-10).scale(1));
        }
        auto jm = reduced_jets(p, j, K, -1).at(t4);
        CHECK(jm.d(0, 2) == doctest::Approx(printed_G(t4, j, K)).epsilon(1e-10).scale(1));
    }
}

TEST_CASE("printed G picks the minus branch")
{
    // the minus-branch second derivative vanishes at 3/8, the plus one at -7/8
    CHECK(std::fabs(printed_G(3.0 / 8, 0, 0)) <= 1e-14);
    CHECK(std::fabs(printed_G(-7.0 / 8, 0, 0)) > 0.1);
    ModelParams p = fig6();
    CHECK(std::fabs(reduced_jets(p, 0, 0, 1).at(-7.0 / 8).d(0, 2)) <= 1e-14);
    CHECK(std::fabs(reduced_jets(p, 0, 0, -1).at(3.0 / 8).d(0, 2)) <= 1e-14);
}

TEST_CASE("criticality function examples")
{
    ModelParams p = fig6();
    for (double t4 : {-1.5, -0.875, 0.0, 0.375, 2.0})
        for (int br : {1, -1}) CHECK(std::fabs(criticality_function(p, t4, 0, 0, br)) <= 1e-14);
    CHECK(std::fabs(reduced_jets(p, 0, 0, 1).at(-7.0 / 8).d(0, 2)) <= 1e-14);
}

TEST_CASE("analytic derivative matches finite differences")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    int checked = 0;
    while (checked < 1000) {
        ModelParams p;
        p.R1 = 1 + std::fabs(u(rng));
        p.R2 = 1 + std::fabs(u(rng));
        p.w = u(rng);
        p.t0 = u(rng);
        p.t1 = u(rng);
        p.t2 = u(rng);
        p.t3 = u(rng);
        p.t4 = u(rng);
        auto [j, K] = random_jk(p, rng);
        int br = checked % 2 ? 1 : -1;
        double h = 1e-6;
        double fd = (reduced_hamiltonian(p, j, K + h, br) - reduced_hamiltonian(p, j, K - h, br)) / (2 * h);
        double an = criticality_function(p, p.t4, j, K, br);
        CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1.0, std::fabs(an)));
        ++checked;
    }
}

TEST_CASE("critical point examples")
{
    ModelParams p = fig6();
    auto a = critical_points(p, -7.0 / 8, 0);
    bool cusp0 = false;
    for (auto& c : a)
        if (c.type == CriticalType::Cusp && std::fabs(c.K) < 1e-9 && c.branch == 1) cusp0 = true;
    CHECK(cusp0);

    auto b = critical_points(p, 0.5, kRt2 / 2);
    bool found = false;
    for (auto& c : b)
        if (std::fabs(c.K + 3 * kRt2 / 2) < 1e-6 && std::fabs(c.H + 0.5) < 1e-6 && std::fabs(c.det) < 1e-6) found = true;
    CHECK(found);

    // fig1b: one elliptic-regular point per branch, checked against a dense scan. At j = 0
    // (the J value of m0 and m2) the minus branch ends in the rank-0 endpoint instead.
    ModelParams q = fig1();
    auto c0 = critical_points(q, 0.5, 0);
    CHECK(count_type(c0, CriticalType::EllipticRegular) == 1);
    CHECK(count_type(c0, CriticalType::RankZero) == 2);
    auto c = critical_points(q, 0.5, 0.1);
    for (int br : {1, -1}) {
        int n = 0;
        for (auto& x : c)
            if (x.branch == br && x.type == CriticalType::EllipticRegular) ++n;
        CHECK(n == 1);
        auto [lo, hi] = k_interval(q, 0.1);
        int changes = 0;
        const int N = 100000;
        double prev = criticality_function(q, 0.5, 0.1, lo + (hi - lo) * 0.5 / N, br);
        for (int i = 1; i < N; ++i) {
            double v = criticality_function(q, 0.5, 0.1, lo + (hi - lo) * (i + 0.5) / N, br);
            if ((v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
        CHECK(changes == 1);
    }
}

TEST_CASE("critical points satisfy their invariants")
{
    std::mt19937_64 rng(3);
    ModelParams p = fig6();
    for (double t4 : {-1.5, -0.5, 0.3, 0.495, 1.2})
        for (int k = 0; k < 20; ++k) {
            double j = std::uniform_real_distribution<double>(-2.9, 2.9)(rng);
            for (auto& c : critical_points(p, t4, j)) {
                auto [lo, hi] = k_interval(p, j);
                CHECK(c.K >= lo - 1e-12);
                CHECK(c.K <= hi + 1e-12);
                if (c.type != CriticalType::RankZero) CHECK(std::fabs(criticality_function(p, t4, j, c.K, c.branch)) <= 1e-9);
            }
        }
}

TEST_CASE("traced hyperbolic segment counts")
{
    ModelParams a = fig1();
    a.t1 = 1;
    a.t3 = 1e-3;
    CHECK(trace_curves(a, 0, default_j_grid(a)).hyperbolic_segments() == 0);

    ModelParams p = fig1();
    int expect[] = {0, 0, 1};
    double t4s[] = {0.5, 0, -1.5};
    for (int i = 0; i < 3; ++i) {
        auto fd = trace_curves(p, t4s[i], default_j_grid(p));
        CHECK(fd.hyperbolic_segments() == expect[i]);
        CHECK(fd.cusps.size() == 2u * expect[i]);
    }
    // fig1d: the flap straddles J of m2 and ends in two cusps
    auto d = trace_curves(p, -1.5, default_j_grid(p));
    for (auto& c : d.curves)
        if (c.type == CriticalType::HyperbolicRegular) {
            CHECK(c.pts.front().j < 0);
            CHECK(c.pts.back().j > 0);
            CHECK(c.ends[0] == EndKind::Cusp);
            CHECK(c.ends[1] == EndKind::Cusp);
        }

    ModelParams q = fig5();
    int e5[] = {0, 0, 0, 1};
    double t5[] = {0, -0.25, -0.75, -1.5};
    for (int i = 0; i < 4; ++i) CHECK(trace_curves(q, t5[i], default_j_grid(q)).hyperbolic_segments() == e5[i]);
}

TEST_CASE("fig6 panels: one pleat, then two flaps and a pleat")
{
    ModelParams p = fig6();
    auto fd = trace_curves(p, 0.495, default_j_grid(p));
    CHECK(fd.hyperbolic_segments() == 3);
    CHECK(fd.cusps.size() == 6u);
    int flaps = 0, flap_cusps = 0;
    for (auto& c : fd.curves) {
        if (c.type != CriticalType::HyperbolicRegular) continue;
        double lo = std::min(c.pts.front().j, c.pts.back().j), hi = std::max(c.pts.front().j, c.pts.back().j);
        for (auto& r : fd.rank0)
            if ((r.fp == FixedPointTag::m0 || r.fp == FixedPointTag::m2) && r.J > lo && r.J < hi) {
                ++flaps;
                for (auto e : c.ends)
                    if (e == EndKind::Cusp) ++flap_cusps;
            }
    }
    CHECK(flaps == 2);
    CHECK(flap_cusps == 4);

    auto pleat = trace_curves(p, -1.5, default_j_grid(p));
    CHECK(pleat.hyperbolic_segments() == 1);
    CHECK(pleat.cusps.size() == 2u);
}

TEST_CASE("hyperbolic segments end at cusps or rank-0 values")
{
    std::vector<std::pair<ModelParams, double>> panels;
    for (double t4 : {0.5, 0.0, -1.5}) panels.push_back({fig1(), t4});
    for (double t4 : {0.0, -0.25, -0.75, -1.5}) panels.push_back({fig5(), t4});
    for (double t4 : {-1.5, -0.4714, 0.375, 0.4714, 0.495, 0.58, 1.0, 1.5, 1.51, 2.0}) panels.push_back({fig6(), t4});
    for (auto& [p, t4] : panels) {
        auto fd = trace_curves(p, t4, default_j_grid(p));
        for (auto& c : fd.curves)
            if (c.type == CriticalType::HyperbolicRegular)
                for (auto e : c.ends) CHECK((e == EndKind::Cusp || e == EndKind::RankZero));
    }
}

TEST_CASE("occupancy extent and containment")
{
    for (auto p : {fig1(), fig5(), fig6()}) {
        auto occ = sample_image(p, -1.5, 256);
        double cell = (occ.jmax - occ.jmin) / occ.nx;
        double lo = 1e9, hi = -1e9;
        for (int ix = 0; ix < occ.nx; ++ix)
            for (int iy = 0; iy < occ.ny; ++iy)
                if (occ.occupied(ix, iy)) {
                    lo = std::min(lo, occ.jmin + ix * cell);
                    hi = std::max(hi, occ.jmin + (ix + 1) * cell);
                }
        CHECK(std::fabs(lo + p.R1 + p.R2) <= cell);
        CHECK(std::fabs(hi - p.R1 - p.R2) <= cell);
    }
    ModelParams q = fig5();
    auto fd = trace_curves(q, -1.5, default_j_grid(q));
    auto occ = sample_image(q, -1.5, 1024);
    for (auto& c : fd.curves)
        for (auto& pt : c.pts) CHECK(occ.contains(pt.j, pt.H));
    CHECK_THROWS(sample_image(q, 0, 1));
}

TEST_CASE("zero coupling image is covered twice in places")
{
    ModelParams p;
    p.R1 = 1;
    p.R2 = 2;
    p.w = 0;
    p.t0 = -0.25;
    p.t3 = 0;
    auto occ = sample_image(p, -1, 512);
    CHECK(occ.count_multi() > 0);
    CHECK(occ.count_multi() < occ.count());
}

TEST_CASE("figure emission")
{
    ModelParams p = fig1();
    FigureData empty;
    empty.params = p;
    empty.occupancy = sample_image(p, 0.5, 32);
    for (auto f : {FigureFormat::svg, FigureFormat::csv, FigureFormat::json}) CHECK_FALSE(render_figure(empty, f).empty());
    CHECK(render_figure(empty, FigureFormat::svg).find("</svg>") != std::string::npos);

    auto fd = trace_curves(p, 0.5, default_j_grid(p));
    CHECK(fd.cusps.empty());
    CHECK(fd.rank0.size() == 4u);
    for (auto& r : fd.rank0)
        if (r.fp == FixedPointTag::m0) CHECK(r.cls == EigenClass::FocusFocus);
    std::string svg = render_figure(fd, FigureFormat::svg);
    CHECK(svg.find("<polygon") == std::string::npos);
    auto count = [&](const std::string& s, const std::string& what) {
        int n = 0;
        for (size_t i = s.find(what); i != std::string::npos; i = s.find(what, i + 1)) ++n;
        return n;
    };
    CHECK(count(svg, "<circle") == 4);
    CHECK(svg.find("focus-focus") != std::string::npos);

    ModelParams q = fig6();
    auto e = trace_curves(q, 0.495, default_j_grid(q));
    std::string s6 = render_figure(e, FigureFormat::svg);
    CHECK(count(s6, "<polygon") == 6);
    CHECK(count(render_figure(e, FigureFormat::csv), "\ncusp,") == 6);
    CHECK_THROWS(parse_format("png"));
}

TEST_CASE("rendering is deterministic")
{
    ModelParams p = fig6();
    auto make = [&] {
        auto fd = trace_curves(p, 0.495, default_j_grid(p));
        fd.occupancy = sample_image(p, 0.495, 256);
        return fd;
    };
    auto a = make(), b = make();
    for (auto f : {FigureFormat::svg, FigureFormat::csv, FigureFormat::json}) CHECK(render_figure(a, f) == render_figure(b, f));
}

TEST_CASE("local cusp counts around the pleat birth")
{
    ModelParams p = fig6();
    CHECK(local_cusp_count(p, 0.375 - 1e-3, -1, 0, 0, 0.5) == 0);
    CHECK(local_cusp_count(p, 0.375 + 1e-3, -1, 0, 0, 0.5) == 2);
}

TEST_CASE("event detection is stable under coarser scans")
{
    ModelParams p = fig6();
    auto fine = detect_events(p, -2, 2.5, all_event_kinds());
    EventScan coarse;
    coarse.n_t4 = coarse.n_j = coarse.n_K = 21;
    auto rough = detect_events(p, -2, 2.5, all_event_kinds(), coarse);
    REQUIRE(fine.size() == rough.size());
    for (size_t i = 0; i < fine.size(); ++i) {
        CHECK(fine[i].kind == rough[i].kind);
        CHECK(std::fabs(fine[i].t4 - rough[i].t4) <= 1e-6);
        CHECK(std::fabs(fine[i].j - rough[i].j) <= 1e-6);
        CHECK(std::fabs(fine[i].H - rough[i].H) <= 1e-6);
    }
    for (auto& e : fine) {
        CHECK(e.confirmed);
        CHECK(e.residual <= 1e-8);
    }
    ModelParams z = p;
    z.t3 = 0;
    CHECK_THROWS_AS(detect_events(z, -1, 1, all_event_kinds()), DomainError);
}
