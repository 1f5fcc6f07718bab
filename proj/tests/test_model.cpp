#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gaudin/model.hpp"
#include "gaudin/poly.hpp"

using namespace gaudin;

namespace {

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

PhasePoint random_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0, 1);
    double pi = std::acos(-1.0);
    return PhasePoint::from_angles(std::acos(2 * u(rng) - 1), 2 * pi * u(rng), std::acos(2 * u(rng) - 1),
                                   2 * pi * u(rng));
}

} // namespace

TEST_CASE("J at the fixed points")
{
    ModelParams p = fig6();
    CHECK(eval_J(p, fixed_point(FixedPointTag::m0).pt) == -1);
    CHECK(eval_J(p, fixed_point(FixedPointTag::m2).pt) == 1);
    CHECK(eval_J(p, PhasePoint::make(1, 0, 0, 0, 1, 0)) == 0);
}

TEST_CASE("fixed point coordinates")
{
    auto m0 = fixed_point(FixedPointTag::m0).pt;
    CHECK(m0.z1 == 1);
    CHECK(m0.z2 == -1);
    auto m1 = fixed_point(FixedPointTag::m1).pt;
    CHECK(m1.z1 == -1);
    CHECK(m1.z2 == -1);
    auto m2 = fixed_point(FixedPointTag::m2).pt;
    CHECK(m2.z1 == -1);
    CHECK(m2.z2 == 1);
    auto m3 = fixed_point(FixedPointTag::m3).pt;
    CHECK(m3.z1 == 1);
    CHECK(m3.z2 == 1);
    CHECK(parse_fixed_point("m3") == FixedPointTag::m3);
    CHECK_THROWS(parse_fixed_point("m4"));
}

TEST_CASE("H examples")
{
    ModelParams p = fig6();
    p.t4 = -std::sqrt(2.0) / 3;
    CHECK(eval_H(p, fixed_point(FixedPointTag::m0).pt) == doctest::Approx(std::sqrt(2.0) / 3).epsilon(1e-15));

    ModelParams zero;
    std::mt19937_64 rng(1);
    CHECK(eval_H(zero, random_point(rng)) == 0);

    ModelParams f5;
    f5.t1 = -0.5;
    f5.t3 = -0.5;
    for (double t4 : {-2.0, -0.75, 0.0, 1.25}) {
        f5.t4 = t4;
        CHECK(eval_H(f5, fixed_point(FixedPointTag::m0).pt) == doctest::Approx(-0.5 - t4).epsilon(1e-15));
    }
}

TEST_CASE("phase point validation")
{
    CHECK_NOTHROW(PhasePoint::make(0, 0, 1 + 1e-10, 0, 0, 1));
    auto q = PhasePoint::make(0, 0, 1 + 1e-10, 0, 0, 1);
    CHECK(q.z1 == doctest::Approx(1).epsilon(1e-15));
    CHECK_THROWS_AS(PhasePoint::make(0, 0, 1.1, 0, 0, 1), DomainError);
}

TEST_CASE("rational specialization")
{
    ModelParams a = from_rational(1, 1, 0, {1, 0});
    CHECK(a.t3 == 1);
    CHECK(a.t4 == 1);
    CHECK(a.t0 == 0);
    ModelParams b = from_rational(1, 2, 2, {1, 0});
    CHECK(b.t3 == 0);
    CHECK(b.t4 == 0);
    CHECK_THROWS_AS(require_t3_nonzero(b), DomainError);
    ModelParams c = from_rational(1, 2, 1, {3, 1});
    CHECK(c.t3 == 0.5);
    CHECK(c.t4 == 0.5);
    CHECK_THROWS_AS(from_rational(1, 1, 0, {2, 2}), DomainError);
}

TEST_CASE("trigonometric specialization")
{
    double pi = std::acos(-1.0);
    ModelParams a = from_trigonometric(0, 1, 0, {pi / 2, 0});
    CHECK(a.w == 0);
    CHECK(a.t3 == doctest::Approx(1));
    CHECK(std::fabs(a.t4) < 1e-15);
    ModelParams b = from_trigonometric(0, 1, 1, {pi / 2, 0});
    CHECK(b.t3 == 0);
    CHECK(b.t4 == 0);
    ModelParams c = from_trigonometric(0, 1, 0, {pi / 4, 0});
    CHECK(c.t3 == doctest::Approx(std::sqrt(2.0)));
    CHECK(c.t4 == doctest::Approx(1));
    CHECK_THROWS_AS(from_trigonometric(0, 1, 0, {pi, 0}), DomainError);
}

TEST_CASE("rational Hamiltonian identity")
{
    // H^R = w(t1 z1 + t2 z2) + (t1 - t2)/(l1 - l2) (x1x2 + y1y2 + z1z2)
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int k = 0; k < 100; ++k) {
        double w = u(rng), t1 = u(rng), t2 = u(rng), l1 = u(rng), l2 = l1 + 0.5 + std::fabs(u(rng));
        ModelParams p = from_rational(w, t1, t2, {l1, l2});
        PhasePoint q = random_point(rng);
        double c = (t1 - t2) / (l1 - l2);
        double direct = w * (t1 * q.z1 + t2 * q.z2) + c * (q.x1 * q.x2 + q.y1 * q.y2 + q.z1 * q.z2);
        CHECK(eval_H(p, q) == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("reduce examples")
{
    ModelParams p = fig6();
    ReducedInvariants r = reduce(p, fixed_point(FixedPointTag::m0).pt);
    CHECK(r.j == -1);
    CHECK(r.K == 3);
    CHECK(r.xi == -1);
    CHECK(r.sigma == 0);

    ModelParams u;
    ReducedInvariants par = reduce(u, PhasePoint::make(0.6, 0, 0.8, 0.6, 0, 0.8));
    CHECK(par.xi == doctest::Approx(1));
    CHECK(par.sigma == 0);
    ReducedInvariants m1 = reduce(u, fixed_point(FixedPointTag::m1).pt);
    CHECK(m1.j == -2);
    CHECK(m1.K == 0);
    CHECK(m1.xi == 1);
    CHECK(m1.sigma == 0);
}

TEST_CASE("invariants residual examples")
{
    ModelParams u;
    CHECK(invariants_residual(u, {0, 0, 1, 0}) == 0);
    CHECK(invariants_residual(u, {0, 0, 0.5, 0}) == doctest::Approx(-0.75));
}

TEST_CASE("reduced invariants satisfy the relation on random points")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(0.2, 5);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
        ModelParams p;
        p.R1 = r(rng);
        p.R2 = r(rng);
        worst = std::max(worst, std::fabs(invariants_residual(p, reduce(p, random_point(rng)))));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("fixed points are critical for H and J")
{
    // finite differences in the local chart (x1, y1, x2, y2) with z from the sphere
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int draw = 0; draw < 20; ++draw) {
        ModelParams p;
        p.R1 = 1 + std::fabs(u(rng));
        p.R2 = 1 + std::fabs(u(rng));
        p.w = u(rng);
        p.t0 = u(rng);
        p.t1 = u(rng);
        p.t2 = u(rng);
        p.t3 = u(rng);
        p.t4 = u(rng);
        for (auto tag : {FixedPointTag::m0, FixedPointTag::m1, FixedPointTag::m2, FixedPointTag::m3}) {
            FixedPoint fp = fixed_point(tag);
            auto at = [&](std::array<double, 4> d) {
                double z1 = fp.s1 * std::sqrt(1 - d[0] * d[0] - d[1] * d[1]);
                double z2 = fp.s2 * std::sqrt(1 - d[2] * d[2] - d[3] * d[3]);
                PhasePoint q{d[0], d[1], z1, d[2], d[3], z2};
                return std::pair{eval_H(p, q), eval_J(p, q)};
            };
            double h = 1e-6, scale = 1 + std::fabs(p.t0) + std::fabs(p.t1) + std::fabs(p.t2) + std::fabs(p.t3) +
                                         std::fabs(p.t4);
            for (int i = 0; i < 4; ++i) {
                std::array<double, 4> a{}, b{};
                a[i] = h;
                b[i] = -h;
                auto [ha, ja] = at(a);
                auto [hb, jb] = at(b);
                CHECK(std::fabs(ha - hb) / (2 * h) <= 1e-6 * scale);
                CHECK(std::fabs(ja - jb) / (2 * h) <= 1e-6 * (p.R1 + p.R2));
            }
        }
    }
}

TEST_CASE("x rotation maps m0 to m2")
{
    ModelParams p = fig6();
    p.w = 0.7;
    p.t1 = 0.3;
    p.t2 = -0.2;
    ModelParams q = rotate_x(p);
    CHECK(q.w == -p.w);
    PhasePoint a = PhasePoint::make(0.3, 0.4, std::sqrt(0.75), -0.5, 0.1, -std::sqrt(0.74));
    PhasePoint b{a.x1, -a.y1, -a.z1, a.x2, -a.y2, -a.z2};
    CHECK(eval_H(q, b) == doctest::Approx(eval_H(p, a)).epsilon(1e-14));
    CHECK(eval_J(q, b) == doctest::Approx(-eval_J(p, a)).epsilon(1e-14));
}

TEST_CASE("exact parameter conversion")
{
    ModelParams p;
    p.R1 = 1;
    p.R2 = 4;
    p.t3 = 0.5;
    auto e = as_exact(p);
    REQUIRE(e);
    CHECK(e->rR == 2);
    p.R2 = 2;
    CHECK_FALSE(as_exact(p));
}
