#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gaudin/linear.hpp"
#include "gaudin/normal_form.hpp"
#include "gaudin/verify.hpp"

using namespace gaudin;

namespace {

const double kRt2 = std::sqrt(2.0);

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

ModelParams fig7()
{
    ModelParams p = fig6();
    p.t0 = 0.5;
    p.t3 = -3 / kRt2;
    return p;
}

ModelParams at_plus(ModelParams p)
{
    p.t4 = threshold_value(as_double(p), FixedPointTag::m0, Side::plus);
    return p;
}

} // namespace

TEST_CASE("appendix raw coefficient examples")
{
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) CHECK(eval_raw_coefficients(random_admissible(rng)).a[9] == 0);

    ModelParams p = fig5();
    p.t4 = -0.75;
    auto raw = eval_raw_coefficients(p);
    CHECK(std::fabs(raw.a[2]) <= 1e-15);
    CHECK(raw.b == doctest::Approx(-1).epsilon(1e-14));
    auto s = scale(raw);
    for (int i = 1; i <= 9; ++i) CHECK(s.a[i] == doctest::Approx(-raw.a[i]).epsilon(1e-14));

    ModelParams q;
    q.t3 = 1;
    q.t4 = 1;
    CHECK(eval_raw_coefficients(q).a[5] == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("appendix generating coefficient examples")
{
    ModelParams p;
    p.R1 = p.R2 = 2;
    p.t3 = 0.7;
    p.t1 = 0.3;
    p.t4 = 0.9;
    CHECK(std::fabs(eval_generating_coefficients(p).e[2]) <= 1e-15);

    ModelParams q;
    q.t3 = 1;
    q.t4 = 1;
    CHECK(eval_generating_coefficients(q).e[1] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("scaling")
{
    RawCoefficients raw;
    raw.b = -2.5;
    for (int i = 1; i <= 9; ++i) raw.a[i] = raw.b * i;
    auto s = scale(raw);
    for (int i = 1; i <= 9; ++i) CHECK(s.a[i] == doctest::Approx(i).epsilon(1e-15));
    raw.b = 1e-13;
    CHECK_THROWS_AS(scale(raw), DomainError);
}

TEST_CASE("quadratic coefficient vanishes at the threshold and moves with t4")
{
    LieSeriesResultT<double> d;
    auto s = lie_series_normal_form(at_plus(fig5()), FixedPointTag::m0, Side::plus, 6, &d);
    CHECK(std::fabs(s.a[2]) <= 1e-10);
    CHECK(d.odd_residual <= 1e-10);

    std::mt19937_64 rng(2);
    for (int k = 0; k < 20; ++k) {
        ModelParams p = random_admissible(rng);
        auto e = lie_series_normal_form(p, FixedPointTag::m0, Side::plus);
        CHECK(std::fabs(e.a[2]) <= 1e-10);
        double h = 1e-6;
        auto a2 = [&](double t4) {
            ParamsT<double> q = as_double(p);
            q.t4 = t4;
            auto r = lie_series_raw(q, Side::plus);
            return r.raw.a[2] / r.raw.b;
        };
        auto a2_appendix = [&](double t4) {
            ModelParams q = p;
            q.t4 = t4;
            auto r = eval_raw_coefficients(q);
            return r.a[2] / r.b;
        };
        double fd = (a2(p.t4 + h) - a2(p.t4 - h)) / (2 * h);
        double fa = (a2_appendix(p.t4 + h) - a2_appendix(p.t4 - h)) / (2 * h);
        CHECK(std::fabs(fd) > 1e-6);
        CHECK(fd == doctest::Approx(fa).epsilon(1e-5));
    }
}

TEST_CASE("odd terms vanish after flattening")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        LieSeriesResultT<double> d;
        lie_series_normal_form(random_admissible(rng), FixedPointTag::m0, Side::plus, 6, &d);
        CHECK(d.odd_residual <= 1e-10);
        CHECK(d.residual <= 1e-8);
    }
}

TEST_CASE("exact zeros in rational mode")
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; ++k) {
        ModelParams p = random_admissible(rng);
        auto ex = as_exact(p);
        REQUIRE(ex);
        auto r = lie_series_raw(*ex, Side::plus);
        CHECK(r.raw.a[2] == 0);
        CHECK(r.raw.a[9] == 0);
        auto ap = eval_raw_coefficients(*ex);
        CHECK(ap.a[2] == 0);
        CHECK(ap.a[9] == 0);
    }
}

TEST_CASE("oracle agrees with the appendix through fourth order")
{
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        ModelParams p = random_admissible(rng);
        auto o = lie_series_normal_form(p, FixedPointTag::m0, Side::plus);
        auto a = scale(eval_raw_coefficients(p));
        for (int i : {1, 3, 4, 5}) {
            CAPTURE(i);
            CHECK(rel_diff(o.a[i], a.a[i]) <= 1e-8);
        }
        // vanishing coefficients: absolute in floating mode, exact zeros are checked in rational mode
        CHECK(std::fabs(o.a[2] - a.a[2]) <= 1e-10);
        CHECK(std::fabs(o.a[9] - a.a[9]) <= 1e-10);
    }
}

TEST_CASE("frozen sixth-order oracle values")
{
    // exact Lie-series values for R1=1, R2=4, w=0, t0=4/7, t1=-4/3, t2=-1/5, t3=1/2, t4=6/11
    ModelParams p;
    p.R1 = 1;
    p.R2 = 4;
    p.w = 0;
    p.t0 = 4.0 / 7;
    p.t1 = -4.0 / 3;
    p.t2 = -1.0 / 5;
    p.t3 = 0.5;
    p.t4 = 6.0 / 11;
    auto ex = as_exact(p);
    REQUIRE(ex);
    auto r = lie_series_raw(*ex, Side::plus);
    CHECK(r.raw.a[6] == Rational(517062509, 48504135680LL));
    // the appendix print differs at sixth order
    CHECK(eval_raw_coefficients(*ex).a[6] == Rational(293651181, 48504135680LL));
}

TEST_CASE("generating function E is half the appendix value")
{
    std::mt19937_64 rng(6);
    for (int k = 0; k < 10; ++k) {
        ModelParams p = random_admissible(rng);
        LieSeriesResultT<double> d;
        lie_series_normal_form(p, FixedPointTag::m0, Side::plus, 6, &d);
        auto g = eval_generating_coefficients(p);
        for (int i = 0; i < 3; ++i) CHECK(rel_diff(2 * d.gen.e[i], g.e[i]) <= 1e-8);
    }
}

TEST_CASE("closed form examples")
{
    ModelParams p;
    p.R1 = p.R2 = 1.5;
    p.t1 = 0.4;
    p.t2 = -0.3;
    p.t3 = 0.8;
    CHECK(a3_closed_form(p) == doctest::Approx((p.t2 - p.t1) / (8 * 1.5 * p.t3)).epsilon(1e-14));

    double a3 = a3_closed_form(at_plus(fig6()));
    CHECK(a3 == doctest::Approx((-3 + kRt2 / 2) / (24 * kRt2)).epsilon(1e-14));
    CHECK(a3 == doctest::Approx(-0.0676).epsilon(1e-3));

    ModelParams q = fig6();
    q.t0 = 0.5;
    CHECK(t3_degenerate(q) == doctest::Approx(-3 / kRt2).epsilon(1e-14));
    q.t3 = t3_degenerate(q);
    CHECK(threshold_value(as_double(q), FixedPointTag::m0, Side::plus) == doctest::Approx(-2).epsilon(1e-14));

    ModelParams z = fig6();
    z.t3 = 0;
    CHECK_THROWS_AS(a3_closed_form(z), DomainError);
    ModelParams eq;
    eq.t3 = 1;
    CHECK_THROWS_AS(t3_degenerate(eq), DomainError);
}

TEST_CASE("closed form a3 is twice the normalized quadratic coefficient")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10; ++k) {
        ModelParams p = random_admissible(rng);
        auto o = lie_series_normal_form(p, FixedPointTag::m0, Side::plus);
        CHECK(rel_diff(a3_closed_form(p), 2 * o.a[3]) <= 1e-8);
    }
}

TEST_CASE("criticality verdicts of the figures")
{
    CHECK(classify_criticality(fig5(), FixedPointTag::m0, Side::plus).verdict == Verdict::Subcritical);
    CHECK(classify_criticality(fig5(), FixedPointTag::m2, Side::plus).verdict == Verdict::Supercritical);
    for (auto fp : {FixedPointTag::m0, FixedPointTag::m2}) {
        CHECK(classify_criticality(fig6(), fp, Side::plus).verdict == Verdict::Subcritical);
        CHECK(classify_criticality(fig6(), fp, Side::minus).verdict == Verdict::Supercritical);
    }
    auto c7 = classify_criticality(fig7(), FixedPointTag::m0, Side::plus);
    CHECK(c7.verdict == Verdict::Degenerate);
    CHECK(std::fabs(c7.a3) <= 1e-10);
    CHECK(std::fabs(c7.a6) > 1e-6);
    auto c7m2 = classify_criticality(fig7(), FixedPointTag::m2, Side::plus);
    CHECK(c7m2.verdict == Verdict::Degenerate);

    // every source agrees on the figure verdicts at the plus threshold of m0
    for (auto src : {CriticalitySource::ClosedForm, CriticalitySource::Appendix}) {
        CHECK(classify_criticality(fig5(), FixedPointTag::m0, Side::plus, src).verdict == Verdict::Subcritical);
        CHECK(classify_criticality(fig6(), FixedPointTag::m0, Side::plus, src).verdict == Verdict::Subcritical);
    }
    CHECK_THROWS_AS(classify_criticality(fig6(), FixedPointTag::m1, Side::plus), DomainError);
}

TEST_CASE("verdict sign rules")
{
    CHECK(verdict_from(0.1, 0, false, false) == Verdict::Supercritical);
    CHECK(verdict_from(-0.1, 0, false, false) == Verdict::Subcritical);
    CHECK(verdict_from(0, 0.2, true, false) == Verdict::Degenerate);
    CHECK(verdict_from(0, 0, true, true) == Verdict::PossiblyHigherDegenerate);

    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        ModelParams p = random_admissible(rng);
        for (auto side : {Side::plus, Side::minus}) {
            auto c = classify_criticality(p, FixedPointTag::m0, side);
            if (c.verdict == Verdict::Supercritical) CHECK(c.sigma * c.a3 > 1e-9);
            if (c.verdict == Verdict::Subcritical) CHECK(c.sigma * c.a3 < -1e-9);
            if (c.verdict == Verdict::Degenerate) CHECK(std::fabs(c.a3) <= 1e-9);
        }
    }
}

TEST_CASE("equal radii: subcritical exactly when t1 - t2 and t3 share a sign")
{
    for (int i = 0; i < 20; ++i)
        for (int k = 0; k < 20; ++k) {
            ModelParams p;
            p.R1 = p.R2 = 1;
            p.w = 1;
            double d = (i - 9.5) / 4, t3 = (k - 9.5) / 4;
            p.t1 = d;
            p.t2 = 0;
            p.t3 = t3;
            auto c = classify_criticality(p, FixedPointTag::m0, Side::plus);
            bool sub = (p.t1 < p.t2 && t3 < 0) || (p.t1 > p.t2 && t3 > 0);
            CHECK((c.verdict == Verdict::Subcritical) == sub);
        }
}

TEST_CASE("degeneracy ladder on the rational-model locus")
{
    ModelParams p;
    p.R1 = 1;
    p.R2 = 4;
    p.w = 1;
    p.t0 = 0;
    p.t1 = 1;
    p.t2 = (p.R1 - 2 * p.R2) * p.t1 / (p.R2 - 2 * p.R1);
    p.t3 = t3_degenerate(p);
    auto ap = classify_criticality(p, FixedPointTag::m0, Side::plus, CriticalitySource::Appendix, true);
    CHECK(ap.exact);
    CHECK(ap.verdict == Verdict::PossiblyHigherDegenerate);
    auto ls = classify_criticality(p, FixedPointTag::m0, Side::plus, CriticalitySource::LieSeries, true);
    CHECK(ls.exact);
    CHECK(ls.verdict == Verdict::Degenerate);
    CHECK(ls.a6 != 0);
}

TEST_CASE("minus side and m2 go through the same pipeline")
{
    LieSeriesResultT<double> d;
    ModelParams p = fig6();
    p.t4 = threshold_value(as_double(p), FixedPointTag::m2, Side::minus);
    auto s = lie_series_normal_form(p, FixedPointTag::m2, Side::minus, 6, &d);
    CHECK(d.residual <= 1e-8);
    CHECK(std::fabs(s.a[2]) <= 1e-10);
    CHECK_THROWS_AS(lie_series_normal_form(fig6(), FixedPointTag::m1, Side::plus), DomainError);
    ModelParams z = fig6();
    z.t3 = 0;
    CHECK_THROWS_AS(lie_series_normal_form(z, FixedPointTag::m0, Side::plus), DomainError);
}
