#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaudin/forms.hpp"
#include "gaudin/poly.hpp"

using namespace gaudin;

namespace {

Poly random_poly(std::mt19937_64& rng, int lo, int hi, bool integer = true)
{
    const auto& tab = MonomialTable::get();
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_real_distribution<double> r(-1, 1);
    Poly p;
    for (int i = tab.begin(lo); i < tab.count(hi); ++i) p[i] = integer ? c(rng) : r(rng);
    return p;
}

Poly var(int i) { return Poly::variable(i); }

double diff(const Poly& a, const Poly& b) { return (a - b).max_abs(); }

double diff(const TwoForm<double>& a, const TwoForm<double>& b)
{
    TwoForm<double> d = a;
    d -= b;
    return d.max_abs();
}

double eval(const Poly& p, const std::array<double, 4>& x) { return p.evaluate(x); }

} // namespace

TEST_CASE("bracket relations of the Hilbert generators")
{
    auto g = hilbert_generators<double>();
    CHECK(diff(poisson_bracket(g.M, g.N), g.T_) == 0);
    CHECK(poisson_bracket(g.S, g.M).is_zero());
    CHECK(poisson_bracket(g.S, g.N).is_zero());
    CHECK(poisson_bracket(g.S, g.T_).is_zero());
    CHECK(diff(poisson_bracket(g.M, g.T_), g.M * 2.0) == 0);
    CHECK(diff(poisson_bracket(g.N, g.T_), g.N * -2.0) == 0);
    CHECK(diff(poisson_bracket(var(0), var(2)), Poly::constant(1)) == 0);
    CHECK(diff(poisson_bracket(var(1), var(3)), Poly::constant(1)) == 0);
    CHECK(poisson_bracket(var(0), var(3)).is_zero());
}

TEST_CASE("Hilbert generator identity")
{
    auto g = hilbert_generators<double>();
    CHECK((g.M * g.N * 4.0 - g.S * g.S - g.T_ * g.T_).is_zero());
    auto e = hilbert_generators<Rational>();
    CHECK((e.M * e.N * Rational(4) - e.S * e.S - e.T_ * e.T_).is_zero());
    CHECK_THROWS_AS(hilbert_generators<double>(1), DomainError);
}

TEST_CASE("Lie transform examples")
{
    std::mt19937_64 rng(5);
    Poly H = random_poly(rng, 2, 6);
    CHECK(diff(lie_transform(H, Poly()), H) == 0);

    // exp(ad_{MT}) M = M - 2M^2 + 4M^3 - 8M^4 up to degree 8
    auto g = hilbert_generators<double>();
    Poly MT = g.M * g.T_;
    Poly M2 = g.M * g.M, M3 = M2 * g.M, M4 = M3 * g.M;
    Poly expected = g.M - M2 * 2.0 + M3 * 4.0 - M4 * 8.0;
    CHECK(diff(lie_transform(g.M, MT), expected) == 0);

    // cubic generator, truncation 4: degree 3 gets {G, H2}, degree 4 gets H4 + {G,H3} + {G,{G,H2}}/2
    Poly G = random_poly(rng, 3, 3).with_max_degree(4);
    Poly K = random_poly(rng, 2, 4).with_max_degree(4);
    Poly out = lie_transform(K, G);
    Poly K2 = K.homogeneous(2), K3 = K.homogeneous(3), K4 = K.homogeneous(4);
    CHECK(diff(out.homogeneous(2), K2) == 0);
    CHECK(diff(out.homogeneous(3), K3 + poisson_bracket(G, K2)) == 0);
    Poly d4 = K4 + poisson_bracket(G, K3) + poisson_bracket(G, poisson_bracket(G, K2)) * 0.5;
    CHECK(diff(out.homogeneous(4), d4.homogeneous(4)) <= 1e-12);

    CHECK_THROWS_AS(lie_transform(H, g.M), DomainError);
}

TEST_CASE("bracket antisymmetry, bilinearity and Leibniz rule are exact")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        Poly a = random_poly(rng, 1, 3), b = random_poly(rng, 1, 3), h = random_poly(rng, 0, 6);
        CHECK((poisson_bracket(a, h) + poisson_bracket(h, a)).is_zero());
        CHECK((poisson_bracket(a * 3.0 + b, h) - poisson_bracket(a, h) * 3.0 - poisson_bracket(b, h)).is_zero());
        Poly lhs = poisson_bracket(a * b, h);
        Poly rhs = a * poisson_bracket(b, h) + b * poisson_bracket(a, h);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("Jacobi identity")
{
    std::mt19937_64 rng(19);
    for (int k = 0; k < 100; ++k) {
        Poly f = random_poly(rng, 1, 4, false), g = random_poly(rng, 1, 4, false), h = random_poly(rng, 1, 4, false);
        Poly a = poisson_bracket(f, poisson_bracket(g, h));
        Poly b = poisson_bracket(g, poisson_bracket(h, f));
        Poly c = poisson_bracket(h, poisson_bracket(f, g));
        double scale = std::max({a.max_abs(), b.max_abs(), c.max_abs(), 1.0});
        CHECK((a + b + c).max_abs() <= 1e-10 * scale);
    }
}

TEST_CASE("Lie transforms preserve canonical brackets")
{
    using RPoly = TruncatedPolynomial<Rational>;
    const auto& tab = MonomialTable::get();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < 3; ++k) {
        RPoly G;
        for (int i = tab.begin(3); i < tab.count(4); ++i) G[i] = Rational(c(rng), 1 + (i % 3));
        std::array<RPoly, 4> x;
        for (int i = 0; i < 4; ++i) x[i] = lie_transform(RPoly::variable(i), G);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int expect = (j == i + 2) ? 1 : (i == j + 2) ? -1 : 0;
                RPoly b = poisson_bracket(x[i], x[j]).truncated(6) - RPoly::constant(Rational(expect));
                CHECK(b.is_zero());
            }
    }
}

TEST_CASE("exterior derivative squares to zero")
{
    std::mt19937_64 rng(29);
    for (int k = 0; k < 20; ++k) {
        Poly f = random_poly(rng, 0, 8);
        CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
        OneForm<double> a;
        for (auto& c : a.c) c = random_poly(rng, 0, 7);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
        OneForm<double> b;
        for (auto& c : b.c) c = random_poly(rng, 0, 7, false);
        CHECK(exterior_derivative(exterior_derivative(b)).max_abs() <= 1e-12);
    }
}

TEST_CASE("radial contraction of the canonical form")
{
    auto a = interior_product(radial_field<double>(), canonical_form<double>());
    CHECK(diff(a.c[0], var(2)) == 0);
    CHECK(diff(a.c[1], var(3)) == 0);
    CHECK(diff(a.c[2], -var(0)) == 0);
    CHECK(diff(a.c[3], -var(1)) == 0);
}

TEST_CASE("omega jet at the fixed point")
{
    for (auto [R1, R2] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 3.0}}) {
        auto jet = gaudin_omega_jet<double>(R1, R2);
        CHECK(diff(jet[0], canonical_form<double>()) == 0);
        auto [cp, cm] = chi<double>(1, R1, R2);
        CHECK(diff(jet[1].c[pair_index(0, 1)], cm * (1 / (8 * R1 * R2))) <= 1e-15);
        CHECK(diff(jet[1].c[pair_index(2, 3)], cm * (1 / (8 * R1 * R2))) <= 1e-15);
        for (int k = 1; k < 4; ++k) CHECK(exterior_derivative(jet[k]).max_abs() <= 1e-12);

        // Poincare primitive of the quadratic part
        auto a = interior_product(radial_field<double>(), jet[1]);
        for (auto& c : a.c) c *= -0.25;
        CHECK(diff(exterior_derivative(a), jet[1]) <= 1e-15);
    }
    // equal radii: chi_2^- = -4 R S
    double R = 1.5;
    auto [cp, cm] = chi<double>(1, R, R);
    auto g = hilbert_generators<double>();
    CHECK(diff(cm, g.S * (-4 * R)) <= 1e-14);
}

TEST_CASE("flattening postcondition")
{
    for (auto [R1, R2] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{1.0, 4.0}, std::pair{0.25, 9.0}}) {
        auto jet = gaudin_omega_jet<double>(R1, R2);
        auto fl = flatten(jet);
        auto w = flow_pullback(fl.X, sum_jet(jet));
        w = flow_pullback(fl.Y, w);
        CHECK(w.homogeneous(0).max_abs() == doctest::Approx(1));
        CHECK(diff(w.homogeneous(0), canonical_form<double>()) == 0);
        CHECK(w.homogeneous(2).max_abs() <= 1e-12);
        CHECK(w.homogeneous(4).max_abs() <= 1e-12);
    }
    auto ex = gaudin_omega_jet<Rational>(Rational(1), Rational(4));
    auto fl = flatten(ex);
    auto w = flow_pullback(fl.Y, flow_pullback(fl.X, sum_jet(ex)));
    CHECK(w.homogeneous(2).is_zero());
    CHECK(w.homogeneous(4).is_zero());
}

TEST_CASE("flattening field for equal unit radii")
{
    auto fl = flatten(gaudin_omega_jet<double>(1.0, 1.0));
    auto [zp, zm] = zetas<double>();
    Poly q1 = var(0), p2 = var(3);
    Poly expected = ((p2 + q1) * zp - (p2 - q1) * zm) * (-1.0 / 32);
    CHECK(diff(fl.X.c[0], expected) <= 1e-15);
}

TEST_CASE("flat input gives trivial fields")
{
    std::array<TwoForm<double>, 4> jet{canonical_form<double>(), TwoForm<double>(), TwoForm<double>(),
                                       TwoForm<double>()};
    auto fl = flatten(jet);
    CHECK(fl.X.is_zero());
    CHECK(fl.Y.is_zero());
}

TEST_CASE("non-closed jets are rejected")
{
    auto jet = gaudin_omega_jet<double>(1.0, 2.0);
    jet[1].c[0] += var(2) * var(3);
    CHECK_THROWS_AS(flatten(jet), DomainError);
    auto bad = gaudin_omega_jet<double>(1.0, 2.0);
    bad[0].c[0] = Poly::constant(1);
    CHECK_THROWS_AS(flatten(bad), DomainError);
}

TEST_CASE("Cartan formula agrees with the flow pullback")
{
    // the flow and its Jacobian are integrated with RK4, central difference in time
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int k = 0; k < 10; ++k) {
        VectorField<double> v;
        for (auto& c : v.c) c = random_poly(rng, 0, 3, false);
        OneForm<double> a;
        for (auto& c : a.c) c = random_poly(rng, 0, 3, false);
        TwoForm<double> b;
        for (auto& c : b.c) c = random_poly(rng, 0, 3, false);
        std::array<double, 4> x0{u(rng), u(rng), u(rng), u(rng)};

        using State = std::array<double, 20>;
        auto rhs = [&](const State& s) {
            State d{};
            std::array<double, 4> x{s[0], s[1], s[2], s[3]};
            for (int i = 0; i < 4; ++i) d[i] = eval(v.c[i], x);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double acc = 0;
                    for (int m = 0; m < 4; ++m) acc += eval(v.c[i].derivative(m), x) * s[4 + 4 * m + j];
                    d[4 + 4 * i + j] = acc;
                }
            return d;
        };
        auto flow = [&](double h) {
            State s{};
            for (int i = 0; i < 4; ++i) s[i] = x0[i];
            for (int i = 0; i < 4; ++i) s[4 + 5 * i] = 1;
            int n = 8;
            double dt = h / n;
            for (int step = 0; step < n; ++step) {
                auto add = [&](const State& y, const State& d, double c) {
                    State r;
                    for (int i = 0; i < 20; ++i) r[i] = y[i] + c * d[i];
                    return r;
                };
                State k1 = rhs(s), k2 = rhs(add(s, k1, dt / 2)), k3 = rhs(add(s, k2, dt / 2)), k4 = rhs(add(s, k3, dt));
                for (int i = 0; i < 20; ++i) s[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            }
            return s;
        };
        auto pull_one = [&](const State& s) {
            std::array<double, 4> y{s[0], s[1], s[2], s[3]}, r{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) r[i] += eval(a.c[j], y) * s[4 + 4 * j + i];
            return r;
        };
        auto pull_two = [&](const State& s) {
            std::array<double, 4> y{s[0], s[1], s[2], s[3]};
            double full[4][4] = {};
            for (int p = 0; p < 6; ++p) {
                auto [i, j] = kPairs[p];
                double c = eval(b.c[p], y);
                full[i][j] = c;
                full[j][i] = -c;
            }
            std::array<double, 6> r{};
            for (int p = 0; p < 6; ++p) {
                auto [i, k2] = kPairs[p];
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l) r[p] += full[j][l] * s[4 + 4 * j + i] * s[4 + 4 * l + k2];
            }
            return r;
        };
        double h = 1e-4;
        State fp = flow(h), fm = flow(-h);
        auto la = lie_derivative(v, a);
        auto p1 = pull_one(fp), m1 = pull_one(fm);
        for (int i = 0; i < 4; ++i) CHECK(std::fabs((p1[i] - m1[i]) / (2 * h) - eval(la.c[i], x0)) <= 1e-6);
        auto lb = lie_derivative(v, b);
        auto p2 = pull_two(fp), m2 = pull_two(fm);
        for (int p = 0; p < 6; ++p) CHECK(std::fabs((p2[p] - m2[p]) / (2 * h) - eval(lb.c[p], x0)) <= 1e-6);
    }
}

TEST_CASE("pruning is idempotent and dump lists monomials")
{
    Poly p = var(0) * 2.0 + var(3) * var(3) * 1e-20;
    p.prune();
    std::string once = dump(p);
    p.prune();
    CHECK(dump(p) == once);
    CHECK(once == "2 * q1^1 q2^0 p1^0 p2^0\n");
}
