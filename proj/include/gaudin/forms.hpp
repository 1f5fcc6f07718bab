#pragma once

#include <array>
#include <utility>

#include "gaudin/model.hpp"
#include "gaudin/poly.hpp"

namespace gaudin {

// wedge basis for two-forms: dq1^dq2, dq1^dp1, dq1^dp2, dq2^dp1, dq2^dp2, dp1^dp2
inline constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
// three-form basis: 012, 013, 023, 123
inline constexpr std::array<std::array<int, 3>, 4> kTriples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

inline int pair_index(int i, int j)
{
    for (int k = 0; k < 6; ++k)
        if (kPairs[k].first == i && kPairs[k].second == j) return k;
    return -1;
}

template <class T>
struct OneForm {
    std::array<TruncatedPolynomial<T>, 4> c;
    explicit OneForm(int md = kMaxDegree) : c{TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md)} {}
    bool is_zero() const { for (auto& x : c) if (!x.is_zero()) return false; return true; }
    double max_abs() const { double m = 0; for (auto& x : c) m = std::max(m, x.max_abs()); return m; }
};

template <class T>
struct VectorField {
    std::array<TruncatedPolynomial<T>, 4> c;
    explicit VectorField(int md = kMaxDegree) : c{TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md)} {}
    bool is_zero() const { for (auto& x : c) if (!x.is_zero()) return false; return true; }
};

template <class T>
struct TwoForm {
    std::array<TruncatedPolynomial<T>, 6> c;
    explicit TwoForm(int md = kMaxDegree)
    {
        for (auto& x : c) x = TruncatedPolynomial<T>(md);
    }
    bool is_zero() const { for (auto& x : c) if (!x.is_zero()) return false; return true; }
    double max_abs() const { double m = 0; for (auto& x : c) m = std::max(m, x.max_abs()); return m; }
    TwoForm homogeneous(int d) const { TwoForm r = *this; for (auto& x : r.c) x = x.homogeneous(d); return r; }
    TwoForm& operator+=(const TwoForm& o) { for (int k = 0; k < 6; ++k) c[k] += o.c[k]; return *this; }
    TwoForm& operator-=(const TwoForm& o) { for (int k = 0; k < 6; ++k) c[k] -= o.c[k]; return *this; }
    TwoForm& operator*=(const T& s) { for (auto& x : c) x *= s; return *this; }
};

template <class T>
struct ThreeForm {
    std::array<TruncatedPolynomial<T>, 4> c;
    explicit ThreeForm(int md = kMaxDegree) : c{TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md), TruncatedPolynomial<T>(md)} {}
    bool is_zero() const { for (auto& x : c) if (!x.is_zero()) return false; return true; }
    double max_abs() const { double m = 0; for (auto& x : c) m = std::max(m, x.max_abs()); return m; }
};

template <class T>
OneForm<T> exterior_derivative(const TruncatedPolynomial<T>& f)
{
    OneForm<T> r(f.max_degree());
    for (int i = 0; i < 4; ++i) r.c[i] = f.derivative(i);
    return r;
}

template <class T>
TwoForm<T> exterior_derivative(const OneForm<T>& a)
{
    TwoForm<T> r(a.c[0].max_degree());
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kPairs[k];
        r.c[k] = a.c[j].derivative(i) - a.c[i].derivative(j);
    }
    return r;
}

template <class T>
ThreeForm<T> exterior_derivative(const TwoForm<T>& b)
{
    ThreeForm<T> r(b.c[0].max_degree());
    for (int k = 0; k < 4; ++k) {
        auto [i, j, l] = kTriples[k];
        r.c[k] = b.c[pair_index(j, l)].derivative(i) - b.c[pair_index(i, l)].derivative(j) +
                 b.c[pair_index(i, j)].derivative(l);
    }
    return r;
}

template <class T>
TruncatedPolynomial<T> interior_product(const VectorField<T>& v, const OneForm<T>& a)
{
    TruncatedPolynomial<T> r(a.c[0].max_degree());
    for (int i = 0; i < 4; ++i) r += v.c[i] * a.c[i];
    return r;
}

template <class T>
OneForm<T> interior_product(const VectorField<T>& v, const TwoForm<T>& b)
{
    OneForm<T> r(b.c[0].max_degree());
    for (int k = 0; k < 6; ++k) {
        auto [i, j] = kPairs[k];
        if (b.c[k].is_zero()) continue;
        r.c[j] += v.c[i] * b.c[k];
        r.c[i] -= v.c[j] * b.c[k];
    }
    return r;
}

template <class T>
TwoForm<T> interior_product(const VectorField<T>& v, const ThreeForm<T>& g)
{
    TwoForm<T> r(g.c[0].max_degree());
    for (int k = 0; k < 4; ++k) {
        auto [i, j, l] = kTriples[k];
        if (g.c[k].is_zero()) continue;
        r.c[pair_index(j, l)] += v.c[i] * g.c[k];
        r.c[pair_index(i, l)] -= v.c[j] * g.c[k];
        r.c[pair_index(i, j)] += v.c[l] * g.c[k];
    }
    return r;
}

template <class T>
TruncatedPolynomial<T> lie_derivative(const VectorField<T>& v, const TruncatedPolynomial<T>& f)
{
    TruncatedPolynomial<T> r(f.max_degree());
    for (int i = 0; i < 4; ++i) r += v.c[i] * f.derivative(i);
    return r;
}

template <class T>
OneForm<T> lie_derivative(const VectorField<T>& v, const OneForm<T>& a)
{
    OneForm<T> r = exterior_derivative(interior_product(v, a));
    OneForm<T> s = interior_product(v, exterior_derivative(a));
    for (int i = 0; i < 4; ++i) r.c[i] += s.c[i];
    return r;
}

template <class T>
TwoForm<T> lie_derivative(const VectorField<T>& v, const TwoForm<T>& b)
{
    TwoForm<T> r = exterior_derivative(interior_product(v, b));
    r += interior_product(v, exterior_derivative(b));
    return r;
}

// exp(L_v) applied to a function or form; v must vanish to order >= 2
template <class T, class F>
F flow_pullback(const VectorField<T>& v, const F& x)
{
    F out = x, term = x;
    for (int n = 1; n <= 2 * kMaxDegree; ++n) {
        term = lie_derivative(v, term);
        if constexpr (std::is_same_v<F, TruncatedPolynomial<T>>) {
            term *= T(1) / T(n);
            if (term.is_zero()) break;
            out += term;
        } else {
            term *= T(1) / T(n);
            if (term.is_zero()) break;
            out += term;
        }
    }
    return out;
}

template <class T>
VectorField<T> radial_field(int md = kMaxDegree)
{
    VectorField<T> A(md);
    for (int i = 0; i < 4; ++i) A.c[i] = -TruncatedPolynomial<T>::variable(i, md);
    return A;
}

template <class T>
TwoForm<T> canonical_form(int md = kMaxDegree)
{
    TwoForm<T> w(md);
    w.c[pair_index(0, 2)] = TruncatedPolynomial<T>::constant(T(1), md);
    w.c[pair_index(1, 3)] = TruncatedPolynomial<T>::constant(T(1), md);
    return w;
}

// zeta_+ = (p2+q1)^2 + (p1-q2)^2, zeta_- = (p2-q1)^2 + (p1+q2)^2
template <class T>
std::pair<TruncatedPolynomial<T>, TruncatedPolynomial<T>> zetas(int md = kMaxDegree)
{
    using P = TruncatedPolynomial<T>;
    P q1 = P::variable(0, md), q2 = P::variable(1, md), p1 = P::variable(2, md), p2 = P::variable(3, md);
    P a = p2 + q1, b = p1 - q2, c = p2 - q1, d = p1 + q2;
    return {a * a + b * b, c * c + d * d};
}

// chi_{2n}^{+-} = zeta_-^n R1^n +- zeta_+^n R2^n
template <class T>
std::pair<TruncatedPolynomial<T>, TruncatedPolynomial<T>> chi(int n, const T& R1, const T& R2, int md = kMaxDegree)
{
    auto [zp, zm] = zetas<T>(md);
    using P = TruncatedPolynomial<T>;
    P a = P::constant(T(1), md), b = P::constant(T(1), md);
    T r1(1), r2(1);
    for (int k = 0; k < n; ++k) {
        a = a * zm;
        b = b * zp;
        r1 *= R1;
        r2 *= R2;
    }
    return {a * r1 + b * r2, a * r1 - b * r2};
}

// omega^0, omega^2, omega^4, omega^6 of the pulled-back area form at m0
template <class T>
std::array<TwoForm<T>, 4> gaudin_omega_jet(const T& R1, const T& R2, int md = kMaxDegree)
{
    std::array<TwoForm<T>, 4> jet{TwoForm<T>(md), TwoForm<T>(md), TwoForm<T>(md), TwoForm<T>(md)};
    jet[0] = canonical_form<T>(md);
    T cn(1);  // binom(2n,n)/4^n
    T pw(1);
    for (int n = 1; n <= 3 && 2 * n <= md; ++n) {
        cn = cn * T(2 * n - 1) / T(2 * n);
        pw *= T(2) * R1 * R2;
        auto [cp, cm] = chi<T>(n, R1, R2, md);
        T s = cn / (T(2) * pw);
        auto& w = jet[n];
        w.c[pair_index(0, 1)] = cm * s;
        w.c[pair_index(2, 3)] = cm * s;
        w.c[pair_index(0, 2)] = cp * s;
        w.c[pair_index(1, 3)] = cp * s;
    }
    return jet;
}

// solve iota_X omega0 = a for the canonical omega0
template <class T>
VectorField<T> sharp(const OneForm<T>& a)
{
    VectorField<T> X(a.c[0].max_degree());
    X.c[0] = a.c[2];
    X.c[1] = a.c[3];
    X.c[2] = -a.c[0];
    X.c[3] = -a.c[1];
    return X;
}

template <class T>
struct Flattening {
    VectorField<T> X, Y;
};

// primitives alpha^k = -iota_A omega^k/(k+2); X, Y as in the flattening proposition
template <class T>
Flattening<T> flatten(const std::array<TwoForm<T>, 4>& jet)
{
    int md = jet[0].c[0].max_degree();
    TwoForm<T> diff = jet[0];
    diff -= canonical_form<T>(md);
    if (!diff.is_zero()) throw DomainError("flatten expects the canonical constant part");
    // exact for rationals; floating jets pick up rounding in the mixed partials
    for (int k = 1; k <= 2; ++k) {
        double tol = std::is_floating_point_v<T> ? 1e-12 * std::max(1.0, jet[k].max_abs()) : 0.0;
        if (exterior_derivative(jet[k]).max_abs() > tol) throw DomainError("omega jet is not closed");
    }
    auto A = radial_field<T>(md);
    auto primitive = [&](const TwoForm<T>& w, int deg) {
        OneForm<T> a = interior_product(A, w);
        T s = T(-1) / T(deg + 2);
        for (auto& x : a.c) x *= s;
        return a;
    };
    OneForm<T> a2 = primitive(jet[1], 2), a4 = primitive(jet[2], 4);
    OneForm<T> m(md);
    for (int i = 0; i < 4; ++i) m.c[i] = -a2.c[i];
    VectorField<T> X = sharp(m);
    OneForm<T> iXw2 = interior_product(X, jet[1]);
    OneForm<T> r(md);
    for (int i = 0; i < 4; ++i) r.c[i] = -a4.c[i] - iXw2.c[i] * (T(1) / T(2));
    VectorField<T> Y = sharp(r);
    return {X, Y};
}

template <class T>
TwoForm<T> sum_jet(const std::array<TwoForm<T>, 4>& jet)
{
    TwoForm<T> s = jet[0];
    for (int k = 1; k < 4; ++k) s += jet[k];
    return s;
}

} // namespace gaudin
