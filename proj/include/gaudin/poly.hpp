#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

inline constexpr int kMaxDegree = 8;
inline constexpr int kVars = 4;  // q1 q2 p1 p2

using Exponent = std::array<int, kVars>;

// all exponents of total degree <= kMaxDegree, graded; index tables for products
class MonomialTable {
public:
    static const MonomialTable& get();

    int size() const { return static_cast<int>(exps_.size()); }
    // number of monomials of degree <= d
    int count(int d) const { return begin_[d + 1]; }
    int begin(int d) const { return begin_[d]; }
    const Exponent& exp(int i) const { return exps_[i]; }
    int degree(int i) const { return deg_[i]; }
    int index(const Exponent& e) const;
    int product(int i, int j) const { return mul_[i * size() + j]; }
    // index of e - unit(var), or -1
    int lower(int i, int var) const { return low_[i * kVars + var]; }

private:
    MonomialTable();
    std::vector<Exponent> exps_;
    std::vector<int> deg_, begin_, lookup_, mul_, low_;
};

template <class T>
class TruncatedPolynomial {
public:
    explicit TruncatedPolynomial(int max_degree = kMaxDegree)
        : md_(std::clamp(max_degree, 0, kMaxDegree)), c_(MonomialTable::get().count(md_), T(0))
    {
    }

    static TruncatedPolynomial constant(const T& v, int md = kMaxDegree)
    {
        TruncatedPolynomial p(md);
        p.c_[0] = v;
        return p;
    }

    static TruncatedPolynomial variable(int var, int md = kMaxDegree)
    {
        TruncatedPolynomial p(md);
        Exponent e{0, 0, 0, 0};
        e[var] = 1;
        p.set(e, T(1));
        return p;
    }

    static TruncatedPolynomial monomial(const Exponent& e, const T& v, int md = kMaxDegree)
    {
        TruncatedPolynomial p(md);
        p.set(e, v);
        return p;
    }

    int max_degree() const { return md_; }
    int terms() const { return static_cast<int>(c_.size()); }
    const T& operator[](int i) const { return c_[i]; }
    T& operator[](int i) { return c_[i]; }

    T coeff(const Exponent& e) const
    {
        int i = MonomialTable::get().index(e);
        return (i < 0 || i >= terms()) ? T(0) : c_[i];
    }

    void set(const Exponent& e, const T& v)
    {
        int i = MonomialTable::get().index(e);
        if (i >= 0 && i < terms()) c_[i] = v;
    }

    TruncatedPolynomial with_max_degree(int md) const
    {
        TruncatedPolynomial r(md);
        int n = std::min(r.terms(), terms());
        for (int i = 0; i < n; ++i) r.c_[i] = c_[i];
        return r;
    }

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& o)
    {
        int n = std::min(terms(), o.terms());
        for (int i = 0; i < n; ++i)
            if (o.c_[i] != 0) c_[i] += o.c_[i];
        return *this;
    }

    TruncatedPolynomial& operator-=(const TruncatedPolynomial& o)
    {
        int n = std::min(terms(), o.terms());
        for (int i = 0; i < n; ++i)
            if (o.c_[i] != 0) c_[i] -= o.c_[i];
        return *this;
    }

    TruncatedPolynomial& operator*=(const T& s)
    {
        for (auto& x : c_)
            if (x != 0) x *= s;
        return *this;
    }

    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a += b; }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) { return a -= b; }
    friend TruncatedPolynomial operator*(TruncatedPolynomial a, const T& s) { return a *= s; }
    friend TruncatedPolynomial operator*(const T& s, TruncatedPolynomial a) { return a *= s; }
    TruncatedPolynomial operator-() const { return *this * T(-1); }

    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b)
    {
        const auto& tab = MonomialTable::get();
        TruncatedPolynomial r(std::min(a.md_, b.md_));
        std::vector<int> nb;
        nb.reserve(b.terms());
        for (int j = 0; j < b.terms(); ++j)
            if (b.c_[j] != 0) nb.push_back(j);
        for (int i = 0; i < a.terms(); ++i) {
            if (a.c_[i] == 0) continue;
            int room = r.md_ - tab.degree(i);
            for (int j : nb) {
                if (tab.degree(j) > room) break;
                r.c_[tab.product(i, j)] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedPolynomial derivative(int var) const
    {
        const auto& tab = MonomialTable::get();
        TruncatedPolynomial r(md_);
        for (int i = 0; i < terms(); ++i) {
            if (c_[i] == 0) continue;
            int e = tab.exp(i)[var];
            if (e == 0) continue;
            r.c_[tab.lower(i, var)] += c_[i] * T(e);
        }
        return r;
    }

    TruncatedPolynomial homogeneous(int d) const
    {
        const auto& tab = MonomialTable::get();
        TruncatedPolynomial r(md_);
        if (d > md_ || d < 0) return r;
        for (int i = tab.begin(d); i < tab.begin(d + 1); ++i) r.c_[i] = c_[i];
        return r;
    }

    TruncatedPolynomial truncated(int d) const
    {
        const auto& tab = MonomialTable::get();
        TruncatedPolynomial r = *this;
        for (int i = tab.count(std::min(d, md_)); i < terms(); ++i) r.c_[i] = T(0);
        return r;
    }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // -1 for the zero polynomial
    int lowest_degree() const
    {
        const auto& tab = MonomialTable::get();
        for (int i = 0; i < terms(); ++i)
            if (c_[i] != 0) return tab.degree(i);
        return -1;
    }

    int highest_degree() const
    {
        const auto& tab = MonomialTable::get();
        for (int i = terms() - 1; i >= 0; --i)
            if (c_[i] != 0) return tab.degree(i);
        return -1;
    }

    double max_abs() const
    {
        double m = 0;
        for (const auto& x : c_) m = std::max(m, std::fabs(to_double(x)));
        return m;
    }

    // drops coefficients below rel * max; only meaningful for floating scalars
    void prune(double rel = 1e-14)
    {
        if constexpr (std::is_floating_point_v<T>) {
            double cut = rel * max_abs();
            for (auto& x : c_)
                if (std::fabs(x) < cut) x = 0;
        }
    }

    T evaluate(const std::array<T, kVars>& x) const
    {
        const auto& tab = MonomialTable::get();
        T s(0);
        for (int i = 0; i < terms(); ++i) {
            if (c_[i] == 0) continue;
            T m = c_[i];
            for (int v = 0; v < kVars; ++v)
                for (int k = 0; k < tab.exp(i)[v]; ++k) m *= x[v];
            s += m;
        }
        return s;
    }

    // substitution (q1,q2,p1,p2) -> (p1,p2,-q1,-q2)
    TruncatedPolynomial swap_qp() const
    {
        const auto& tab = MonomialTable::get();
        TruncatedPolynomial r(md_);
        for (int i = 0; i < terms(); ++i) {
            if (c_[i] == 0) continue;
            const auto& e = tab.exp(i);
            Exponent f{e[2], e[3], e[0], e[1]};
            T v = c_[i];
            if ((e[2] + e[3]) % 2) v = -v;
            r.c_[tab.index(f)] += v;
        }
        return r;
    }

private:
    int md_;
    std::vector<T> c_;
};

using Poly = TruncatedPolynomial<double>;

template <class T>
TruncatedPolynomial<T> poisson_bracket(const TruncatedPolynomial<T>& f, const TruncatedPolynomial<T>& g)
{
    TruncatedPolynomial<T> r(std::min(f.max_degree(), g.max_degree()));
    for (int i = 0; i < 2; ++i) {
        r += f.derivative(i) * g.derivative(i + 2);
        r -= f.derivative(i + 2) * g.derivative(i);
    }
    return r;
}

template <class T>
struct HilbertGenerators {
    TruncatedPolynomial<T> S, M, N, T_;
};

template <class T>
HilbertGenerators<T> hilbert_generators(int md = kMaxDegree)
{
    if (md < 2) throw DomainError("hilbert generators need max_degree >= 2");
    using P = TruncatedPolynomial<T>;
    P q1 = P::variable(0, md), q2 = P::variable(1, md), p1 = P::variable(2, md), p2 = P::variable(3, md);
    T half = T(1) / T(2);
    return {q1 * p2 - q2 * p1, (q1 * q1 + q2 * q2) * half, (p1 * p1 + p2 * p2) * half, q1 * p1 + q2 * p2};
}

// exp(ad_G) H with ad_G H = {G, H}
template <class T>
TruncatedPolynomial<T> lie_transform(const TruncatedPolynomial<T>& H, const TruncatedPolynomial<T>& G)
{
    int lo = G.lowest_degree();
    if (lo < 0) return H;
    if (lo <= 2) throw DomainError("lie_transform generator must start at degree >= 3");
    TruncatedPolynomial<T> out = H, term = H;
    for (int n = 1; n <= 2 * kMaxDegree; ++n) {
        term = poisson_bracket(G, term) * (T(1) / T(n));
        if (term.is_zero()) break;
        out += term;
    }
    return out;
}

template <class T>
std::string dump(const TruncatedPolynomial<T>& p)
{
    const auto& tab = MonomialTable::get();
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < p.terms(); ++i) {
        if (p[i] == 0) continue;
        const auto& e = tab.exp(i);
        os << p[i] << " * q1^" << e[0] << " q2^" << e[1] << " p1^" << e[2] << " p2^" << e[3] << "\n";
    }
    return os.str();
}

} // namespace gaudin
