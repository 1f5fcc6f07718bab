#include "gaudin/normal_form.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "gaudin/closed_forms_data.hpp"
#include "gaudin/forms.hpp"
#include "gaudin/linsolve.hpp"

namespace gaudin {

std::string to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }

Side parse_side(const std::string& s)
{
    if (s == "plus" || s == "+") return Side::plus;
    if (s == "minus" || s == "-") return Side::minus;
    throw DomainError("unknown side '" + s + "'");
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Supercritical: return "Supercritical";
    case Verdict::Subcritical: return "Subcritical";
    case Verdict::Degenerate: return "Degenerate";
    case Verdict::PossiblyHigherDegenerate: return "PossiblyHigherDegenerate";
    case Verdict::NotAtBifurcation: return "NotAtBifurcation";
    }
    return "?";
}

std::string to_string(CriticalitySource s)
{
    switch (s) {
    case CriticalitySource::LieSeries: return "lie-series";
    case CriticalitySource::ClosedForm: return "closed-form";
    case CriticalitySource::Appendix: return "appendix";
    }
    return "?";
}

CriticalitySource parse_source(const std::string& s)
{
    if (s == "lie-series") return CriticalitySource::LieSeries;
    if (s == "closed-form") return CriticalitySource::ClosedForm;
    if (s == "appendix") return CriticalitySource::Appendix;
    throw DomainError("unknown source '" + s + "'");
}

template <class T>
T threshold_value(const ParamsT<T>& p, FixedPointTag fp, Side side)
{
    T w = p.w;
    if (fp == FixedPointTag::m2) w = -w;
    else if (fp != FixedPointTag::m0) throw DomainError("thresholds exist only for m0 and m2");
    T c = T(2) * p.t3 * p.rR;
    if (side == Side::minus) c = -c;
    return (w * (p.t1 * p.R2 - p.t2 * p.R1) + c) / (p.R1 + p.R2);
}

namespace {

template <class T>
using P = TruncatedPolynomial<T>;

// sqrt(1 - u) with u of degree 2, to total degree md
template <class T>
P<T> sqrt_one_minus(const P<T>& u, int md)
{
    P<T> out = P<T>::constant(T(1), md), pw = P<T>::constant(T(1), md);
    T b(1);
    for (int n = 1; 2 * n <= md; ++n) {
        b = b * (T(1) / T(2) - T(n - 1)) / T(n);
        pw = pw * u;
        T s = (n % 2) ? T(-b) : b;
        out += pw * s;
    }
    return out;
}

struct BasisEntry {
    std::array<int, 4> e;  // powers of S, M, N, T
};

std::vector<BasisEntry> basis(int deg)
{
    int k = deg / 2;
    std::vector<BasisEntry> out;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k - a; ++b)
            for (int c = 0; c <= k - a - b; ++c) {
                int d = k - a - b - c;
                if (b > 0 && c > 0) continue;
                out.push_back({{a, b, c, d}});
            }
    return out;
}

bool is_bad(const BasisEntry& b) { return b.e[2] > 0 || b.e[3] > 0; }

template <class T>
struct Decomposer {
    int md;
    HilbertGenerators<T> g;
    std::map<int, std::vector<BasisEntry>> bases;
    std::map<int, std::vector<P<T>>> polys;

    explicit Decomposer(int md_) : md(md_), g(hilbert_generators<T>(md_))
    {
        for (int d = 2; d <= md; d += 2) {
            bases[d] = basis(d);
            for (auto& be : bases[d]) {
                P<T> p = P<T>::constant(T(1), md);
                for (int i = 0; i < be.e[0]; ++i) p = p * g.S;
                for (int i = 0; i < be.e[1]; ++i) p = p * g.M;
                for (int i = 0; i < be.e[2]; ++i) p = p * g.N;
                for (int i = 0; i < be.e[3]; ++i) p = p * g.T_;
                polys[d].push_back(p);
            }
        }
    }

    int find(int deg, std::array<int, 4> e) const
    {
        const auto& b = bases.at(deg);
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i].e == e) return static_cast<int>(i);
        return -1;
    }

    // coefficients of a degree-deg homogeneous polynomial in the S,M,N,T basis
    std::vector<T> operator()(const P<T>& h, int deg, double* resid = nullptr) const
    {
        const auto& tab = MonomialTable::get();
        const auto& ps = polys.at(deg);
        int n = static_cast<int>(ps.size());
        std::vector<std::vector<T>> A;
        std::vector<T> rhs;
        for (int i = tab.begin(deg); i < tab.begin(deg + 1); ++i) {
            std::vector<T> row(n);
            for (int k = 0; k < n; ++k) row[k] = ps[k][i];
            A.push_back(row);
            rhs.push_back(h[i]);
        }
        auto s = solve_linear(A, rhs);
        if (resid) *resid = s.residual;
        if constexpr (!std::is_floating_point_v<T>) {
            if (!s.consistent) throw NumericalFailure("polynomial is not S-invariant");
        }
        return s.x;
    }
};

template <class T>
T eval_formula(const std::vector<detail::MonoTerm>& terms, const ParamsT<T>& p)
{
    std::array<T, 6> v{p.w, p.t0, p.t1, p.t2, p.t3, p.t4};
    T s(0);
    for (const auto& t : terms) {
        T m = T(t.coeff);
        int a = t.e[0], b = t.e[1];
        if ((a - b) % 2) throw NumericalFailure("closed form with odd radical parity");
        for (int i = 0; i < a / 2; ++i) m *= p.R1;
        for (int i = 0; i < b / 2; ++i) m *= p.R2;
        if (a % 2) m *= p.rR;
        for (int k = 0; k < 6; ++k)
            for (int i = 0; i < t.e[k + 2]; ++i) m *= v[k];
        s += m;
    }
    return s;
}

template <class T>
T eval_named(const std::string& name, const ParamsT<T>& p)
{
    for (const auto& f : detail::closed_form_table()) {
        if (f.name != name) continue;
        T d = eval_formula(f.den, p);
        if (near_zero(d, 1e-12)) throw DomainError("singular configuration in closed form " + name);
        return eval_formula(f.num, p) / d;
    }
    throw NumericalFailure("missing closed form " + name);
}

} // namespace

template <class T>
TruncatedPolynomial<T> chart_hamiltonian(const ParamsT<T>& p, int md)
{
    auto [zp, zm] = zetas<T>(md);
    P<T> u1 = zp * (T(1) / (T(2) * p.R1));
    P<T> u2 = zm * (T(1) / (T(2) * p.R2));
    P<T> xi = sqrt_one_minus(u1, md);
    P<T> eta = -sqrt_one_minus(u2, md);
    P<T> q1 = P<T>::variable(0, md), q2 = P<T>::variable(1, md), p1 = P<T>::variable(2, md), p2 = P<T>::variable(3, md);
    P<T> s = xi + eta;
    P<T> H = s * s * p.t0 + (xi * p.t1 + eta * p.t2) * p.w +
             (p1 * p1 + p2 * p2 - q1 * q1 - q2 * q2) * (p.t3 / (T(2) * p.rR)) + xi * eta * p.t4;
    H[0] = T(0);
    return H;
}

template <class T>
LieSeriesResultT<T> lie_series_raw(const ParamsT<T>& p, Side side, int degree)
{
    if (p.t3 == 0) throw DomainError("t3 = 0 is not allowed for the normal form");
    const int md = std::max(6, std::min(degree, kMaxDegree));
    LieSeriesResultT<T> out;

    auto jet = gaudin_omega_jet<T>(p.R1, p.R2, md);
    auto fl = flatten(jet);
    P<T> H = chart_hamiltonian(p, md);
    H = flow_pullback(fl.X, H);
    H = flow_pullback(fl.Y, H);
    H = H.truncated(6);
    if (side == Side::minus) H = H.swap_qp();

    for (int d = 1; d <= 6; d += 2) out.odd_residual = std::max(out.odd_residual, H.homogeneous(d).max_abs());
    P<T> H2 = H.homogeneous(2), H4 = H.homogeneous(4), H6 = H.homogeneous(6);

    Decomposer<T> dec(6);
    const auto& g = dec.g;
    double r = 0;
    auto d2 = dec(H2, 2, &r);
    out.t_residual = std::fabs(to_double(d2[dec.find(2, {0, 0, 0, 1})]));
    out.residual = std::max(out.residual, r);

    auto solve_stage = [&](const P<T>& target, const std::vector<P<T>>& gens, int deg, std::vector<T>& coef) {
        auto base = dec(target, deg, &r);
        out.residual = std::max(out.residual, r);
        std::vector<std::vector<T>> cols;
        for (auto& G : gens) cols.push_back(dec(poisson_bracket(G, H2), deg));
        std::vector<std::vector<T>> A;
        std::vector<T> rhs;
        const auto& bs = dec.bases.at(deg);
        for (size_t i = 0; i < bs.size(); ++i) {
            if (!is_bad(bs[i])) continue;
            std::vector<T> row;
            for (auto& c : cols) row.push_back(c[i]);
            A.push_back(row);
            rhs.push_back(-base[i]);
        }
        auto s = solve_linear(A, rhs);
        coef = s.x;
        P<T> gen(md);
        for (size_t k = 0; k < gens.size(); ++k) gen += gens[k] * coef[k];
        return gen;
    };

    std::vector<T> e;
    P<T> E = solve_stage(H4, {g.M * g.T_, g.N * g.T_, g.S * g.T_}, 4, e);
    P<T> H4h = H4 + poisson_bracket(E, H2);
    P<T> EH2 = poisson_bracket(E, H2);
    P<T> H6p = H6 + poisson_bracket(E, H4) + poisson_bracket(E, EH2) * (T(1) / T(2));
    std::vector<T> f;
    P<T> F = solve_stage(H6p, {g.M * g.M * g.T_, g.M * g.S * g.T_, g.N * g.N * g.T_, g.N * g.S * g.T_,
                               g.S * g.S * g.T_, g.T_ * g.T_ * g.T_}, 6, f);
    P<T> H6h = H6p + poisson_bracket(F, H2);

    auto d4 = dec(H4h, 4, &r);
    out.residual = std::max(out.residual, r);
    auto d6 = dec(H6h, 6, &r);
    out.residual = std::max(out.residual, r);
    for (int deg : {4, 6}) {
        const auto& bs = dec.bases.at(deg);
        const auto& dd = deg == 4 ? d4 : d6;
        for (size_t i = 0; i < bs.size(); ++i)
            if (is_bad(bs[i])) out.residual = std::max(out.residual, std::fabs(to_double(dd[i])));
    }

    auto& a = out.raw.a;
    a[1] = d2[dec.find(2, {1, 0, 0, 0})];
    out.raw.b = d2[dec.find(2, {0, 0, 1, 0})];
    a[2] = d2[dec.find(2, {0, 1, 0, 0})];
    a[3] = d4[dec.find(4, {0, 2, 0, 0})];
    a[4] = d4[dec.find(4, {1, 1, 0, 0})];
    a[5] = d4[dec.find(4, {2, 0, 0, 0})];
    a[6] = d6[dec.find(6, {0, 3, 0, 0})];
    a[7] = d6[dec.find(6, {1, 2, 0, 0})];
    a[8] = d6[dec.find(6, {2, 1, 0, 0})];
    a[9] = d6[dec.find(6, {3, 0, 0, 0})];
    for (int k = 0; k < 3; ++k) out.gen.e[k] = e[k];
    for (int k = 0; k < 6; ++k) out.gen.f[k] = f[k];
    return out;
}

template <class T>
RawCoefficientsT<T> eval_raw_coefficients(const ParamsT<T>& p)
{
    RawCoefficientsT<T> r;
    r.b = eval_named("b", p);
    for (int i = 1; i <= 9; ++i) r.a[i] = eval_named("a" + std::to_string(i), p);
    return r;
}

template <class T>
GeneratingCoefficientsT<T> eval_generating_coefficients(const ParamsT<T>& p)
{
    GeneratingCoefficientsT<T> g;
    for (int i = 0; i < 3; ++i) g.e[i] = eval_named("e" + std::to_string(i + 1), p);
    for (int i = 0; i < 6; ++i) g.f[i] = eval_named("f" + std::to_string(i + 1), p);
    return g;
}

template double threshold_value(const ParamsT<double>&, FixedPointTag, Side);
template Rational threshold_value(const ParamsT<Rational>&, FixedPointTag, Side);
template TruncatedPolynomial<double> chart_hamiltonian(const ParamsT<double>&, int);
template TruncatedPolynomial<Rational> chart_hamiltonian(const ParamsT<Rational>&, int);
template LieSeriesResultT<double> lie_series_raw(const ParamsT<double>&, Side, int);
template LieSeriesResultT<Rational> lie_series_raw(const ParamsT<Rational>&, Side, int);
template RawCoefficientsT<double> eval_raw_coefficients(const ParamsT<double>&);
template RawCoefficientsT<Rational> eval_raw_coefficients(const ParamsT<Rational>&);
template GeneratingCoefficientsT<double> eval_generating_coefficients(const ParamsT<double>&);
template GeneratingCoefficientsT<Rational> eval_generating_coefficients(const ParamsT<Rational>&);

RawCoefficients eval_raw_coefficients(const ModelParams& p) { return eval_raw_coefficients(as_double(p)); }
GeneratingCoefficients eval_generating_coefficients(const ModelParams& p) { return eval_generating_coefficients(as_double(p)); }

ParamsT<double> to_m0_frame(const ModelParams& p, FixedPointTag fp)
{
    if (fp == FixedPointTag::m0) return as_double(p);
    if (fp == FixedPointTag::m2) return as_double(rotate_x(p));
    throw DomainError("normal forms exist only at m0 and m2");
}

ScaledCoefficients scale(const RawCoefficients& raw, Side side, FixedPointTag fp)
{
    if (std::fabs(raw.b) <= 1e-12) throw DomainError("N coefficient b vanishes; cannot normalize");
    ScaledCoefficients s;
    s.side = side;
    s.fp = fp;
    for (int i = 1; i <= 9; ++i) s.a[i] = raw.a[i] / raw.b;
    return s;
}

ScaledCoefficients lie_series_normal_form(const ModelParams& p, FixedPointTag fp, Side side, int degree,
                                          LieSeriesResultT<double>* detail)
{
    auto q = to_m0_frame(p, fp);
    auto r = lie_series_raw(q, side, degree);
    if (r.residual > 1e-8)
        throw NumericalFailure("normalization failure: residual non-(M,S) terms " + std::to_string(r.residual));
    if (detail) *detail = r;
    return scale(r.raw, side, fp);
}

double a3_closed_form(const ModelParams& p)
{
    require_t3_nonzero(p);
    double R1 = p.R1, R2 = p.R2, d2 = (R1 - R2) * (R1 - R2), rr = std::sqrt(R1 * R2);
    double num = 2 * d2 * (R1 + R2) * p.t0 + 2 * R1 * R2 * p.w * (R1 * p.t2 - R2 * p.t1) + d2 * rr * p.t3;
    return num / (8 * rr * R1 * R2 * (R1 + R2) * p.t3);
}

double a6_closed_form(const ModelParams& p)
{
    double R1 = p.R1, R2 = p.R2, d2 = (R1 - R2) * (R1 - R2);
    double num = d2 * (R1 * R2 * p.w * (R1 * (p.t1 + 2 * p.t2) - R2 * (2 * p.t1 + p.t2)) + (R1 + R2) * d2 * p.t0);
    double den = 384 * (R1 * R2) * (R1 * R2) * (R1 * R2 * p.w * (R1 * p.t2 - R2 * p.t1) + (R1 + R2) * d2 * p.t0);
    if (std::fabs(den) < 1e-14) throw DomainError("a6 closed form is singular here");
    return num / den;
}

double t3_degenerate(const ModelParams& p)
{
    double R1 = p.R1, R2 = p.R2, d2 = (R1 - R2) * (R1 - R2);
    if (d2 == 0) throw DomainError("t3 degeneracy locus needs R1 != R2");
    return -2 * ((R1 + R2) * d2 * p.t0 - p.w * R1 * R2 * (R2 * p.t1 - R1 * p.t2)) / (d2 * std::sqrt(R1 * R2));
}

Verdict verdict_from(double a3, double, bool zero3, bool zero6)
{
    if (!zero3) return a3 > 0 ? Verdict::Supercritical : Verdict::Subcritical;
    if (!zero6) return Verdict::Degenerate;
    return Verdict::PossiblyHigherDegenerate;
}

namespace {

bool zero_a3(double a3, double a6) { return std::fabs(a3) <= 1e-9 * std::max(1.0, std::fabs(a6)); }

} // namespace

Criticality classify_criticality(const ModelParams& p, FixedPointTag fp, Side side, CriticalitySource src,
                                 bool rational)
{
    require_t3_nonzero(p);
    if (fp != FixedPointTag::m0 && fp != FixedPointTag::m2)
        throw DomainError("criticality is defined only at m0 and m2");
    Criticality c;
    c.source = src;
    ModelParams at = p;
    at.t4 = threshold_value(as_double(p), fp, side);
    c.t4 = at.t4;
    ModelParams frame = fp == FixedPointTag::m2 ? rotate_x(at) : at;

    // collision frequency at the threshold; zero means no Krein collision at +-i alpha
    double alpha = ((frame.w * frame.t1 - frame.t4) * frame.R2 + (frame.w * frame.t2 + frame.t4) * frame.R1) /
                   (2 * frame.R1 * frame.R2);
    if (std::fabs(alpha) <= 1e-12) {
        c.verdict = Verdict::NotAtBifurcation;
        c.note = "eigenvalues collide at zero";
        return c;
    }

    if (src == CriticalitySource::ClosedForm) {
        if (fp == FixedPointTag::m0 && side == Side::plus) {
            c.a3 = a3_closed_form(at);
            bool z3 = zero_a3(c.a3, 0);
            if (z3) {
                c.a6 = a6_closed_form(at);
                c.verdict = verdict_from(c.a3, c.a6, true, std::fabs(c.a6) <= 1e-9);
            } else {
                c.verdict = verdict_from(c.a3, 0, false, false);
            }
            c.note = "printed closed form (equals twice the N-normalized M^2 coefficient)";
            return c;
        }
        c.source = CriticalitySource::LieSeries;
        c.note = "closed forms only hold at the plus threshold of m0; routed to lie-series";
    }
    if (c.source == CriticalitySource::Appendix && side == Side::minus) {
        c.source = CriticalitySource::LieSeries;
        c.note = "appendix formulas only cover the plus threshold; routed to lie-series";
    }

    std::optional<ParamsT<Rational>> ex;
    if (rational) {
        ModelParams base = fp == FixedPointTag::m2 ? rotate_x(p) : p;
        ex = as_exact(base);
        if (ex) ex->t4 = threshold_value(*ex, FixedPointTag::m0, side);
    }
    if (ex) {
        RawCoefficientsT<Rational> raw = c.source == CriticalitySource::Appendix
                                             ? eval_raw_coefficients(*ex)
                                             : lie_series_raw(*ex, side).raw;
        if (raw.b == 0) throw DomainError("N coefficient b vanishes; cannot normalize");
        Rational a3 = raw.a[3] / raw.b, a6 = raw.a[6] / raw.b;
        c.a3 = to_double(a3);
        c.a6 = to_double(a6);
        c.exact = true;
        c.verdict = verdict_from(c.a3, c.a6, a3 == 0, a6 == 0);
        return c;
    }
    RawCoefficients raw;
    if (c.source == CriticalitySource::Appendix) {
        raw = eval_raw_coefficients(as_double(frame));
    } else {
        auto r = lie_series_raw(as_double(frame), side);
        if (r.residual > 1e-8) throw NumericalFailure("normalization failure");
        raw = r.raw;
    }
    auto s = scale(raw, side, fp);
    c.a3 = s.a[3];
    c.a6 = s.a[6];
    bool z3 = zero_a3(c.a3, c.a6);
    c.verdict = verdict_from(c.a3, c.a6, z3, std::fabs(c.a6) <= 1e-9);
    return c;
}

} // namespace gaudin
