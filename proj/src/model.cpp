#include "gaudin/model.hpp"

#include <cmath>
#include <sstream>

namespace gaudin {

Rational to_rational(double x, long long maxden, double tol)
{
    // continued fraction convergents
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (std::fabs(a) > 9e15) break;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > maxden) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol * std::max(1.0, std::fabs(x)))
            return Rational(h1, k1);
        double frac = r - a;
        if (frac == 0) break;
        r = 1.0 / frac;
    }
    if (k1 != 0 && std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol * std::max(1.0, std::fabs(x)))
        return Rational(h1, k1);
    std::ostringstream os;
    os.precision(17);
    os << "value " << x << " has no small rational representation";
    throw DomainError(os.str());
}

ParamsT<double> as_double(const ModelParams& p)
{
    return {p.R1, p.R2, std::sqrt(p.R1 * p.R2), p.w, p.t0, p.t1, p.t2, p.t3, p.t4};
}

static std::optional<Rational> rational_sqrt(const Rational& x)
{
    using boost::multiprecision::cpp_int;
    if (x < 0) return std::nullopt;
    cpp_int n = numerator(x), d = denominator(x);
    cpp_int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<ParamsT<Rational>> as_exact(const ModelParams& p)
{
    try {
        ParamsT<Rational> e;
        e.R1 = to_rational(p.R1);
        e.R2 = to_rational(p.R2);
        e.w = to_rational(p.w);
        e.t0 = to_rational(p.t0);
        e.t1 = to_rational(p.t1);
        e.t2 = to_rational(p.t2);
        e.t3 = to_rational(p.t3);
        e.t4 = to_rational(p.t4);
        auto r = rational_sqrt(e.R1 * e.R2);
        if (!r) return std::nullopt;
        e.rR = *r;
        return e;
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

ModelParams to_model(const ParamsT<double>& p)
{
    return {p.R1, p.R2, p.w, p.t0, p.t1, p.t2, p.t3, p.t4};
}

ModelParams to_model(const ParamsT<Rational>& p)
{
    return {to_double(p.R1), to_double(p.R2), to_double(p.w),  to_double(p.t0),
            to_double(p.t1), to_double(p.t2), to_double(p.t3), to_double(p.t4)};
}

void require_t3_nonzero(const ModelParams& p)
{
    if (p.t3 == 0) throw DomainError("t3 = 0 is not allowed for this operation");
}

PhasePoint PhasePoint::make(double x1, double y1, double z1, double x2, double y2, double z2)
{
    double n1 = std::sqrt(x1 * x1 + y1 * y1 + z1 * z1);
    double n2 = std::sqrt(x2 * x2 + y2 * y2 + z2 * z2);
    if (std::fabs(n1 - 1) > 1e-9 || std::fabs(n2 - 1) > 1e-9)
        throw DomainError("point is not on the sphere product");
    return {x1 / n1, y1 / n1, z1 / n1, x2 / n2, y2 / n2, z2 / n2};
}

PhasePoint PhasePoint::from_angles(double th1, double ph1, double th2, double ph2)
{
    return {std::sin(th1) * std::cos(ph1), std::sin(th1) * std::sin(ph1), std::cos(th1),
            std::sin(th2) * std::cos(ph2), std::sin(th2) * std::sin(ph2), std::cos(th2)};
}

FixedPoint fixed_point(FixedPointTag tag)
{
    switch (tag) {
    case FixedPointTag::m0: return {tag, {0, 0, 1, 0, 0, -1}, 1, -1};
    case FixedPointTag::m1: return {tag, {0, 0, -1, 0, 0, -1}, -1, -1};
    case FixedPointTag::m2: return {tag, {0, 0, -1, 0, 0, 1}, -1, 1};
    case FixedPointTag::m3: return {tag, {0, 0, 1, 0, 0, 1}, 1, 1};
    }
    throw DomainError("bad fixed point tag");
}

std::string to_string(FixedPointTag tag)
{
    static const char* n[] = {"m0", "m1", "m2", "m3"};
    return n[static_cast<int>(tag)];
}

FixedPointTag parse_fixed_point(const std::string& s)
{
    if (s == "m0") return FixedPointTag::m0;
    if (s == "m1") return FixedPointTag::m1;
    if (s == "m2") return FixedPointTag::m2;
    if (s == "m3") return FixedPointTag::m3;
    throw DomainError("unknown fixed point '" + s + "'");
}

double eval_J(const ModelParams& p, const PhasePoint& q) { return p.R1 * q.z1 + p.R2 * q.z2; }

double eval_H(const ModelParams& p, const PhasePoint& q)
{
    double s = q.z1 + q.z2;
    return p.t0 * s * s + p.w * (p.t1 * q.z1 + p.t2 * q.z2) + p.t3 * (q.x1 * q.x2 + q.y1 * q.y2) +
           p.t4 * q.z1 * q.z2;
}

ModelParams from_rational(double w, double t1, double t2, const SpectralParams& sp, double R1,
                          double R2)
{
    if (sp.lambda1 == sp.lambda2) throw DomainError("spectral parameters must differ");
    double t = (t1 - t2) / (sp.lambda1 - sp.lambda2);
    return {R1, R2, w, 0, t1, t2, t, t};
}

ModelParams from_trigonometric(double t0, double t1, double t2, const SpectralParams& sp,
                               double R1, double R2)
{
    double d = sp.lambda1 - sp.lambda2;
    double s = std::sin(d);
    if (std::fabs(s) < 1e-14) throw DomainError("sin(lambda1 - lambda2) vanishes");
    double c = std::cos(d);
    return {R1, R2, 0, t0, t1, t2, (t1 - t2) / s, (t1 - t2) * c / s};
}

ReducedInvariants reduce(const ModelParams& p, const PhasePoint& q)
{
    ReducedInvariants r;
    r.j = p.R1 * q.z1 + p.R2 * q.z2;
    r.K = p.R1 * q.z1 - p.R2 * q.z2;
    r.xi = q.x1 * q.x2 + q.y1 * q.y2 + q.z1 * q.z2;
    r.sigma = q.x1 * q.y2 - q.y1 * q.x2;
    return r;
}

double invariants_residual(const ModelParams& p, const ReducedInvariants& v)
{
    double jp = v.j + v.K, jm = v.j - v.K;
    double d = v.xi - jp * jm / (4 * p.R1 * p.R2);
    double lhs = v.sigma * v.sigma + d * d;
    double rhs = (1 - jp * jp / (4 * p.R1 * p.R1)) * (1 - jm * jm / (4 * p.R2 * p.R2));
    return lhs - rhs;
}

ModelParams rotate_x(const ModelParams& p)
{
    ModelParams q = p;
    q.w = -p.w;
    return q;
}

} // namespace gaudin
