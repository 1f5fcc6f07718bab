#include "gaudin/linear.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace gaudin {

std::string to_string(EigenClass c)
{
    switch (c) {
    case EigenClass::EllipticElliptic: return "elliptic-elliptic";
    case EigenClass::FocusFocus: return "focus-focus";
    case EigenClass::EllipticHyperbolic: return "elliptic-hyperbolic";
    case EigenClass::HyperbolicHyperbolic: return "hyperbolic-hyperbolic";
    case EigenClass::DegenerateCollision: return "degenerate";
    }
    return "?";
}

LinearizationMatrix linearize_at(const ModelParams& p, FixedPointTag tag)
{
    auto fp = fixed_point(tag);
    double s1 = fp.s1, s2 = fp.s2;
    double k1 = p.R1 / s1, k2 = p.R2 / s2;
    double c1 = -p.t0 * (s1 + s2) * s1 - p.w * p.t1 * s1 / 2 - p.t4 * s1 * s2 / 2;
    double c2 = -p.t0 * (s1 + s2) * s2 - p.w * p.t2 * s2 / 2 - p.t4 * s1 * s2 / 2;
    LinearizationMatrix L;
    L.fp = tag;
    L.A << 0, -2 * c1 / k1, 0, -p.t3 / k1,
           2 * c1 / k1, 0, p.t3 / k1, 0,
           0, -p.t3 / k2, 0, -2 * c2 / k2,
           p.t3 / k2, 0, 2 * c2 / k2, 0;
    L.Omega << 0, k1, 0, 0,
               -k1, 0, 0, 0,
               0, 0, 0, k2,
               0, 0, -k2, 0;
    return L;
}

std::pair<double, double> char_poly(const Mat4& A)
{
    return {-(A * A).trace() / 2, A.determinant()};
}

EigenClassification classify(const ModelParams& p, FixedPointTag fp)
{
    auto L = linearize_at(p, fp);
    EigenClassification out;
    Eigen::EigenSolver<Mat4> es(L.A, false);
    for (int i = 0; i < 4; ++i) out.eigenvalues[i] = es.eigenvalues()[i];
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    auto [pa, qa] = char_poly(L.A);
    double disc = pa * pa - 4 * qa;
    out.discriminant = disc;
    double sc = std::max({pa * pa, 4 * std::fabs(qa), 1e-300});
    if (std::fabs(disc) <= 1e-9 * sc) {
        out.cls = EigenClass::DegenerateCollision;
        return out;
    }
    if (disc < 0) {
        out.cls = EigenClass::FocusFocus;
        return out;
    }
    double r = std::sqrt(disc);
    double mu1 = (-pa - r) / 2, mu2 = (-pa + r) / 2;  // squared eigenvalues
    double z = 1e-9 * std::sqrt(sc);
    if (std::fabs(mu1) <= z || std::fabs(mu2) <= z) {
        out.cls = EigenClass::DegenerateCollision;
        return out;
    }
    int pos = (mu1 > 0) + (mu2 > 0);
    out.cls = pos == 0 ? EigenClass::EllipticElliptic : pos == 1 ? EigenClass::EllipticHyperbolic : EigenClass::HyperbolicHyperbolic;
    return out;
}

Thresholds thresholds(const ModelParams& p, FixedPointTag fp)
{
    require_t3_nonzero(p);
    auto q = as_double(p);
    Thresholds t;
    t.fp = fp;
    t.t4_minus = threshold_value(q, fp, Side::minus);
    t.t4_plus = threshold_value(q, fp, Side::plus);
    double rr = std::sqrt(p.R1 * p.R2);
    t.ff_window_realized = (p.R1 == p.R2 && p.w != 0 && p.t1 + p.t2 != 0) ||
                           ((p.R1 - p.R2) * p.t3 > std::fabs(p.w * (p.t1 + p.t2) * rr));
    return t;
}

std::pair<Mat4, Mat4> jordan_chevalley(const Mat4& A, double alpha)
{
    auto [pa, qa] = char_poly(A);
    double a2 = alpha * alpha;
    double dist = std::fabs(pa - 2 * a2) + std::fabs(qa - a2 * a2);
    if (dist > 1e-8 * (1 + a2 * a2))
        throw PreconditionError("characteristic polynomial is not (l^2+alpha^2)^2, distance " + std::to_string(dist));
    Mat4 I = Mat4::Identity();
    // p(A) = A^2 + alpha^2 is nilpotent here, so the series stops after one term
    Mat4 q = A * A + a2 * I;
    Mat4 S = A * (I + q / (2 * a2));
    return {S, A - S};
}

namespace {

double omega(const Mat4& Om, const Vec4& u, const Vec4& v) { return u.dot(Om * v); }

ModelParams at_threshold(const ModelParams& p, FixedPointTag fp, Side side)
{
    ModelParams q = p;
    q.t4 = threshold_value(as_double(p), fp, side);
    return q;
}

// minus the half trace of the complex 2x2 reduction
double collision_frequency(const Mat4& A) { return -(A(1, 0) + A(3, 2)) / 2; }

} // namespace

Mat4 symplectic_basis(const BCDecomposition& d, const ModelParams& p, const Mat4&, const Mat4& Om)
{
    require_t3_nonzero(p);
    // at the minus threshold the second sphere is mirrored (t3 -> -t3 swaps the labels)
    double m = d.side == Side::minus ? -1 : 1;
    Vec4 e(std::sqrt(p.R2), 0, m * std::sqrt(p.R1), 0);
    e *= d.beta;
    const Mat4& S = d.S_part;
    const Mat4& N = d.N_part;
    if (std::fabs(omega(Om, e, N * e)) < 1e-12) throw NumericalFailure("degenerate pairing omega(e, Ne)");
    double a = d.alpha;
    Vec4 f = e + omega(Om, e, S * e) / (2 * a * a) * (N * S * e);
    Mat4 P;
    P.col(0) = f;
    P.col(1) = S * f / a;
    P.col(2) = N * f;
    P.col(3) = S * N * f / a;
    return P;
}

BCDecomposition burgoyne_cushman(const ModelParams& p, FixedPointTag fp, Side side)
{
    require_t3_nonzero(p);
    ModelParams q = at_threshold(p, fp, side);
    auto L = linearize_at(q, fp);
    BCDecomposition d;
    d.alpha = collision_frequency(L.A);
    if (std::fabs(d.alpha) < 1e-12) throw NumericalFailure("collision at zero frequency");
    auto [S, N] = jordan_chevalley(L.A, d.alpha);
    d.S_part = S;
    d.N_part = N;
    d.side = side;
    d.beta = 0.5 * std::pow(p.R1 * p.R2 * p.t3 * p.t3, -0.25);
    d.P = symplectic_basis(d, q, L.A, L.Omega);
    d.normal = d.P.inverse() * L.A * d.P;
    d.sigma_sign = omega(L.Omega, d.P.col(0), d.P.col(2)) >= 0 ? 1 : -1;
    return d;
}

Unfolding unfolding(const ModelParams& p, FixedPointTag fp, Side side)
{
    require_t3_nonzero(p);
    Unfolding u;
    u.fp = fp;
    u.side = side;
    u.t4_star = threshold_value(as_double(p), fp, side);
    auto A_at = [p, fp](double t4) {
        ModelParams q = p;
        q.t4 = t4;
        return linearize_at(q, fp).A;
    };
    Mat4 A0 = A_at(u.t4_star);
    double alpha = collision_frequency(A0);
    u.rho = alpha;

    // template: lambda^4 + 2(a^2 - nu2) lambda^2 + (a^2 + nu2)^2. The four
    // solutions come from the two square roots; the root of qA is continued
    // analytically through the determinant of the complex 2x2 reduction
    // (its square is qA), and a through minus its half trace.
    auto reduction = [](const Mat4& A) {
        double tr = A(1, 0) + A(3, 2);
        double det = A(1, 0) * A(3, 2) - A(1, 2) * A(3, 0);
        return std::pair<double, double>{tr, det};
    };
    auto [pa0, qa0] = char_poly(A0);
    auto [tr0, g0] = reduction(A0);
    if (std::fabs(g0 * g0 - qa0) > 1e-9 * (1 + qa0)) throw NumericalFailure("complex reduction does not match qA");
    double best = std::numeric_limits<double>::infinity();
    int bs = 1, bsa = 1;
    for (int s : {1, -1})
        for (int sa : {1, -1}) {
            double r = s * std::sqrt(qa0);
            double a2 = (pa0 / 2 + r) / 2;
            if (a2 < -1e-14) continue;
            double a = sa * std::sqrt(std::max(a2, 0.0));
            double n2 = (r - pa0 / 2) / 2;
            double v = std::fabs(a - alpha) + std::fabs(n2);
            if (v < best) {
                best = v;
                bs = s;
                bsa = sa;
            }
        }
    if (!(best <= 1e-6 * (1 + alpha * alpha))) throw NumericalFailure("no unfolding branch vanishes at the threshold");
    double sg = bs * (g0 >= 0 ? 1 : -1);
    double sh = bsa * ((-tr0 / 2) >= 0 ? 1 : -1);
    u.nu1 = [=](double t4) {
        auto [tr, g] = reduction(A_at(t4));
        (void)g;
        return sh * (-tr / 2) - alpha;
    };
    u.nu2 = [=](double t4) {
        Mat4 A = A_at(t4);
        auto [pa, qa] = char_poly(A);
        auto [tr, g] = reduction(A);
        (void)qa;
        (void)tr;
        return (sg * g - pa / 2) / 2;
    };
    // A is affine in t4, so dA is exact
    Mat4 dA = A_at(u.t4_star + 1) - A0;
    double dp = -(A0 * dA).trace();
    auto [trd, gd] = reduction(dA + A0);
    (void)trd;
    double dg = 0;
    {
        // det of the reduction is quadratic in t4; central difference with unit step is exact
        auto [trm, gm] = reduction(A0 - dA);
        (void)trm;
        dg = (gd - gm) / 2;
    }
    u.dnu2_dt4_at_threshold = (sg * dg - dp / 2) / 2;
    // printed for the plus threshold; the minus one is its image under t3 -> -t3
    u.dnu2_closed_form = (side == Side::plus ? -1 : 1) * p.t3 * (p.R1 + p.R2) / std::pow(p.R1 * p.R2, 1.5);
    try {
        u.sigma_sign = burgoyne_cushman(p, fp, side).sigma_sign;
    } catch (const NumericalFailure&) {
        u.sigma_sign = 0;  // basis construction degenerate here
    }
    return u;
}

double nu1_printed(const ModelParams& p, double t4)
{
    double R1 = p.R1, R2 = p.R2, rr = std::sqrt(R1 * R2);
    double alpha = (p.w * (p.t1 + p.t2) * rr + p.t3 * (R1 - R2)) / (rr * (R1 + R2));
    return -alpha + ((p.w * p.t1 - t4) * R2 + (p.w * p.t2 + t4) * R1) / (2 * R1 * R2);
}

double nu2_printed(const ModelParams& p, double t4)
{
    double R1 = p.R1, R2 = p.R2, u = p.w * p.t1 - t4, v = p.w * p.t2 + t4;
    return -(u * u * R2 * R2 + v * R1 * R1 - 2 * R1 * R2 * (u * v + 2 * p.t3 * p.t3)) / (4 * R1 * R1 * R2 * R2);
}

double nu2_printed_squared(const ModelParams& p, double t4)
{
    double R1 = p.R1, R2 = p.R2, u = p.w * p.t1 - t4, v = p.w * p.t2 + t4;
    return -(u * u * R2 * R2 + v * v * R1 * R1 - 2 * R1 * R2 * (u * v + 2 * p.t3 * p.t3)) / (4 * R1 * R1 * R2 * R2);
}

std::pair<double, double> t3_zero_degenerate_t4(const ModelParams& p)
{
    if (p.R1 == p.R2) throw DomainError("needs R1 != R2");
    double d = p.w * (p.R2 * p.t1 - p.R1 * p.t2) / (p.R1 - p.R2);
    return {-4 * p.t0 - d, -4 * p.t0 + d};
}

} // namespace gaudin
