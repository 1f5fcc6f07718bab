#pragma once

#include <array>
#include <optional>
#include <string>

#include "gaudin/scalar.hpp"

namespace gaudin {

struct ModelParams {
    double R1 = 1, R2 = 1, w = 1;
    double t0 = 0, t1 = 0, t2 = 0, t3 = 0, t4 = 0;
};

// parameters carried in scalar T; rR = sqrt(R1 R2) is stored so that the exact
// mode only needs R1 R2 to be a perfect square
template <class T>
struct ParamsT {
    T R1, R2, rR, w, t0, t1, t2, t3, t4;
};

ParamsT<double> as_double(const ModelParams& p);
// nullopt when some value is not a small rational or R1 R2 is not a square
std::optional<ParamsT<Rational>> as_exact(const ModelParams& p);
ModelParams to_model(const ParamsT<double>& p);
ModelParams to_model(const ParamsT<Rational>& p);

void require_t3_nonzero(const ModelParams& p);

struct PhasePoint {
    double x1 = 0, y1 = 0, z1 = 1, x2 = 0, y2 = 0, z2 = 1;

    // renormalizes points within 1e-9 of the sphere product, throws otherwise
    static PhasePoint make(double x1, double y1, double z1, double x2, double y2, double z2);
    static PhasePoint from_angles(double th1, double ph1, double th2, double ph2);
};

enum class FixedPointTag { m0, m1, m2, m3 };

struct FixedPoint {
    FixedPointTag tag;
    PhasePoint pt;
    int s1, s2;  // signs of z1, z2
};

FixedPoint fixed_point(FixedPointTag tag);
std::string to_string(FixedPointTag tag);
FixedPointTag parse_fixed_point(const std::string& s);

struct ReducedInvariants {
    double j = 0, K = 0, xi = 0, sigma = 0;
};

struct SpectralParams {
    double lambda1 = 0, lambda2 = 0;
};

double eval_J(const ModelParams& p, const PhasePoint& pt);
double eval_H(const ModelParams& p, const PhasePoint& pt);

ModelParams from_rational(double w, double t1, double t2, const SpectralParams& sp, double R1 = 1,
                          double R2 = 1);
ModelParams from_trigonometric(double t0, double t1, double t2, const SpectralParams& sp,
                               double R1 = 1, double R2 = 1);

ReducedInvariants reduce(const ModelParams& p, const PhasePoint& pt);
double invariants_residual(const ModelParams& p, const ReducedInvariants& inv);

// rotation by pi about x on both spheres; maps m0 <-> m2 with w -> -w
ModelParams rotate_x(const ModelParams& p);

} // namespace gaudin
