#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

#include "gaudin/model.hpp"
#include "gaudin/normal_form.hpp"

namespace gaudin {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

// (x1,y1,x2,y2) tangent basis at the fixed point
struct LinearizationMatrix {
    Mat4 A;
    Mat4 Omega;  // symplectic form at the point, omega(u,v) = u^T Omega v
    FixedPointTag fp;
};

enum class EigenClass { EllipticElliptic, FocusFocus, EllipticHyperbolic, HyperbolicHyperbolic, DegenerateCollision };
std::string to_string(EigenClass c);

struct EigenClassification {
    EigenClass cls;
    std::array<std::complex<double>, 4> eigenvalues;
    double discriminant;  // pA^2 - 4 qA
};

struct Thresholds {
    FixedPointTag fp;
    double t4_minus, t4_plus;
    bool ff_window_realized;
    double lower() const { return std::min(t4_minus, t4_plus); }
    double upper() const { return std::max(t4_minus, t4_plus); }
};

struct BCDecomposition {
    double alpha = 0, beta = 0;
    Mat4 S_part, N_part, P, normal;  // normal = P^-1 A P
    int sigma_sign = 1;
    Side side = Side::plus;
};

struct Unfolding {
    std::function<double(double)> nu1, nu2;
    double t4_star = 0;
    double dnu2_dt4_at_threshold = 0;
    double dnu2_closed_form = 0;
    double rho = 0;
    int sigma_sign = 1;
    Side side = Side::plus;
    FixedPointTag fp = FixedPointTag::m0;
};

LinearizationMatrix linearize_at(const ModelParams& p, FixedPointTag fp);
// lambda^4 + pA lambda^2 + qA
std::pair<double, double> char_poly(const Mat4& A);
EigenClassification classify(const ModelParams& p, FixedPointTag fp);
Thresholds thresholds(const ModelParams& p, FixedPointTag fp);
std::pair<Mat4, Mat4> jordan_chevalley(const Mat4& A, double alpha);
// full Burgoyne-Cushman construction at the threshold (t4 is replaced)
BCDecomposition burgoyne_cushman(const ModelParams& p, FixedPointTag fp, Side side = Side::plus);
Mat4 symplectic_basis(const BCDecomposition& d, const ModelParams& p, const Mat4& A, const Mat4& Omega);
Unfolding unfolding(const ModelParams& p, FixedPointTag fp, Side side);

// the printed nu2 and the variant with the squared (w t2 + t4) factor, m0 frame
double nu2_printed(const ModelParams& p, double t4);
double nu2_printed_squared(const ModelParams& p, double t4);
double nu1_printed(const ModelParams& p, double t4);

// t3 = 0 repeated-eigenvalue values of t4 at (m1, m3); needs R1 != R2
std::pair<double, double> t3_zero_degenerate_t4(const ModelParams& p);

} // namespace gaudin
