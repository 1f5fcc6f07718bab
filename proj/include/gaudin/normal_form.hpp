#pragma once

#include <array>
#include <string>

#include "gaudin/model.hpp"
#include "gaudin/poly.hpp"

namespace gaudin {

enum class Side { plus, minus };
std::string to_string(Side s);
Side parse_side(const std::string& s);

// index 1..9 used; index 0 unused
template <class T>
struct RawCoefficientsT {
    std::array<T, 10> a{};
    T b{};
};
using RawCoefficients = RawCoefficientsT<double>;

template <class T>
struct GeneratingCoefficientsT {
    std::array<T, 3> e{};
    std::array<T, 6> f{};
};
using GeneratingCoefficients = GeneratingCoefficientsT<double>;

struct ScaledCoefficients {
    std::array<double, 10> a{};
    Side side = Side::plus;
    FixedPointTag fp = FixedPointTag::m0;
};

template <class T>
struct LieSeriesResultT {
    RawCoefficientsT<T> raw;
    GeneratingCoefficientsT<T> gen;
    double residual = 0;      // leftover N/T-dependent terms after the E, F solves
    double odd_residual = 0;  // odd-degree terms of the flattened Hamiltonian
    double t_residual = 0;    // T coefficient at degree 2
};

template <class T>
T threshold_value(const ParamsT<T>& p, FixedPointTag fp, Side side);

// Hamiltonian in the canonical chart at m0, constant dropped
template <class T>
TruncatedPolynomial<T> chart_hamiltonian(const ParamsT<T>& p, int md = 6);

// full pipeline at m0 with t4 as given
template <class T>
LieSeriesResultT<T> lie_series_raw(const ParamsT<T>& p, Side side, int degree = 6);

// fixed point handling: m2 through the x-rotation; m1, m3 rejected
ParamsT<double> to_m0_frame(const ModelParams& p, FixedPointTag fp);

ScaledCoefficients lie_series_normal_form(const ModelParams& p, FixedPointTag fp, Side side, int degree = 6,
                                          LieSeriesResultT<double>* detail = nullptr);

template <class T>
RawCoefficientsT<T> eval_raw_coefficients(const ParamsT<T>& p);
template <class T>
GeneratingCoefficientsT<T> eval_generating_coefficients(const ParamsT<T>& p);
RawCoefficients eval_raw_coefficients(const ModelParams& p);
GeneratingCoefficients eval_generating_coefficients(const ModelParams& p);

ScaledCoefficients scale(const RawCoefficients& raw, Side side = Side::plus, FixedPointTag fp = FixedPointTag::m0);

// printed closed forms, valid at t4 = t4+ of m0 only
double a3_closed_form(const ModelParams& p);
double a6_closed_form(const ModelParams& p);
double t3_degenerate(const ModelParams& p);

enum class Verdict { Supercritical, Subcritical, Degenerate, PossiblyHigherDegenerate, NotAtBifurcation };
std::string to_string(Verdict v);

enum class CriticalitySource { LieSeries, ClosedForm, Appendix };
std::string to_string(CriticalitySource s);
CriticalitySource parse_source(const std::string& s);

struct Criticality {
    Verdict verdict = Verdict::NotAtBifurcation;
    double a3 = 0, a6 = 0;  // N-normalized M^2 and M^3 coefficients
    double t4 = 0;
    double sigma = 1;
    CriticalitySource source = CriticalitySource::LieSeries;
    bool exact = false;
    std::string note;
};

Criticality classify_criticality(const ModelParams& p, FixedPointTag fp, Side side,
                                 CriticalitySource src = CriticalitySource::LieSeries, bool rational = false);

Verdict verdict_from(double a3, double a6, bool exact_zero_a3, bool exact_zero_a6);

} // namespace gaudin
