#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaudin/linear.hpp"
#include "gaudin/model.hpp"
#include "gaudin/normal_form.hpp"

namespace gaudin {

// bivariate Taylor jet in (dj, dK), total order <= 4
struct Jet2 {
    static constexpr int O = 4;
    std::array<std::array<double, O + 1>, O + 1> c{};

    static Jet2 constant(double v);
    static Jet2 var_j(double j);
    static Jet2 var_K(double K);
    // mixed partial derivative d^a/dj^a d^b/dK^b at the base point
    double d(int a, int b) const;

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(double s);
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
    friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    Jet2 sqrt() const;
};

// H = H0 + t4 Z on one branch of the sigma = 0 slice of the reduced space
struct ReducedJets {
    Jet2 H0, Z;
    Jet2 at(double t4) const { return H0 + Z * t4; }
};

std::pair<double, double> k_interval(const ModelParams& p, double j);
ReducedJets reduced_jets(const ModelParams& p, double j, double K, int branch);
double reduced_hamiltonian(const ModelParams& p, double j, double K, int branch);
double criticality_function(const ModelParams& p, double t4, double j, double K, int branch);

// the displays for R1=1, R2=2, w=0, t0=-1/2, t3=1/2
double printed_reduced_hamiltonian(double t4, double j, double K, double xi);
double printed_f(double j, double K, double sigma);
double printed_F(int sign, double t4, double j, double K, double sigma);
double printed_G(double t4, double j, double K);

enum class CriticalType { EllipticRegular, HyperbolicRegular, Cusp, RankZero };
std::string to_string(CriticalType t);

struct ReducedCriticalPoint {
    double j = 0, K = 0;
    int branch = 1;
    double H = 0;
    CriticalType type = CriticalType::EllipticRegular;
    double det = 0;
    std::optional<FixedPointTag> fp;
};

std::vector<ReducedCriticalPoint> critical_points(const ModelParams& p, double t4, double j, int scan = 400);

enum class EndKind { Open, Cusp, RankZero, GridEdge };
std::string to_string(EndKind e);

struct CurvePoint {
    double j, K, H;
};

struct Curve {
    CriticalType type = CriticalType::EllipticRegular;
    int branch = 1;
    std::vector<CurvePoint> pts;
    std::array<EndKind, 2> ends{EndKind::Open, EndKind::Open};
};

struct CuspMarker {
    double j, K, H;
    int branch;
};

struct RankZeroMarker {
    FixedPointTag fp;
    double J, H;
    EigenClass cls;
};

struct Occupancy {
    int nx = 0, ny = 0;
    double jmin = 0, jmax = 0, hmin = 0, hmax = 0;
    std::vector<std::uint8_t> cover;   // 1 if reachable
    std::vector<std::uint8_t> sheets;  // number of z1-runs covering the cell (saturates at 255)

    bool occupied(int ix, int iy) const { return cover[static_cast<size_t>(iy) * nx + ix] != 0; }
    std::pair<int, int> cell(double J, double H) const;
    // true if (J,H) falls in or next to an occupied cell
    bool contains(double J, double H, int slack = 1) const;
    long count() const;
    long count_multi() const;
};

enum class EventKind { HopfSuper, HopfSub, HopfDegenerate, CuspBirthDeath, CuspCollision, PleatSplit };
std::string to_string(EventKind k);

struct BifurcationEvent {
    double t4 = 0, j = 0, K = 0, H = 0;
    EventKind kind = EventKind::CuspBirthDeath;
    int branch = 0;
    bool confirmed = true;
    double residual = 0;
    std::optional<FixedPointTag> fp;
    std::string note;
};

struct FigureData {
    ModelParams params;
    double t4 = 0;
    std::vector<Curve> curves;
    std::vector<CuspMarker> cusps;
    std::vector<RankZeroMarker> rank0;
    std::optional<Occupancy> occupancy;
    std::vector<BifurcationEvent> events;

    int hyperbolic_segments() const;
};

std::vector<double> default_j_grid(const ModelParams& p, int n = 801);
FigureData trace_curves(const ModelParams& p, double t4, const std::vector<double>& j_grid);
Occupancy sample_image(const ModelParams& p, double t4, int resolution);

struct EventScan {
    int n_t4 = 41, n_j = 41, n_K = 41;
    double confirm_dt = 1e-3;
};

std::vector<BifurcationEvent> detect_events(const ModelParams& p, double t4_lo, double t4_hi,
                                            const std::set<EventKind>& kinds, const EventScan& scan = {});
std::set<EventKind> all_event_kinds();

// number of cusps on one branch inside the box |j - j0| < r, |K - K0| < r
int local_cusp_count(const ModelParams& p, double t4, int branch, double j0, double K0, double r, int seeds = 21);

enum class FigureFormat { svg, csv, json };
FigureFormat parse_format(const std::string& s);
std::string render_figure(const FigureData& fd, FigureFormat fmt);
void emit_figure(const FigureData& fd, FigureFormat fmt, const std::string& path);

} // namespace gaudin
