#include "gaudin/momentum.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <cmath>
#include <numeric>
#include <thread>

#include <Eigen/Dense>
#include <json.hpp>

namespace gaudin {

namespace {

constexpr int kO = Jet2::O;

double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// runs f(i) for i in [0, n) on a few threads; results must be written to per-index slots
template <class F>
void parallel_for(int n, F f) {
    unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (n < 64 || hw == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t) {
        pool.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < n; i += static_cast<int>(hw)) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct Zs {
    double z1, z2, dz1, dz2, P;
};

Zs zs(const ModelParams& p, double j, double K) {
    Zs z;
    z.z1 = (j + K) / (2 * p.R1);
    z.z2 = (j - K) / (2 * p.R2);
    z.dz1 = 1 / (2 * p.R1);
    z.dz2 = -1 / (2 * p.R2);
    z.P = (1 - z.z1 * z.z1) * (1 - z.z2 * z.z2);
    return z;
}

double h_K(const ModelParams& p, double t4, double j, double K, int branch) {
    Zs z = zs(p, j, K);
    double s = std::sqrt(std::max(z.P, 0.0));
    double dP = -2 * z.z1 * z.dz1 * (1 - z.z2 * z.z2) - 2 * z.z2 * z.dz2 * (1 - z.z1 * z.z1);
    return 2 * p.t0 * (z.z1 + z.z2) * (z.dz1 + z.dz2) + p.w * (p.t1 * z.dz1 + p.t2 * z.dz2) +
           p.t3 * branch * dP / (2 * s) + t4 * (z.dz1 * z.z2 + z.z1 * z.dz2);
}

double h_value(const ModelParams& p, double t4, double j, double K, int branch) {
    Zs z = zs(p, j, K);
    double s = std::sqrt(std::max(z.P, 0.0));
    return p.t0 * (z.z1 + z.z2) * (z.z1 + z.z2) + p.w * (p.t1 * z.z1 + p.t2 * z.z2) + p.t3 * branch * s +
           t4 * z.z1 * z.z2;
}

bool inside(const ModelParams& p, double j, double K, double tol = 1e-12) {
    auto [lo, hi] = k_interval(p, j);
    double m = tol * (p.R1 + p.R2);
    return K >= lo - m && K <= hi + m;
}

double fixed_J(const ModelParams& p, const FixedPoint& f) { return p.R1 * f.s1 + p.R2 * f.s2; }
double fixed_K(const ModelParams& p, const FixedPoint& f) { return p.R1 * f.s1 - p.R2 * f.s2; }

constexpr std::array<FixedPointTag, 4> kTags{FixedPointTag::m0, FixedPointTag::m1, FixedPointTag::m2,
                                             FixedPointTag::m3};

} // namespace

Jet2 Jet2::constant(double v) {
    Jet2 r;
    r.c[0][0] = v;
    return r;
}

Jet2 Jet2::var_j(double j) {
    Jet2 r = constant(j);
    r.c[1][0] = 1;
    return r;
}

Jet2 Jet2::var_K(double K) {
    Jet2 r = constant(K);
    r.c[0][1] = 1;
    return r;
}

double Jet2::d(int a, int b) const { return c[a][b] * factorial(a) * factorial(b); }

Jet2& Jet2::operator+=(const Jet2& o) {
    for (int a = 0; a <= kO; ++a)
        for (int b = 0; a + b <= kO; ++b) c[a][b] += o.c[a][b];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    for (int a = 0; a <= kO; ++a)
        for (int b = 0; a + b <= kO; ++b) c[a][b] -= o.c[a][b];
    return *this;
}

Jet2& Jet2::operator*=(double s) {
    for (auto& row : c)
        for (double& v : row) v *= s;
    return *this;
}

Jet2 operator*(const Jet2& x, const Jet2& y) {
    Jet2 r;
    for (int a = 0; a <= kO; ++a)
        for (int b = 0; a + b <= kO; ++b) {
            double acc = 0;
            for (int i = 0; i <= a; ++i)
                for (int k = 0; k <= b; ++k) acc += x.c[i][k] * y.c[a - i][b - k];
            r.c[a][b] = acc;
        }
    return r;
}

Jet2 Jet2::sqrt() const {
    double x0 = c[0][0];
    if (!(x0 > 0)) throw DomainError("jet square root at a non-positive base value");
    Jet2 u = *this;
    u.c[0][0] = 0;
    u *= 1 / x0;
    // sqrt(1+u) = sum binom(1/2, n) u^n
    Jet2 r = constant(1), pw = constant(1);
    double coef = 1;
    for (int n = 1; n <= kO; ++n) {
        coef *= (0.5 - (n - 1)) / n;
        pw = pw * u;
        r += pw * coef;
    }
    return r * std::sqrt(x0);
}

std::pair<double, double> k_interval(const ModelParams& p, double j) {
    return {std::max(-2 * p.R1 - j, j - 2 * p.R2), std::min(2 * p.R1 - j, j + 2 * p.R2)};
}

ReducedJets reduced_jets(const ModelParams& p, double j, double K, int branch) {
    Jet2 J = Jet2::var_j(j), Kj = Jet2::var_K(K);
    Jet2 z1 = (J + Kj) * (1 / (2 * p.R1));
    Jet2 z2 = (J - Kj) * (1 / (2 * p.R2));
    Jet2 one = Jet2::constant(1);
    Jet2 P = (one - z1 * z1) * (one - z2 * z2);
    Jet2 s = z1 + z2;
    ReducedJets r;
    r.H0 = p.t0 * (s * s) + p.w * (p.t1 * z1 + p.t2 * z2) + (p.t3 * branch) * P.sqrt();
    r.Z = z1 * z2;
    return r;
}

double reduced_hamiltonian(const ModelParams& p, double j, double K, int branch) {
    if (!inside(p, j, K)) throw DomainError("K outside the admissible interval");
    return h_value(p, p.t4, j, K, branch);
}

double criticality_function(const ModelParams& p, double t4, double j, double K, int branch) {
    return h_K(p, t4, j, K, branch);
}

double printed_reduced_hamiltonian(double t4, double j, double K, double xi) {
    double a = (j + K) / 2 + (j - K) / 4;
    return -0.5 * a * a + 0.5 * (xi - (j + K) * (j - K) / 8) + t4 / 8 * (j + K) * (j - K);
}

double printed_f(double j, double K, double sigma) {
    double j2 = j * j, K2 = K * K;
    return 1 / std::sqrt(64 + j2 * j2 - 24 * j * K - 20 * K2 + K2 * K2 - 2 * j2 * (10 + K2) - 64 * sigma * sigma);
}

double printed_F(int sign, double t4, double j, double K, double sigma) {
    return 1.5 * j + 2 * (t4 + 0.25) * K +
           sign * 0.25 * printed_f(j, K, sigma) * (24 * j + 40 * K + 4 * j * j * K - 4 * K * K * K);
}

double printed_G(double t4, double j, double K) {
    double f = printed_f(j, K, 0);
    double u = 6 * j + 10 * K + j * j * K - K * K * K;
    return f * f * f / 4 * u * u + f * (1.25 + j * j / 8 - 3 * K * K / 8) - t4 / 4 - 1.0 / 16;
}

std::string to_string(CriticalType t) {
    switch (t) {
    case CriticalType::EllipticRegular: return "elliptic-regular";
    case CriticalType::HyperbolicRegular: return "hyperbolic-regular";
    case CriticalType::Cusp: return "cusp";
    case CriticalType::RankZero: return "rank-zero";
    }
    return "?";
}

std::string to_string(EndKind e) {
    switch (e) {
    case EndKind::Open: return "open";
    case EndKind::Cusp: return "cusp";
    case EndKind::RankZero: return "rank-zero";
    case EndKind::GridEdge: return "grid-edge";
    }
    return "?";
}

std::string to_string(EventKind k) {
    switch (k) {
    case EventKind::HopfSuper: return "HopfSuper";
    case EventKind::HopfSub: return "HopfSub";
    case EventKind::HopfDegenerate: return "HopfDegenerate";
    case EventKind::CuspBirthDeath: return "CuspBirthDeath";
    case EventKind::CuspCollision: return "CuspCollision";
    case EventKind::PleatSplit: return "PleatSplit";
    }
    return "?";
}

std::set<EventKind> all_event_kinds() {
    return {EventKind::HopfSuper,      EventKind::HopfSub,       EventKind::HopfDegenerate,
            EventKind::CuspBirthDeath, EventKind::CuspCollision, EventKind::PleatSplit};
}

namespace {

// roots of F on one branch inside [a, b] by sign-change scan and bisection
void scan_roots(const ModelParams& p, double t4, double j, int branch, double a, double b, int n, bool chebyshev,
                std::vector<double>& out) {
    if (!(b > a)) return;
    const double pi = std::acos(-1.0);
    auto node = [&](int i) {
        double u = chebyshev ? (1 - std::cos(pi * i / n)) / 2 : static_cast<double>(i) / n;
        return a + (b - a) * u;
    };
    auto F = [&](double K) { return h_K(p, t4, j, K, branch); };
    double tol = 1e-12 * std::max(1.0, b - a);
    double x0 = node(0), f0 = F(x0);
    for (int i = 1; i <= n; ++i) {
        double x1 = node(i), f1 = F(x1);
        if (f0 == 0) {
            out.push_back(x0);
        } else if (f0 * f1 < 0 && std::isfinite(f0) && std::isfinite(f1)) {
            double lo = x0, hi = x1, flo = f0;
            while (hi - lo > tol) {
                double mid = 0.5 * (lo + hi), fm = F(mid);
                if (fm == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            double r = 0.5 * (lo + hi);
            // one Newton polish keeps |F| small next to the poles where F is steep
            for (int it = 0; it < 2; ++it) {
                ReducedJets jt = reduced_jets(p, j, r, branch);
                double fk = jt.at(t4).d(0, 2);
                double step = fk != 0 ? F(r) / fk : 0;
                double nr = r - step;
                if (!(nr >= x0 && nr <= x1) || std::abs(F(nr)) > std::abs(F(r))) break;
                r = nr;
            }
            out.push_back(r);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0) out.push_back(x0);
}

CriticalType type_of(const ModelParams& p, double t4, double j, double K, int branch, double* det_out) {
    ReducedJets jt = reduced_jets(p, j, K, branch);
    Zs z = zs(p, j, K);
    double hkk = jt.at(t4).d(0, 2);
    double det = hkk * (-p.t3 * branch / std::sqrt(z.P));
    if (det_out) *det_out = det;
    if (std::abs(det) <= 1e-9) return CriticalType::Cusp;
    return det > 0 ? CriticalType::EllipticRegular : CriticalType::HyperbolicRegular;
}

} // namespace

std::vector<ReducedCriticalPoint> critical_points(const ModelParams& p, double t4, double j, int scan) {
    std::vector<ReducedCriticalPoint> out;
    auto [lo, hi] = k_interval(p, j);
    double width = hi - lo;
    if (width > 1e-12) {
        double eps = 1e-13 * width + 1e-15;
        for (int br : {1, -1}) {
            std::vector<double> roots;
            scan_roots(p, t4, j, br, lo + eps, hi - eps, scan, true, roots);
            std::sort(roots.begin(), roots.end());
            double last = -1e300;
            for (double K : roots) {
                if (K - last <= 1e-9) continue;
                last = K;
                ReducedCriticalPoint c;
                c.j = j;
                c.K = K;
                c.branch = br;
                c.H = h_value(p, t4, j, K, br);
                c.type = type_of(p, t4, j, K, br, &c.det);
                out.push_back(c);
            }
        }
    }
    ModelParams q = p;
    q.t4 = t4;
    for (FixedPointTag tag : kTags) {
        FixedPoint f = fixed_point(tag);
        if (std::abs(j - fixed_J(p, f)) > 1e-9 * (p.R1 + p.R2)) continue;
        ReducedCriticalPoint c;
        c.j = fixed_J(p, f);
        c.K = fixed_K(p, f);
        c.branch = 1;
        c.H = eval_H(q, f.pt);
        c.type = CriticalType::RankZero;
        c.fp = tag;
        out.push_back(c);
    }
    return out;
}

int FigureData::hyperbolic_segments() const {
    return static_cast<int>(std::count_if(curves.begin(), curves.end(), [](const Curve& c) {
        return c.type == CriticalType::HyperbolicRegular;
    }));
}

std::vector<double> default_j_grid(const ModelParams& p, int n) {
    double a = p.R1 + p.R2;
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = -a + 2 * a * (i + 1) / (n + 1);
    return g;
}

namespace {

struct CuspSolve {
    bool ok = false;
    double j = 0, K = 0;
};

// Newton on (H_K, H_KK) = 0 in (j, K) at fixed t4 and branch
CuspSolve refine_cusp(const ModelParams& p, double t4, int branch, double j, double K) {
    CuspSolve r;
    for (int it = 0; it < 60; ++it) {
        if (!inside(p, j, K, -1e-9)) return r;
        Jet2 h = reduced_jets(p, j, K, branch).at(t4);
        double f1 = h.d(0, 1), f2 = h.d(0, 2);
        double a = h.d(1, 1), b = h.d(0, 2), c = h.d(1, 2), d = h.d(0, 3);
        double det = a * d - b * c;
        if (std::abs(f1) + std::abs(f2) < 1e-13) {
            r.ok = true;
            r.j = j;
            r.K = K;
            return r;
        }
        if (det == 0) return r;
        double dj = (d * f1 - b * f2) / det, dK = (a * f2 - c * f1) / det;
        double lam = 1;
        double n0 = std::hypot(f1, f2);
        for (int k = 0; k < 30; ++k) {
            double nj = j - lam * dj, nK = K - lam * dK;
            if (inside(p, nj, nK, -1e-9)) {
                Jet2 g = reduced_jets(p, nj, nK, branch).at(t4);
                if (std::hypot(g.d(0, 1), g.d(0, 2)) < n0) break;
            }
            lam /= 2;
        }
        j -= lam * dj;
        K -= lam * dK;
    }
    return r;
}

struct Chain {
    Curve curve;
    int last_slice = -1;
    int first_slice = -1;
};

} // namespace

FigureData trace_curves(const ModelParams& p, double t4, const std::vector<double>& j_grid) {
    FigureData fd;
    fd.params = p;
    fd.t4 = t4;
    ModelParams q = p;
    q.t4 = t4;
    for (FixedPointTag tag : kTags) {
        FixedPoint f = fixed_point(tag);
        fd.rank0.push_back({tag, fixed_J(p, f), eval_H(q, f.pt), classify(q, tag).cls});
    }
    if (p.t3 == 0 || j_grid.empty()) return fd;

    int n = static_cast<int>(j_grid.size());
    std::vector<std::vector<ReducedCriticalPoint>> slices(n);
    parallel_for(n, [&](int i) {
        auto pts = critical_points(p, t4, j_grid[i]);
        pts.erase(std::remove_if(pts.begin(), pts.end(),
                                 [](const ReducedCriticalPoint& c) { return c.type == CriticalType::RankZero; }),
                  pts.end());
        slices[i] = std::move(pts);
    });

    double dj = n > 1 ? (j_grid.back() - j_grid.front()) / (n - 1) : 1.0;
    double scale = p.R1 + p.R2;
    auto same_class = [](CriticalType a, CriticalType b) {
        // a cusp-typed sample joins whichever neighbour it continues
        return a == b || a == CriticalType::Cusp || b == CriticalType::Cusp;
    };

    std::vector<Chain> done, active;
    for (int i = 0; i < n; ++i) {
        const auto& pts = slices[i];
        std::vector<int> used(pts.size(), 0);
        struct Pair {
            double dist;
            size_t chain, pt;
        };
        std::vector<Pair> pairs;
        for (size_t c = 0; c < active.size(); ++c) {
            const Curve& cv = active[c].curve;
            double K1 = cv.pts.back().K;
            double pred = K1, slope = 0;
            if (cv.pts.size() >= 2) {
                slope = K1 - cv.pts[cv.pts.size() - 2].K;
                pred = K1 + slope;
            }
            double tol = std::max(20 * std::abs(dj), 1e-3) + 4 * std::abs(slope);
            for (size_t k = 0; k < pts.size(); ++k) {
                if (pts[k].branch != cv.branch || !same_class(pts[k].type, cv.type)) continue;
                double dist = std::abs(pts[k].K - pred);
                if (dist <= tol) pairs.push_back({dist, c, k});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.dist != b.dist) return a.dist < b.dist;
            if (a.chain != b.chain) return a.chain < b.chain;
            return a.pt < b.pt;
        });
        std::vector<int> chain_taken(active.size(), 0);
        for (const Pair& pr : pairs) {
            if (chain_taken[pr.chain] || used[pr.pt]) continue;
            chain_taken[pr.chain] = 1;
            used[pr.pt] = 1;
            Chain& ch = active[pr.chain];
            const auto& c = pts[pr.pt];
            ch.curve.pts.push_back({c.j, c.K, c.H});
            if (ch.curve.type == CriticalType::Cusp) ch.curve.type = c.type;
            ch.last_slice = i;
        }
        std::vector<Chain> next;
        for (size_t c = 0; c < active.size(); ++c) {
            if (chain_taken[c])
                next.push_back(std::move(active[c]));
            else
                done.push_back(std::move(active[c]));
        }
        for (size_t k = 0; k < pts.size(); ++k) {
            if (used[k]) continue;
            Chain ch;
            ch.curve.type = pts[k].type;
            ch.curve.branch = pts[k].branch;
            ch.curve.pts.push_back({pts[k].j, pts[k].K, pts[k].H});
            ch.first_slice = ch.last_slice = i;
            next.push_back(std::move(ch));
        }
        active = std::move(next);
    }
    for (auto& c : active) done.push_back(std::move(c));

    auto add_cusp = [&](double j, double K, int br) {
        double H = h_value(p, t4, j, K, br);
        for (const auto& c : fd.cusps)
            if (c.branch == br && std::abs(c.j - j) < 1e-6 && std::abs(c.K - K) < 1e-6) return;
        fd.cusps.push_back({j, K, H, br});
    };

    for (auto& ch : done) {
        Curve& cv = ch.curve;
        if (cv.type == CriticalType::Cusp) cv.type = CriticalType::EllipticRegular;
        for (int e = 0; e < 2; ++e) {
            int slice = e == 0 ? ch.first_slice : ch.last_slice;
            const CurvePoint& pt = e == 0 ? cv.pts.front() : cv.pts.back();
            bool near_corner = false;
            for (FixedPointTag tag : kTags) {
                FixedPoint f = fixed_point(tag);
                if (std::abs(pt.j - fixed_J(p, f)) <= 3 * std::abs(dj) + 1e-12 &&
                    std::abs(pt.K - fixed_K(p, f)) <= 0.05 * scale)
                    near_corner = true;
            }
            if (near_corner) {
                cv.ends[e] = EndKind::RankZero;
                continue;
            }
            if (slice == 0 || slice == n - 1) {
                cv.ends[e] = EndKind::GridEdge;
                continue;
            }
            CuspSolve cs = refine_cusp(p, t4, cv.branch, pt.j, pt.K);
            if (cs.ok && std::abs(cs.j - pt.j) <= 3 * std::abs(dj) && std::abs(cs.K - pt.K) <= 0.1 * scale) {
                cv.ends[e] = EndKind::Cusp;
                CurvePoint cp{cs.j, cs.K, h_value(p, t4, cs.j, cs.K, cv.branch)};
                if (e == 0)
                    cv.pts.insert(cv.pts.begin(), cp);
                else
                    cv.pts.push_back(cp);
                add_cusp(cs.j, cs.K, cv.branch);
            }
        }
        fd.curves.push_back(std::move(cv));
    }
    return fd;
}

std::pair<int, int> Occupancy::cell(double J, double H) const {
    int ix = static_cast<int>(std::floor((J - jmin) / (jmax - jmin) * nx));
    int iy = static_cast<int>(std::floor((H - hmin) / (hmax - hmin) * ny));
    return {std::clamp(ix, 0, nx - 1), std::clamp(iy, 0, ny - 1)};
}

bool Occupancy::contains(double J, double H, int slack) const {
    if (J < jmin || J > jmax || H < hmin || H > hmax) return false;
    auto [ix, iy] = cell(J, H);
    for (int dx = -slack; dx <= slack; ++dx)
        for (int dy = -slack; dy <= slack; ++dy) {
            int x = ix + dx, y = iy + dy;
            if (x >= 0 && x < nx && y >= 0 && y < ny && occupied(x, y)) return true;
        }
    return false;
}

long Occupancy::count() const { return std::count_if(cover.begin(), cover.end(), [](auto v) { return v != 0; }); }

long Occupancy::count_multi() const {
    return std::count_if(sheets.begin(), sheets.end(), [](auto v) { return v >= 2; });
}

namespace {

constexpr int kSubJ = 3;

// z1 samples at J = j; calls f(z1, Hlow, Hhigh) for the c in [-1, 1] segment
template <class F>
void column_samples(const ModelParams& p, double t4, double j, int nz, F f) {
    double a = std::max(-1.0, (j - p.R2) / p.R1), b = std::min(1.0, (j + p.R2) / p.R1);
    if (b < a) return;
    for (int k = 0; k <= nz; ++k) {
        double z1 = nz == 0 ? a : a + (b - a) * k / nz;
        double z2 = std::clamp((j - p.R1 * z1) / p.R2, -1.0, 1.0);
        double base = p.t0 * (z1 + z2) * (z1 + z2) + p.w * (p.t1 * z1 + p.t2 * z2) + t4 * z1 * z2;
        double amp = std::abs(p.t3) * std::sqrt(std::max(0.0, (1 - z1 * z1) * (1 - z2 * z2)));
        f(base - amp, base + amp);
    }
}

} // namespace

Occupancy sample_image(const ModelParams& p, double t4, int resolution) {
    if (resolution < 2 || resolution > 4096) throw PreconditionError("resolution must be in [2, 4096]");
    Occupancy occ;
    occ.nx = occ.ny = resolution;
    occ.jmin = -(p.R1 + p.R2);
    occ.jmax = p.R1 + p.R2;
    int nz = 2 * resolution;
    double dx = (occ.jmax - occ.jmin) / resolution;
    auto sub_j = [&](int ix, int s) { return occ.jmin + dx * (ix + (s + 0.5) / kSubJ); };

    std::vector<double> cmin(resolution, 1e300), cmax(resolution, -1e300);
    parallel_for(resolution, [&](int ix) {
        for (int s = 0; s < kSubJ; ++s)
            column_samples(p, t4, sub_j(ix, s), nz, [&](double lo, double hi) {
                cmin[ix] = std::min(cmin[ix], lo);
                cmax[ix] = std::max(cmax[ix], hi);
            });
    });
    double hmin = *std::min_element(cmin.begin(), cmin.end());
    double hmax = *std::max_element(cmax.begin(), cmax.end());
    double pad = 0.02 * std::max(hmax - hmin, 1e-9);
    occ.hmin = hmin - pad;
    occ.hmax = hmax + pad;
    occ.cover.assign(static_cast<size_t>(resolution) * resolution, 0);
    occ.sheets.assign(static_cast<size_t>(resolution) * resolution, 0);

    double dy = (occ.hmax - occ.hmin) / resolution;
    auto row = [&](double H) {
        return std::clamp(static_cast<int>(std::floor((H - occ.hmin) / dy)), 0, resolution - 1);
    };
    parallel_for(resolution, [&](int ix) {
        std::vector<int> fill(resolution + 1, 0);
        std::vector<int> runs(resolution + 1, 0);
        std::vector<int> sheets_max(resolution, 0);
        for (int s = 0; s < kSubJ; ++s) {
            std::fill(runs.begin(), runs.end(), 0);
            bool have_prev = false;
            int plo = 0, phi = -1;
            column_samples(p, t4, sub_j(ix, s), nz, [&](double lo, double hi) {
                int a = row(lo), b = row(hi);
                if (have_prev) {
                    // the union over the z1 step between samples is connected
                    int ha = std::min(a, plo), hb = std::max(b, phi);
                    fill[ha] += 1;
                    fill[hb + 1] -= 1;
                    // cells of I_k not in I_{k-1} start a new run
                    if (a < plo) {
                        runs[a] += 1;
                        runs[std::min(b, plo - 1) + 1] -= 1;
                    }
                    if (b > phi) {
                        int st = std::max(a, phi + 1);
                        runs[st] += 1;
                        runs[b + 1] -= 1;
                    }
                } else {
                    fill[a] += 1;
                    fill[b + 1] -= 1;
                    runs[a] += 1;
                    runs[b + 1] -= 1;
                }
                have_prev = true;
                plo = a;
                phi = b;
            });
            int acc = 0;
            for (int iy = 0; iy < resolution; ++iy) {
                acc += runs[iy];
                sheets_max[iy] = std::max(sheets_max[iy], acc);
            }
        }
        int acc = 0;
        for (int iy = 0; iy < resolution; ++iy) {
            acc += fill[iy];
            size_t idx = static_cast<size_t>(iy) * resolution + ix;
            occ.cover[idx] = acc > 0 ? 1 : 0;
            occ.sheets[idx] = static_cast<std::uint8_t>(std::min(sheets_max[iy], 255));
        }
    });
    return occ;
}

int local_cusp_count(const ModelParams& p, double t4, int branch, double j0, double K0, double r, int seeds) {
    std::vector<std::pair<double, double>> found;
    for (int a = 0; a < seeds; ++a)
        for (int b = 0; b < seeds; ++b) {
            double j = j0 - r + 2 * r * (a + 0.5) / seeds;
            double K = K0 - r + 2 * r * (b + 0.5) / seeds;
            if (!inside(p, j, K, -1e-9)) continue;
            CuspSolve cs = refine_cusp(p, t4, branch, j, K);
            if (!cs.ok || std::abs(cs.j - j0) >= r || std::abs(cs.K - K0) >= r) continue;
            bool dup = false;
            for (auto& f : found)
                if (std::abs(f.first - cs.j) < 1e-8 && std::abs(f.second - cs.K) < 1e-8) dup = true;
            if (!dup) found.push_back({cs.j, cs.K});
        }
    return static_cast<int>(found.size());
}

namespace {

enum class Sys { Swallowtail, Collision };

// residual and Jacobian of the cusp-fold systems in (t4, j, K):
// swallowtail: H_K = H_KK = H_KKK = 0; collision: H_K = H_KK = H_Kj = 0
void fold_system(const ModelParams& p, Sys sys, double t4, double j, double K, int br, double r[3], double J[3][3]) {
    ReducedJets jt = reduced_jets(p, j, K, br);
    Jet2 h = jt.at(t4);
    const Jet2& z = jt.Z;
    r[0] = h.d(0, 1);
    r[1] = h.d(0, 2);
    J[0][0] = z.d(0, 1), J[0][1] = h.d(1, 1), J[0][2] = h.d(0, 2);
    J[1][0] = z.d(0, 2), J[1][1] = h.d(1, 2), J[1][2] = h.d(0, 3);
    if (sys == Sys::Swallowtail) {
        r[2] = h.d(0, 3);
        J[2][0] = z.d(0, 3), J[2][1] = h.d(1, 3), J[2][2] = h.d(0, 4);
    } else {
        r[2] = h.d(1, 1);
        J[2][0] = z.d(1, 1), J[2][1] = h.d(2, 1), J[2][2] = h.d(1, 2);
    }
}

bool solve3(const double A[3][3], const double b[3], double x[3]) {
    Eigen::Matrix3d M;
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) {
        v(i) = b[i];
        for (int k = 0; k < 3; ++k) M(i, k) = A[i][k];
    }
    auto lu = M.fullPivLu();
    if (!lu.isInvertible()) return false;
    Eigen::Vector3d s = lu.solve(v);
    for (int i = 0; i < 3; ++i) x[i] = s(i);
    return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

struct FoldSolution {
    bool ok = false;
    double t4, j, K, residual;
};

FoldSolution newton_fold(const ModelParams& p, Sys sys, int br, double t4, double j, double K) {
    FoldSolution out;
    auto norm = [](const double r[3]) { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); };
    double r[3], J[3][3];
    for (int it = 0; it < 100; ++it) {
        if (!inside(p, j, K, -1e-9)) return out;
        fold_system(p, sys, t4, j, K, br, r, J);
        double n0 = norm(r);
        double dx[3];
        bool solved = n0 > 0 && solve3(J, r, dx);
        double step = solved ? std::sqrt(dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]) : 0;
        // iterate until the Newton step itself stalls, not just the residual
        if (n0 == 0 || (n0 < 1e-10 && step < 1e-14 * (1 + std::abs(t4) + std::abs(j) + std::abs(K)))) {
            out = {true, t4, j, K, n0};
            return out;
        }
        if (!solved) return out;
        double lam = 1;
        bool improved = false;
        for (int k = 0; k < 40; ++k) {
            double nt = t4 - lam * dx[0], nj = j - lam * dx[1], nK = K - lam * dx[2];
            if (inside(p, nj, nK, -1e-9)) {
                double rr[3], JJ[3][3];
                fold_system(p, sys, nt, nj, nK, br, rr, JJ);
                if (norm(rr) <= n0) {
                    improved = true;
                    break;
                }
            }
            lam /= 2;
        }
        if (!improved) {
            if (n0 < 1e-10) out = {true, t4, j, K, n0};
            return out;
        }
        t4 -= lam * dx[0];
        j -= lam * dx[1];
        K -= lam * dx[2];
    }
    if (inside(p, j, K, -1e-9)) {
        fold_system(p, sys, t4, j, K, br, r, J);
        if (norm(r) < 1e-10) out = {true, t4, j, K, norm(r)};
    }
    return out;
}

bool symmetric(const ModelParams& p) { return p.w * p.t1 == 0 && p.w * p.t2 == 0; }

} // namespace

std::vector<BifurcationEvent> detect_events(const ModelParams& p, double t4_lo, double t4_hi,
                                            const std::set<EventKind>& kinds, const EventScan& scan) {
    require_t3_nonzero(p);
    if (!(t4_hi >= t4_lo)) throw PreconditionError("t4 range must be ordered");
    std::vector<BifurcationEvent> events;
    double span = std::max(t4_hi - t4_lo, 1e-9);
    double delta = scan.confirm_dt;

    bool want_hopf = kinds.count(EventKind::HopfSuper) || kinds.count(EventKind::HopfSub) ||
                     kinds.count(EventKind::HopfDegenerate);
    if (want_hopf) {
        for (FixedPointTag fp : {FixedPointTag::m0, FixedPointTag::m2}) {
            for (Side side : {Side::minus, Side::plus}) {
                double t4 = threshold_value(as_double(p), fp, side);
                if (t4 < t4_lo || t4 > t4_hi) continue;
                Criticality c = classify_criticality(p, fp, side);
                EventKind k;
                if (c.verdict == Verdict::Supercritical)
                    k = EventKind::HopfSuper;
                else if (c.verdict == Verdict::Subcritical)
                    k = EventKind::HopfSub;
                else if (c.verdict == Verdict::Degenerate || c.verdict == Verdict::PossiblyHigherDegenerate)
                    k = EventKind::HopfDegenerate;
                else
                    continue;
                if (!kinds.count(k)) continue;
                FixedPoint f = fixed_point(fp);
                ModelParams q = p;
                q.t4 = t4;
                BifurcationEvent e;
                e.t4 = t4;
                e.j = fixed_J(p, f);
                e.K = fixed_K(p, f);
                e.H = eval_H(q, f.pt);
                e.kind = k;
                e.fp = fp;
                e.note = "threshold " + std::string(side == Side::plus ? "t4+" : "t4-");
                q.t4 = t4 - delta;
                EigenClass before = classify(q, fp).cls;
                q.t4 = t4 + delta;
                EigenClass after = classify(q, fp).cls;
                e.confirmed = before != after;
                events.push_back(e);
            }
        }
    }

    bool want_bd = kinds.count(EventKind::CuspBirthDeath) != 0;
    bool want_col = kinds.count(EventKind::CuspCollision) || kinds.count(EventKind::PleatSplit);
    if (want_bd || want_col) {
        double a = p.R1 + p.R2;
        int nt = scan.n_t4, nj = scan.n_j, nk = scan.n_K;
        auto tv = [&](int i) { return t4_lo + span * i / (nt - 1); };
        auto jv = [&](int i) { return -a + 2 * a * (i + 0.5) / nj; };
        auto kv = [&](double j, int i) {
            auto [lo, hi] = k_interval(p, j);
            return lo + (hi - lo) * (0.01 + 0.98 * i / (nk - 1));
        };
        struct Cand {
            Sys sys;
            int br;
            double t4, j, K;
        };
        std::vector<Cand> seeds;
        std::vector<Sys> systems;
        if (want_bd) systems.push_back(Sys::Swallowtail);
        if (want_col) systems.push_back(Sys::Collision);
        for (Sys sys : systems) {
            for (int br : {1, -1}) {
                size_t total = static_cast<size_t>(nt) * nj * nk;
                std::vector<double> val(total);
                parallel_for(nj, [&](int ij) {
                    double j = jv(ij);
                    for (int ik = 0; ik < nk; ++ik) {
                        double K = kv(j, ik);
                        ReducedJets jt = reduced_jets(p, j, K, br);
                        for (int it = 0; it < nt; ++it) {
                            Jet2 h = jt.at(tv(it));
                            double r2 = sys == Sys::Swallowtail ? h.d(0, 3) : h.d(1, 1);
                            // scale-free residual: each equation relative to the jet size
                            double sc = 1 + std::abs(jt.Z.d(0, 1)) + std::abs(jt.H0.d(0, 1));
                            val[(static_cast<size_t>(it) * nj + ij) * nk + ik] =
                                std::sqrt(h.d(0, 1) * h.d(0, 1) + h.d(0, 2) * h.d(0, 2) + r2 * r2) / sc;
                        }
                    }
                });
                auto at = [&](int it, int ij, int ik) { return val[(static_cast<size_t>(it) * nj + ij) * nk + ik]; };
                for (int it = 0; it < nt; ++it)
                    for (int ij = 0; ij < nj; ++ij)
                        for (int ik = 0; ik < nk; ++ik) {
                            double v = at(it, ij, ik);
                            bool is_min = true;
                            for (int dt = -1; dt <= 1 && is_min; ++dt)
                                for (int dj = -1; dj <= 1 && is_min; ++dj)
                                    for (int dk = -1; dk <= 1 && is_min; ++dk) {
                                        if (!dt && !dj && !dk) continue;
                                        int a1 = it + dt, b1 = ij + dj, c1 = ik + dk;
                                        if (a1 < 0 || a1 >= nt || b1 < 0 || b1 >= nj || c1 < 0 || c1 >= nk) continue;
                                        if (at(a1, b1, c1) < v) is_min = false;
                                    }
                            if (is_min) seeds.push_back({sys, br, tv(it), jv(ij), kv(jv(ij), ik)});
                        }
            }
        }

        std::vector<FoldSolution> sols(seeds.size());
        parallel_for(static_cast<int>(seeds.size()), [&](int i) {
            const Cand& c = seeds[i];
            sols[i] = newton_fold(p, c.sys, c.br, c.t4, c.j, c.K);
        });
        if (want_bd && symmetric(p)) {
            // on the symmetry line the centre (j, K) = (0, 0) is always critical and H_KKK vanishes there,
            // so the two-equation system reduces to H_KK(0, 0) = 0, which is linear in t4
            for (int br : {1, -1}) {
                ReducedJets jt = reduced_jets(p, 0, 0, br);
                double zkk = jt.Z.d(0, 2);
                if (zkk == 0) continue;
                double t4 = -jt.H0.d(0, 2) / zkk;
                double r[3], J[3][3];
                fold_system(p, Sys::Swallowtail, t4, 0, 0, br, r, J);
                seeds.push_back({Sys::Swallowtail, br, t4, 0, 0});
                sols.push_back({true, t4, 0.0, 0.0, std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])});
            }
        }

        struct Found {
            Sys sys;
            int br;
            FoldSolution s;
        };
        std::vector<Found> found;
        double tol_dup = 1e-6;
        for (size_t i = 0; i < seeds.size(); ++i) {
            const FoldSolution& s = sols[i];
            if (!s.ok) continue;
            if (s.t4 < t4_lo - 1e-9 || s.t4 > t4_hi + 1e-9) continue;
            auto [lo, hi] = k_interval(p, s.j);
            double m = 1e-6 * a;
            if (s.K <= lo + m || s.K >= hi - m) continue;
            bool dup = false;
            for (const Found& f : found)
                if (f.br == seeds[i].br && std::abs(f.s.t4 - s.t4) < tol_dup && std::abs(f.s.j - s.j) < tol_dup &&
                    std::abs(f.s.K - s.K) < tol_dup)
                    dup = true;
            if (!dup) found.push_back({seeds[i].sys, seeds[i].br, s});
        }
        std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
            if (x.s.t4 != y.s.t4) return x.s.t4 < y.s.t4;
            if (x.s.j != y.s.j) return x.s.j < y.s.j;
            return x.br < y.br;
        });

        std::vector<BifurcationEvent> cusp_events(found.size());
        parallel_for(static_cast<int>(found.size()), [&](int i) {
            const Found& f = found[i];
            BifurcationEvent e;
            e.t4 = f.s.t4;
            e.j = f.s.j;
            e.K = f.s.K;
            e.branch = f.br;
            e.H = h_value(p, e.t4, e.j, e.K, f.br);
            e.residual = f.s.residual;
            double rad = 0.5 * std::min(1.0, a / 3);
            int before = local_cusp_count(p, e.t4 - delta, f.br, e.j, e.K, rad, 41);
            int after = local_cusp_count(p, e.t4 + delta, f.br, e.j, e.K, rad, 41);
            e.confirmed = before != after;
            if (f.sys == Sys::Swallowtail) {
                e.kind = EventKind::CuspBirthDeath;
                e.note = after > before ? "pleat born" : "pleat dies";
            } else {
                // cusps annihilating as t4 grows is a flap-pleat collision, cusps created splits a pleat
                e.kind = after < before ? EventKind::CuspCollision : EventKind::PleatSplit;
            }
            e.note += (e.note.empty() ? "" : "; ") + std::string("local cusps ") + std::to_string(before) +
                      " -> " + std::to_string(after);
            cusp_events[i] = e;
        });
        for (auto& e : cusp_events)
            if (kinds.count(e.kind)) events.push_back(e);
    }

    std::stable_sort(events.begin(), events.end(), [](const BifurcationEvent& x, const BifurcationEvent& y) {
        if (x.t4 != y.t4) return x.t4 < y.t4;
        return x.j < y.j;
    });
    return events;
}

FigureFormat parse_format(const std::string& s) {
    if (s == "svg") return FigureFormat::svg;
    if (s == "csv") return FigureFormat::csv;
    if (s == "json") return FigureFormat::json;
    throw PreconditionError("unknown figure format '" + s + "'");
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string class_color(EigenClass c) {
    switch (c) {
    case EigenClass::EllipticElliptic: return "#d62728";
    case EigenClass::FocusFocus: return "#2ca02c";
    case EigenClass::EllipticHyperbolic: return "#ff7f0e";
    case EigenClass::HyperbolicHyperbolic: return "#9467bd";
    case EigenClass::DegenerateCollision: return "#7f7f7f";
    }
    return "#000000";
}

nlohmann::ordered_json params_json(const ModelParams& p) {
    nlohmann::ordered_json j;
    j["R1"] = p.R1;
    j["R2"] = p.R2;
    j["w"] = p.w;
    j["t0"] = p.t0;
    j["t1"] = p.t1;
    j["t2"] = p.t2;
    j["t3"] = p.t3;
    j["t4"] = p.t4;
    return j;
}

// run-length rows of the occupancy: [row, start, length, sheets>=2 ? 2 : 1]
std::vector<std::array<int, 4>> occupancy_runs(const Occupancy& o) {
    std::vector<std::array<int, 4>> runs;
    for (int iy = 0; iy < o.ny; ++iy) {
        int ix = 0;
        while (ix < o.nx) {
            size_t idx = static_cast<size_t>(iy) * o.nx + ix;
            if (!o.cover[idx]) {
                ++ix;
                continue;
            }
            int level = o.sheets[idx] >= 2 ? 2 : 1;
            int st = ix;
            while (ix < o.nx) {
                size_t k = static_cast<size_t>(iy) * o.nx + ix;
                if (!o.cover[k] || (o.sheets[k] >= 2 ? 2 : 1) != level) break;
                ++ix;
            }
            runs.push_back({iy, st, ix - st, level});
        }
    }
    return runs;
}

std::string render_json(const FigureData& fd) {
    nlohmann::ordered_json j;
    j["params"] = params_json(fd.params);
    j["t4"] = fd.t4;
    j["hyperbolic_segments"] = fd.hyperbolic_segments();
    auto& curves = j["curves"] = nlohmann::ordered_json::array();
    for (const Curve& c : fd.curves) {
        nlohmann::ordered_json cj;
        cj["type"] = to_string(c.type);
        cj["branch"] = c.branch;
        cj["ends"] = {to_string(c.ends[0]), to_string(c.ends[1])};
        auto& pts = cj["points"] = nlohmann::ordered_json::array();
        for (const CurvePoint& p : c.pts) pts.push_back({p.j, p.K, p.H});
        curves.push_back(cj);
    }
    auto& cusps = j["cusps"] = nlohmann::ordered_json::array();
    for (const CuspMarker& c : fd.cusps) cusps.push_back({{"j", c.j}, {"K", c.K}, {"H", c.H}, {"branch", c.branch}});
    auto& r0 = j["rank0"] = nlohmann::ordered_json::array();
    for (const RankZeroMarker& r : fd.rank0)
        r0.push_back({{"point", to_string(r.fp)}, {"J", r.J}, {"H", r.H}, {"class", to_string(r.cls)}});
    auto& ev = j["events"] = nlohmann::ordered_json::array();
    for (const BifurcationEvent& e : fd.events)
        ev.push_back({{"kind", to_string(e.kind)}, {"t4", e.t4}, {"j", e.j}, {"K", e.K}, {"H", e.H},
                      {"branch", e.branch}, {"confirmed", e.confirmed}});
    if (fd.occupancy) {
        const Occupancy& o = *fd.occupancy;
        nlohmann::ordered_json oj;
        oj["nx"] = o.nx;
        oj["ny"] = o.ny;
        oj["J_range"] = {o.jmin, o.jmax};
        oj["H_range"] = {o.hmin, o.hmax};
        oj["cells"] = o.count();
        oj["multi_cells"] = o.count_multi();
        auto& runs = oj["runs"] = nlohmann::ordered_json::array();
        for (auto& r : occupancy_runs(o)) runs.push_back({r[0], r[1], r[2], r[3]});
        j["occupancy"] = oj;
    } else {
        j["occupancy"] = nullptr;
    }
    return j.dump(1) + "\n";
}

std::string render_csv(const FigureData& fd) {
    std::string out = "record,id,branch,type,t4,j,K,H\n";
    auto row = [&](const std::string& rec, const std::string& id, const std::string& br, const std::string& type,
                   const std::string& j, const std::string& K, const std::string& H) {
        out += rec + "," + id + "," + br + "," + type + "," + num(fd.t4) + "," + j + "," + K + "," + H + "\n";
    };
    for (size_t i = 0; i < fd.curves.size(); ++i) {
        const Curve& c = fd.curves[i];
        for (const CurvePoint& p : c.pts)
            row("curve", std::to_string(i), std::to_string(c.branch), to_string(c.type), num(p.j), num(p.K), num(p.H));
    }
    for (size_t i = 0; i < fd.cusps.size(); ++i) {
        const CuspMarker& c = fd.cusps[i];
        row("cusp", std::to_string(i), std::to_string(c.branch), "cusp", num(c.j), num(c.K), num(c.H));
    }
    for (const RankZeroMarker& r : fd.rank0) row("rank0", to_string(r.fp), "", to_string(r.cls), num(r.J), "", num(r.H));
    for (size_t i = 0; i < fd.events.size(); ++i) {
        const BifurcationEvent& e = fd.events[i];
        out += "event," + std::to_string(i) + "," + std::to_string(e.branch) + "," + to_string(e.kind) + "," +
               num(e.t4) + "," + num(e.j) + "," + num(e.K) + "," + num(e.H) + "\n";
    }
    if (fd.occupancy) {
        const Occupancy& o = *fd.occupancy;
        out += "occupancy," + std::to_string(o.nx) + "x" + std::to_string(o.ny) + ",,cells," + num(fd.t4) + "," +
               std::to_string(o.count()) + "," + std::to_string(o.count_multi()) + ",\n";
    }
    return out;
}

std::string render_svg(const FigureData& fd) {
    const double W = 720, Hh = 560, ml = 70, mr = 20, mt = 20, mb = 60;
    double pw = W - ml - mr, ph = Hh - mt - mb;
    double jmin = -(fd.params.R1 + fd.params.R2), jmax = -jmin;
    double hmin = 1e300, hmax = -1e300;
    if (fd.occupancy) {
        hmin = fd.occupancy->hmin;
        hmax = fd.occupancy->hmax;
    } else {
        for (const Curve& c : fd.curves)
            for (const CurvePoint& p : c.pts) hmin = std::min(hmin, p.H), hmax = std::max(hmax, p.H);
        for (const RankZeroMarker& r : fd.rank0) hmin = std::min(hmin, r.H), hmax = std::max(hmax, r.H);
        if (!(hmax > hmin)) hmin -= 1, hmax += 1;
        double pad = 0.05 * (hmax - hmin);
        hmin -= pad;
        hmax += pad;
    }
    auto X = [&](double J) { return ml + (J - jmin) / (jmax - jmin) * pw; };
    auto Y = [&](double H) { return mt + (hmax - H) / (hmax - hmin) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- gaudin 1.0 -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(W) + "\" height=\"" + px(Hh) + "\" viewBox=\"0 0 " +
         px(W) + " " + px(Hh) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + px(W) + "\" height=\"" + px(Hh) + "\" fill=\"white\"/>\n";
    if (fd.occupancy) {
        const Occupancy& o = *fd.occupancy;
        double cw = pw / o.nx, ch = ph / o.ny;
        s += "<g id=\"occupancy\" stroke=\"none\">\n";
        for (auto& r : occupancy_runs(o)) {
            double x = ml + r[1] * cw, y = mt + (o.ny - 1 - r[0]) * ch;
            s += "<rect x=\"" + px(x) + "\" y=\"" + px(y) + "\" width=\"" + px(r[2] * cw + 0.01) + "\" height=\"" +
                 px(ch + 0.01) + "\" fill=\"" + (r[3] == 2 ? "#9ab8d8" : "#d6e4f0") + "\"/>\n";
        }
        s += "</g>\n";
    }
    s += "<g id=\"curves\" fill=\"none\" stroke=\"black\">\n";
    for (const Curve& c : fd.curves) {
        if (c.pts.empty()) continue;
        s += "<polyline stroke-width=\"1.5\"";
        if (c.type == CriticalType::HyperbolicRegular) s += " stroke-dasharray=\"6,4\"";
        s += " class=\"" + to_string(c.type) + "\" points=\"";
        for (size_t i = 0; i < c.pts.size(); ++i) {
            if (i) s += " ";
            s += px(X(c.pts[i].j)) + "," + px(Y(c.pts[i].H));
        }
        s += "\"/>\n";
    }
    s += "</g>\n<g id=\"cusps\" fill=\"#1f4fd8\" stroke=\"none\">\n";
    const double pi = std::acos(-1.0);
    for (const CuspMarker& c : fd.cusps) {
        s += "<polygon class=\"cusp\" points=\"";
        for (int k = 0; k < 10; ++k) {
            double rad = k % 2 ? 2.6 : 6.5, ang = -pi / 2 + k * pi / 5;
            if (k) s += " ";
            s += px(X(c.j) + rad * std::cos(ang)) + "," + px(Y(c.H) + rad * std::sin(ang));
        }
        s += "\"/>\n";
    }
    s += "</g>\n<g id=\"rank0\">\n";
    for (const RankZeroMarker& r : fd.rank0)
        s += "<circle class=\"rank0\" cx=\"" + px(X(r.J)) + "\" cy=\"" + px(Y(r.H)) + "\" r=\"4\" fill=\"" +
             class_color(r.cls) + "\"><title>" + to_string(r.fp) + " " + to_string(r.cls) + "</title></circle>\n";
    s += "</g>\n";
    if (!fd.events.empty()) {
        s += "<g id=\"events\" stroke=\"#b00000\" stroke-width=\"1.2\">\n";
        for (const BifurcationEvent& e : fd.events) {
            double x = X(e.j), y = Y(e.H);
            s += "<path d=\"M" + px(x - 4) + "," + px(y - 4) + " L" + px(x + 4) + "," + px(y + 4) + " M" + px(x - 4) +
                 "," + px(y + 4) + " L" + px(x + 4) + "," + px(y - 4) + "\"><title>" + to_string(e.kind) +
                 " t4=" + num(e.t4) + "</title></path>\n";
        }
        s += "</g>\n";
    }
    // axes
    s += "<g id=\"axes\" stroke=\"black\" fill=\"none\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s += "<rect x=\"" + px(ml) + "\" y=\"" + px(mt) + "\" width=\"" + px(pw) + "\" height=\"" + px(ph) + "\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double J = jmin + (jmax - jmin) * k / 4, H = hmin + (hmax - hmin) * k / 4;
        char lj[32], lh[32];
        std::snprintf(lj, sizeof lj, "%.3g", J);
        std::snprintf(lh, sizeof lh, "%.3g", H);
        s += "<line x1=\"" + px(X(J)) + "\" y1=\"" + px(mt + ph) + "\" x2=\"" + px(X(J)) + "\" y2=\"" + px(mt + ph + 5) +
             "\"/>\n";
        s += "<text stroke=\"none\" fill=\"black\" text-anchor=\"middle\" x=\"" + px(X(J)) + "\" y=\"" +
             px(mt + ph + 18) + "\">" + lj + "</text>\n";
        s += "<line x1=\"" + px(ml - 5) + "\" y1=\"" + px(Y(H)) + "\" x2=\"" + px(ml) + "\" y2=\"" + px(Y(H)) + "\"/>\n";
        s += "<text stroke=\"none\" fill=\"black\" text-anchor=\"end\" x=\"" + px(ml - 8) + "\" y=\"" + px(Y(H) + 4) +
             "\">" + lh + "</text>\n";
    }
    s += "<text stroke=\"none\" fill=\"black\" text-anchor=\"middle\" font-size=\"14\" x=\"" + px(ml + pw / 2) +
         "\" y=\"" + px(Hh - 15) + "\">J</text>\n";
    s += "<text stroke=\"none\" fill=\"black\" text-anchor=\"middle\" font-size=\"14\" x=\"18\" y=\"" +
         px(mt + ph / 2) + "\">H</text>\n";
    s += "</g>\n</svg>\n";
    return s;
}

} // namespace

std::string render_figure(const FigureData& fd, FigureFormat fmt) {
    switch (fmt) {
    case FigureFormat::svg: return render_svg(fd);
    case FigureFormat::csv: return render_csv(fd);
    case FigureFormat::json: return render_json(fd);
    }
    return {};
}

void emit_figure(const FigureData& fd, FigureFormat fmt, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
    f << render_figure(fd, fmt);
    f.close();
    if (!f) throw std::runtime_error("write failed for " + path + ": " + std::strerror(errno));
}

} // namespace gaudin
