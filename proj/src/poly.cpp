#include "gaudin/poly.hpp"

namespace gaudin {

namespace {
constexpr int kStride = kMaxDegree + 1;
int key(const Exponent& e) { return ((e[0] * kStride + e[1]) * kStride + e[2]) * kStride + e[3]; }
} // namespace

const MonomialTable& MonomialTable::get()
{
    static const MonomialTable t;
    return t;
}

MonomialTable::MonomialTable()
{
    begin_.assign(kMaxDegree + 2, 0);
    for (int d = 0; d <= kMaxDegree; ++d) {
        begin_[d] = static_cast<int>(exps_.size());
        // lexicographically descending inside a degree
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b)
                for (int c = d - a - b; c >= 0; --c) {
                    exps_.push_back({a, b, c, d - a - b - c});
                    deg_.push_back(d);
                }
    }
    begin_[kMaxDegree + 1] = static_cast<int>(exps_.size());
    lookup_.assign(kStride * kStride * kStride * kStride, -1);
    for (int i = 0; i < size(); ++i) lookup_[key(exps_[i])] = i;
    int n = size();
    mul_.assign(n * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (deg_[i] + deg_[j] > kMaxDegree) continue;
            Exponent e;
            for (int v = 0; v < kVars; ++v) e[v] = exps_[i][v] + exps_[j][v];
            mul_[i * n + j] = lookup_[key(e)];
        }
    low_.assign(n * kVars, -1);
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < kVars; ++v) {
            if (exps_[i][v] == 0) continue;
            Exponent e = exps_[i];
            --e[v];
            low_[i * kVars + v] = lookup_[key(e)];
        }
}

int MonomialTable::index(const Exponent& e) const
{
    int d = 0;
    for (int v : e) {
        if (v < 0) return -1;
        d += v;
    }
    if (d > kMaxDegree) return -1;
    return lookup_[key(e)];
}

} // namespace gaudin
