#pragma once

#include <cmath>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

template <class T>
struct LinearSolution {
    std::vector<T> x;
    double residual = 0;  // max |A x - b|
    bool consistent = true;
};

// Gaussian elimination with partial pivoting on a (possibly overdetermined)
// consistent system; free unknowns are set to zero
template <class T>
LinearSolution<T> solve_linear(std::vector<std::vector<T>> A, std::vector<T> b, double tol = 1e-13)
{
    int m = static_cast<int>(A.size());
    int n = m ? static_cast<int>(A[0].size()) : 0;
    const auto A0 = A;
    const auto b0 = b;
    double scale = 0;
    for (auto& r : A)
        for (auto& v : r) scale = std::max(scale, std::fabs(to_double(v)));
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int best = -1;
        double bv = 0;
        for (int r = row; r < m; ++r) {
            double v = std::fabs(to_double(A[r][col]));
            bool nz = A[r][col] != 0;
            if (nz && (best < 0 || v > bv)) {
                best = r;
                bv = v;
            }
        }
        if (best < 0) continue;
        if constexpr (std::is_floating_point_v<T>) {
            if (bv <= tol * std::max(scale, 1e-300)) continue;
        }
        std::swap(A[row], A[best]);
        std::swap(b[row], b[best]);
        for (int r = 0; r < m; ++r) {
            if (r == row || A[r][col] == 0) continue;
            T f = A[r][col] / A[row][col];
            for (int c = col; c < n; ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        pivcol.push_back(col);
        ++row;
    }
    LinearSolution<T> s;
    s.x.assign(n, T(0));
    for (int k = 0; k < static_cast<int>(pivcol.size()); ++k) s.x[pivcol[k]] = b[k] / A[k][pivcol[k]];
    for (int r = 0; r < m; ++r) {
        T acc = -b0[r];
        for (int c = 0; c < n; ++c) acc += A0[r][c] * s.x[c];
        s.residual = std::max(s.residual, std::fabs(to_double(acc)));
        if constexpr (!std::is_floating_point_v<T>) {
            if (acc != 0) s.consistent = false;
        }
    }
    return s;
}

} // namespace gaudin
