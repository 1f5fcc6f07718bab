#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaudin/model.hpp"

namespace gaudin {

struct CoefficientCheck {
    std::string name;
    double oracle = 0, printed = 0, rel_err = 0;
    bool ok = true;
};

struct AppendixReport {
    ModelParams params;  // t4 at the plus threshold of m0
    std::vector<CoefficientCheck> checks;
    bool exact = false;
    bool a2_zero = false, a9_zero = false;  // exact zeros in rational mode
    double seconds = 0;
    bool ok() const;
};

// relative difference with an absolute floor for values that should vanish
double rel_diff(double a, double b, double floor = 1e-14);

// random parameters with R1 R2 a perfect square, rational entries, t3 != 0,
// t4 at the plus threshold of m0, and a non-vanishing collision frequency
ModelParams random_admissible(std::mt19937_64& rng);

// Lie-series oracle against the appendix tables: a1..a9 divided by b, then e1..e3 and f1..f6
AppendixReport compare_appendix(const ModelParams& p, double tol = 1e-8, bool rational = true);

} // namespace gaudin
