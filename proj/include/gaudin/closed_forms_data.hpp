#pragma once

#include <array>
#include <string>
#include <vector>

namespace gaudin::detail {

struct MonoTerm {
    long long coeff;
    std::array<int, 8> e;  // sqrt R1, sqrt R2, w, t0, t1, t2, t3, t4
};

struct RationalFormula {
    std::string name;
    std::vector<MonoTerm> num, den;
};

const std::vector<RationalFormula>& closed_form_table();

} // namespace gaudin::detail
