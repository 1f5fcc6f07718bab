// generated from the closed-form coefficient displays; monomials in
// (sqrt R1, sqrt R2, w, t0, t1, t2, t3, t4) with integer coefficients
#include "gaudin/closed_forms_data.hpp"

namespace gaudin::detail {

static const MonoTerm b_num[] = {
    {1, {2, 0, 1, 0, 0, 1, 0, 0}},
    {1, {2, 0, 0, 0, 0, 0, 0, 1}},
    {2, {1, 1, 0, 0, 0, 0, 1, 0}},
    {-1, {0, 2, 1, 0, 1, 0, 0, 0}},
    {1, {0, 2, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm b_den[] = {
    {2, {2, 2, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm a1_num[] = {
    {-1, {2, 0, 1, 0, 0, 1, 0, 0}},
    {-1, {2, 0, 0, 0, 0, 0, 0, 1}},
    {-1, {0, 2, 1, 0, 1, 0, 0, 0}},
    {1, {0, 2, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm a1_den[] = {
    {2, {2, 2, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm a2_num[] = {
    {1, {2, 0, 1, 0, 0, 1, 0, 0}},
    {1, {2, 0, 0, 0, 0, 0, 0, 1}},
    {-2, {1, 1, 0, 0, 0, 0, 1, 0}},
    {-1, {0, 2, 1, 0, 1, 0, 0, 0}},
    {1, {0, 2, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm a2_den[] = {
    {2, {2, 2, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm a3_num[] = {
    {2, {8, 0, 2, 1, 0, 2, 0, 0}},
    {4, {8, 0, 1, 1, 0, 1, 0, 1}},
    {2, {8, 0, 0, 1, 0, 0, 0, 2}},
    {-4, {6, 2, 2, 1, 1, 1, 0, 0}},
    {-4, {6, 2, 2, 1, 0, 2, 0, 0}},
    {-2, {6, 2, 2, 0, 0, 2, 0, 1}},
    {-4, {6, 2, 1, 1, 1, 0, 0, 1}},
    {-4, {6, 2, 1, 1, 0, 1, 0, 1}},
    {3, {6, 2, 1, 0, 0, 1, 2, 0}},
    {-4, {6, 2, 1, 0, 0, 1, 0, 2}},
    {4, {6, 2, 0, 1, 0, 0, 2, 0}},
    {3, {6, 2, 0, 0, 0, 0, 2, 1}},
    {-2, {6, 2, 0, 0, 0, 0, 0, 3}},
    {2, {4, 4, 2, 1, 2, 0, 0, 0}},
    {8, {4, 4, 2, 1, 1, 1, 0, 0}},
    {2, {4, 4, 2, 1, 0, 2, 0, 0}},
    {4, {4, 4, 2, 0, 1, 1, 0, 1}},
    {4, {4, 4, 1, 1, 1, 0, 0, 1}},
    {-4, {4, 4, 1, 1, 0, 1, 0, 1}},
    {-3, {4, 4, 1, 0, 1, 0, 2, 0}},
    {4, {4, 4, 1, 0, 1, 0, 0, 2}},
    {3, {4, 4, 1, 0, 0, 1, 2, 0}},
    {-4, {4, 4, 1, 0, 0, 1, 0, 2}},
    {-8, {4, 4, 0, 1, 0, 0, 2, 0}},
    {-4, {4, 4, 0, 1, 0, 0, 0, 2}},
    {2, {4, 4, 0, 0, 0, 0, 2, 1}},
    {-4, {4, 4, 0, 0, 0, 0, 0, 3}},
    {-4, {2, 6, 2, 1, 2, 0, 0, 0}},
    {-4, {2, 6, 2, 1, 1, 1, 0, 0}},
    {-2, {2, 6, 2, 0, 2, 0, 0, 1}},
    {4, {2, 6, 1, 1, 1, 0, 0, 1}},
    {4, {2, 6, 1, 1, 0, 1, 0, 1}},
    {-3, {2, 6, 1, 0, 1, 0, 2, 0}},
    {4, {2, 6, 1, 0, 1, 0, 0, 2}},
    {4, {2, 6, 0, 1, 0, 0, 2, 0}},
    {3, {2, 6, 0, 0, 0, 0, 2, 1}},
    {-2, {2, 6, 0, 0, 0, 0, 0, 3}},
    {2, {0, 8, 2, 1, 2, 0, 0, 0}},
    {-4, {0, 8, 1, 1, 1, 0, 0, 1}},
    {2, {0, 8, 0, 1, 0, 0, 0, 2}},
};
static const MonoTerm a3_den[] = {
    {3, {8, 4, 2, 0, 0, 2, 0, 0}},
    {6, {8, 4, 1, 0, 0, 1, 0, 1}},
    {3, {8, 4, 0, 0, 0, 0, 0, 2}},
    {12, {7, 5, 1, 0, 0, 1, 1, 0}},
    {12, {7, 5, 0, 0, 0, 0, 1, 1}},
    {-6, {6, 6, 2, 0, 1, 1, 0, 0}},
    {-6, {6, 6, 1, 0, 1, 0, 0, 1}},
    {6, {6, 6, 1, 0, 0, 1, 0, 1}},
    {12, {6, 6, 0, 0, 0, 0, 2, 0}},
    {6, {6, 6, 0, 0, 0, 0, 0, 2}},
    {-12, {5, 7, 1, 0, 1, 0, 1, 0}},
    {12, {5, 7, 0, 0, 0, 0, 1, 1}},
    {3, {4, 8, 2, 0, 2, 0, 0, 0}},
    {-6, {4, 8, 1, 0, 1, 0, 0, 1}},
    {3, {4, 8, 0, 0, 0, 0, 0, 2}},
};
static const MonoTerm a4_num[] = {
    {-2, {6, 0, 1, 1, 0, 1, 0, 0}},
    {-2, {6, 0, 0, 1, 0, 0, 0, 1}},
    {2, {4, 2, 1, 1, 1, 0, 0, 0}},
    {-2, {4, 2, 0, 1, 0, 0, 0, 1}},
    {-1, {4, 2, 0, 0, 0, 0, 2, 0}},
    {2, {2, 4, 1, 1, 0, 1, 0, 0}},
    {2, {2, 4, 0, 1, 0, 0, 0, 1}},
    {1, {2, 4, 0, 0, 0, 0, 2, 0}},
    {-2, {0, 6, 1, 1, 1, 0, 0, 0}},
    {2, {0, 6, 0, 1, 0, 0, 0, 1}},
};
static const MonoTerm a4_den[] = {
    {2, {6, 4, 1, 0, 0, 1, 0, 0}},
    {2, {6, 4, 0, 0, 0, 0, 0, 1}},
    {4, {5, 5, 0, 0, 0, 0, 1, 0}},
    {-2, {4, 6, 1, 0, 1, 0, 0, 0}},
    {2, {4, 6, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm a5_num[] = {
    {2, {4, 0, 0, 1, 0, 0, 0, 0}},
    {2, {2, 2, 0, 1, 0, 0, 0, 0}},
    {1, {2, 2, 0, 0, 0, 0, 0, 1}},
    {2, {0, 4, 0, 1, 0, 0, 0, 0}},
};
static const MonoTerm a5_den[] = {
    {6, {4, 4, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm a6_num[] = {
    {-3, {14, 0, 4, 1, 0, 4, 0, 0}},
    {-6, {14, 0, 3, 2, 0, 3, 0, 0}},
    {-12, {14, 0, 3, 1, 0, 3, 0, 1}},
    {-18, {14, 0, 2, 2, 0, 2, 0, 1}},
    {-18, {14, 0, 2, 1, 0, 2, 0, 2}},
    {-18, {14, 0, 1, 2, 0, 1, 0, 2}},
    {-12, {14, 0, 1, 1, 0, 1, 0, 3}},
    {-6, {14, 0, 0, 2, 0, 0, 0, 3}},
    {-3, {14, 0, 0, 1, 0, 0, 0, 4}},
    {58, {13, 1, 3, 1, 0, 3, 1, 0}},
    {116, {13, 1, 2, 2, 0, 2, 1, 0}},
    {174, {13, 1, 2, 1, 0, 2, 1, 1}},
    {232, {13, 1, 1, 2, 0, 1, 1, 1}},
    {174, {13, 1, 1, 1, 0, 1, 1, 2}},
    {116, {13, 1, 0, 2, 0, 0, 1, 2}},
    {58, {13, 1, 0, 1, 0, 0, 1, 3}},
    {9, {12, 2, 4, 1, 1, 3, 0, 0}},
    {6, {12, 2, 4, 1, 0, 4, 0, 0}},
    {3, {12, 2, 4, 0, 0, 4, 0, 1}},
    {18, {12, 2, 3, 2, 1, 2, 0, 0}},
    {24, {12, 2, 3, 2, 0, 3, 0, 0}},
    {27, {12, 2, 3, 1, 1, 2, 0, 1}},
    {27, {12, 2, 3, 1, 0, 3, 0, 1}},
    {-18, {12, 2, 3, 0, 0, 3, 2, 0}},
    {12, {12, 2, 3, 0, 0, 3, 0, 2}},
    {36, {12, 2, 2, 2, 1, 1, 0, 1}},
    {54, {12, 2, 2, 2, 0, 2, 0, 1}},
    {27, {12, 2, 2, 1, 1, 1, 0, 2}},
    {-92, {12, 2, 2, 1, 0, 2, 2, 0}},
    {45, {12, 2, 2, 1, 0, 2, 0, 2}},
    {-54, {12, 2, 2, 0, 0, 2, 2, 1}},
    {18, {12, 2, 2, 0, 0, 2, 0, 3}},
    {18, {12, 2, 1, 2, 1, 0, 0, 2}},
    {-88, {12, 2, 1, 2, 0, 1, 2, 0}},
    {36, {12, 2, 1, 2, 0, 1, 0, 2}},
    {9, {12, 2, 1, 1, 1, 0, 0, 3}},
    {-184, {12, 2, 1, 1, 0, 1, 2, 1}},
    {33, {12, 2, 1, 1, 0, 1, 0, 3}},
    {-54, {12, 2, 1, 0, 0, 1, 2, 2}},
    {12, {12, 2, 1, 0, 0, 1, 0, 4}},
    {-88, {12, 2, 0, 2, 0, 0, 2, 1}},
    {6, {12, 2, 0, 2, 0, 0, 0, 3}},
    {-92, {12, 2, 0, 1, 0, 0, 2, 2}},
    {9, {12, 2, 0, 1, 0, 0, 0, 4}},
    {-18, {12, 2, 0, 0, 0, 0, 2, 3}},
    {3, {12, 2, 0, 0, 0, 0, 0, 5}},
    {-116, {11, 3, 3, 1, 1, 2, 1, 0}},
    {-116, {11, 3, 3, 1, 0, 3, 1, 0}},
    {-58, {11, 3, 3, 0, 0, 3, 1, 1}},
    {-232, {11, 3, 2, 2, 1, 1, 1, 0}},
    {-464, {11, 3, 2, 2, 0, 2, 1, 0}},
    {-232, {11, 3, 2, 1, 1, 1, 1, 1}},
    {-464, {11, 3, 2, 1, 0, 2, 1, 1}},
    {60, {11, 3, 2, 0, 0, 2, 3, 0}},
    {-174, {11, 3, 2, 0, 0, 2, 1, 2}},
    {-232, {11, 3, 1, 2, 1, 0, 1, 1}},
    {-696, {11, 3, 1, 2, 0, 1, 1, 1}},
    {-116, {11, 3, 1, 1, 1, 0, 1, 2}},
    {136, {11, 3, 1, 1, 0, 1, 3, 0}},
    {-580, {11, 3, 1, 1, 0, 1, 1, 2}},
    {120, {11, 3, 1, 0, 0, 1, 3, 1}},
    {-174, {11, 3, 1, 0, 0, 1, 1, 3}},
    {80, {11, 3, 0, 2, 0, 0, 3, 0}},
    {-232, {11, 3, 0, 2, 0, 0, 1, 2}},
    {136, {11, 3, 0, 1, 0, 0, 3, 1}},
    {-232, {11, 3, 0, 1, 0, 0, 1, 3}},
    {60, {11, 3, 0, 0, 0, 0, 3, 2}},
    {-58, {11, 3, 0, 0, 0, 0, 1, 4}},
    {-9, {10, 4, 4, 1, 2, 2, 0, 0}},
    {-15, {10, 4, 4, 1, 1, 3, 0, 0}},
    {-3, {10, 4, 4, 1, 0, 4, 0, 0}},
    {-9, {10, 4, 4, 0, 1, 3, 0, 1}},
    {-18, {10, 4, 3, 2, 2, 1, 0, 0}},
    {-72, {10, 4, 3, 2, 1, 2, 0, 0}},
    {-36, {10, 4, 3, 2, 0, 3, 0, 0}},
    {-18, {10, 4, 3, 1, 2, 1, 0, 1}},
    {-63, {10, 4, 3, 1, 1, 2, 0, 1}},
    {-21, {10, 4, 3, 1, 0, 3, 0, 1}},
    {30, {10, 4, 3, 0, 1, 2, 2, 0}},
    {-27, {10, 4, 3, 0, 1, 2, 0, 2}},
    {-36, {10, 4, 3, 0, 0, 3, 2, 0}},
    {3, {10, 4, 3, 0, 0, 3, 0, 2}},
    {-18, {10, 4, 2, 2, 2, 0, 0, 1}},
    {-108, {10, 4, 2, 2, 1, 1, 0, 1}},
    {-36, {10, 4, 2, 2, 0, 2, 0, 1}},
    {-9, {10, 4, 2, 1, 2, 0, 0, 2}},
    {140, {10, 4, 2, 1, 1, 1, 2, 0}},
    {-81, {10, 4, 2, 1, 1, 1, 0, 2}},
    {136, {10, 4, 2, 1, 0, 2, 2, 0}},
    {-18, {10, 4, 2, 1, 0, 2, 0, 2}},
    {60, {10, 4, 2, 0, 1, 1, 2, 1}},
    {-27, {10, 4, 2, 0, 1, 1, 0, 3}},
    {-46, {10, 4, 2, 0, 0, 2, 2, 1}},
    {9, {10, 4, 2, 0, 0, 2, 0, 3}},
    {88, {10, 4, 1, 2, 1, 0, 2, 0}},
    {-36, {10, 4, 1, 2, 1, 0, 0, 2}},
    {352, {10, 4, 1, 2, 0, 1, 2, 0}},
    {18, {10, 4, 1, 2, 0, 1, 0, 2}},
    {140, {10, 4, 1, 1, 1, 0, 2, 1}},
    {-33, {10, 4, 1, 1, 1, 0, 0, 3}},
    {308, {10, 4, 1, 1, 0, 1, 2, 1}},
    {15, {10, 4, 1, 1, 0, 1, 0, 3}},
    {30, {10, 4, 1, 0, 1, 0, 2, 2}},
    {-9, {10, 4, 1, 0, 1, 0, 0, 4}},
    {6, {10, 4, 1, 0, 0, 1, 4, 0}},
    {16, {10, 4, 1, 0, 0, 1, 2, 2}},
    {9, {10, 4, 1, 0, 0, 1, 0, 4}},
    {264, {10, 4, 0, 2, 0, 0, 2, 1}},
    {18, {10, 4, 0, 2, 0, 0, 0, 3}},
    {172, {10, 4, 0, 1, 0, 0, 2, 2}},
    {15, {10, 4, 0, 1, 0, 0, 0, 4}},
    {6, {10, 4, 0, 0, 0, 0, 4, 1}},
    {26, {10, 4, 0, 0, 0, 0, 2, 3}},
    {3, {10, 4, 0, 0, 0, 0, 0, 5}},
    {58, {9, 5, 3, 1, 2, 1, 1, 0}},
    {174, {9, 5, 3, 1, 1, 2, 1, 0}},
    {58, {9, 5, 3, 1, 0, 3, 1, 0}},
    {116, {9, 5, 3, 0, 1, 2, 1, 1}},
    {116, {9, 5, 2, 2, 2, 0, 1, 0}},
    {928, {9, 5, 2, 2, 1, 1, 1, 0}},
    {696, {9, 5, 2, 2, 0, 2, 1, 0}},
    {58, {9, 5, 2, 1, 2, 0, 1, 1}},
    {696, {9, 5, 2, 1, 1, 1, 1, 1}},
    {464, {9, 5, 2, 1, 0, 2, 1, 1}},
    {-72, {9, 5, 2, 0, 1, 1, 3, 0}},
    {232, {9, 5, 2, 0, 1, 1, 1, 2}},
    {24, {9, 5, 2, 0, 0, 2, 3, 0}},
    {696, {9, 5, 1, 2, 1, 0, 1, 1}},
    {464, {9, 5, 1, 2, 0, 1, 1, 1}},
    {-96, {9, 5, 1, 1, 1, 0, 3, 0}},
    {522, {9, 5, 1, 1, 1, 0, 1, 2}},
    {-176, {9, 5, 1, 1, 0, 1, 3, 0}},
    {348, {9, 5, 1, 1, 0, 1, 1, 2}},
    {-72, {9, 5, 1, 0, 1, 0, 3, 1}},
    {116, {9, 5, 1, 0, 1, 0, 1, 3}},
    {-16, {9, 5, 1, 0, 0, 1, 3, 1}},
    {-320, {9, 5, 0, 2, 0, 0, 3, 0}},
    {-116, {9, 5, 0, 2, 0, 0, 1, 2}},
    {-240, {9, 5, 0, 1, 0, 0, 3, 1}},
    {-58, {9, 5, 0, 1, 0, 0, 1, 3}},
    {12, {9, 5, 0, 0, 0, 0, 5, 0}},
    {-40, {9, 5, 0, 0, 0, 0, 3, 2}},
    {3, {8, 6, 4, 1, 3, 1, 0, 0}},
    {9, {8, 6, 4, 1, 2, 2, 0, 0}},
    {3, {8, 6, 4, 1, 1, 3, 0, 0}},
    {9, {8, 6, 4, 0, 2, 2, 0, 1}},
    {-3, {8, 6, 4, 0, 1, 3, 0, 1}},
    {6, {8, 6, 3, 2, 3, 0, 0, 0}},
    {72, {8, 6, 3, 2, 2, 1, 0, 0}},
    {108, {8, 6, 3, 2, 1, 2, 0, 0}},
    {24, {8, 6, 3, 2, 0, 3, 0, 0}},
    {3, {8, 6, 3, 1, 3, 0, 0, 1}},
    {45, {8, 6, 3, 1, 2, 1, 0, 1}},
    {63, {8, 6, 3, 1, 1, 2, 0, 1}},
    {9, {8, 6, 3, 1, 0, 3, 0, 1}},
    {-6, {8, 6, 3, 0, 2, 1, 2, 0}},
    {18, {8, 6, 3, 0, 2, 1, 0, 2}},
    {108, {8, 6, 3, 0, 1, 2, 2, 0}},
    {-9, {8, 6, 3, 0, 1, 2, 0, 2}},
    {6, {8, 6, 3, 0, 0, 3, 2, 0}},
    {3, {8, 6, 3, 0, 0, 3, 0, 2}},
    {54, {8, 6, 2, 2, 2, 0, 0, 1}},
    {72, {8, 6, 2, 2, 1, 1, 0, 1}},
    {-36, {8, 6, 2, 2, 0, 2, 0, 1}},
    {-48, {8, 6, 2, 1, 2, 0, 2, 0}},
    {36, {8, 6, 2, 1, 2, 0, 0, 2}},
    {-140, {8, 6, 2, 1, 1, 1, 2, 0}},
    {54, {8, 6, 2, 1, 1, 1, 0, 2}},
    {4, {8, 6, 2, 1, 0, 2, 2, 0}},
    {-36, {8, 6, 2, 1, 0, 2, 0, 2}},
    {-6, {8, 6, 2, 0, 2, 0, 2, 1}},
    {9, {8, 6, 2, 0, 2, 0, 0, 3}},
    {88, {8, 6, 2, 0, 1, 1, 2, 1}},
    {-9, {8, 6, 2, 0, 1, 1, 0, 3}},
    {-42, {8, 6, 2, 0, 0, 2, 2, 1}},
    {-352, {8, 6, 1, 2, 1, 0, 2, 0}},
    {-18, {8, 6, 1, 2, 1, 0, 0, 2}},
    {-528, {8, 6, 1, 2, 0, 1, 2, 0}},
    {-72, {8, 6, 1, 2, 0, 1, 0, 2}},
    {-220, {8, 6, 1, 1, 1, 0, 2, 1}},
    {-6, {8, 6, 1, 1, 1, 0, 0, 3}},
    {-204, {8, 6, 1, 1, 0, 1, 2, 1}},
    {-66, {8, 6, 1, 1, 0, 1, 0, 3}},
    {-6, {8, 6, 1, 0, 1, 0, 4, 0}},
    {-20, {8, 6, 1, 0, 1, 0, 2, 2}},
    {-3, {8, 6, 1, 0, 1, 0, 0, 4}},
    {-12, {8, 6, 1, 0, 0, 1, 4, 0}},
    {-56, {8, 6, 1, 0, 0, 1, 2, 2}},
    {-9, {8, 6, 1, 0, 0, 1, 0, 4}},
    {-176, {8, 6, 0, 2, 0, 0, 2, 1}},
    {-18, {8, 6, 0, 2, 0, 0, 0, 3}},
    {-80, {8, 6, 0, 1, 0, 0, 2, 2}},
    {-21, {8, 6, 0, 1, 0, 0, 0, 4}},
    {-6, {8, 6, 0, 0, 0, 0, 4, 1}},
    {-8, {8, 6, 0, 0, 0, 0, 2, 3}},
    {-6, {8, 6, 0, 0, 0, 0, 0, 5}},
    {-58, {7, 7, 3, 0, 2, 1, 1, 1}},
    {58, {7, 7, 3, 0, 1, 2, 1, 1}},
    {-464, {7, 7, 2, 2, 2, 0, 1, 0}},
    {-1392, {7, 7, 2, 2, 1, 1, 1, 0}},
    {-464, {7, 7, 2, 2, 0, 2, 1, 0}},
    {-232, {7, 7, 2, 1, 2, 0, 1, 1}},
    {-928, {7, 7, 2, 1, 1, 1, 1, 1}},
    {-232, {7, 7, 2, 1, 0, 2, 1, 1}},
    {12, {7, 7, 2, 0, 2, 0, 3, 0}},
    {-58, {7, 7, 2, 0, 2, 0, 1, 2}},
    {-48, {7, 7, 2, 0, 1, 1, 3, 0}},
    {12, {7, 7, 2, 0, 0, 2, 3, 0}},
    {-58, {7, 7, 2, 0, 0, 2, 1, 2}},
    {-464, {7, 7, 1, 2, 1, 0, 1, 1}},
    {464, {7, 7, 1, 2, 0, 1, 1, 1}},
    {56, {7, 7, 1, 1, 1, 0, 3, 0}},
    {-464, {7, 7, 1, 1, 1, 0, 1, 2}},
    {-56, {7, 7, 1, 1, 0, 1, 3, 0}},
    {464, {7, 7, 1, 1, 0, 1, 1, 2}},
    {24, {7, 7, 1, 0, 1, 0, 3, 1}},
    {-58, {7, 7, 1, 0, 1, 0, 1, 3}},
    {-24, {7, 7, 1, 0, 0, 1, 3, 1}},
    {58, {7, 7, 1, 0, 0, 1, 1, 3}},
    {480, {7, 7, 0, 2, 0, 0, 3, 0}},
    {464, {7, 7, 0, 2, 0, 0, 1, 2}},
    {208, {7, 7, 0, 1, 0, 0, 3, 1}},
    {464, {7, 7, 0, 1, 0, 0, 1, 3}},
    {-24, {7, 7, 0, 0, 0, 0, 5, 0}},
    {-40, {7, 7, 0, 0, 0, 0, 3, 2}},
    {116, {7, 7, 0, 0, 0, 0, 1, 4}},
    {3, {6, 8, 4, 1, 3, 1, 0, 0}},
    {9, {6, 8, 4, 1, 2, 2, 0, 0}},
    {3, {6, 8, 4, 1, 1, 3, 0, 0}},
    {-3, {6, 8, 4, 0, 3, 1, 0, 1}},
    {9, {6, 8, 4, 0, 2, 2, 0, 1}},
    {-24, {6, 8, 3, 2, 3, 0, 0, 0}},
    {-108, {6, 8, 3, 2, 2, 1, 0, 0}},
    {-72, {6, 8, 3, 2, 1, 2, 0, 0}},
    {-6, {6, 8, 3, 2, 0, 3, 0, 0}},
    {-9, {6, 8, 3, 1, 3, 0, 0, 1}},
    {-63, {6, 8, 3, 1, 2, 1, 0, 1}},
    {-45, {6, 8, 3, 1, 1, 2, 0, 1}},
    {-3, {6, 8, 3, 1, 0, 3, 0, 1}},
    {-6, {6, 8, 3, 0, 3, 0, 2, 0}},
    {-3, {6, 8, 3, 0, 3, 0, 0, 2}},
    {-108, {6, 8, 3, 0, 2, 1, 2, 0}},
    {9, {6, 8, 3, 0, 2, 1, 0, 2}},
    {6, {6, 8, 3, 0, 1, 2, 2, 0}},
    {-18, {6, 8, 3, 0, 1, 2, 0, 2}},
    {-36, {6, 8, 2, 2, 2, 0, 0, 1}},
    {72, {6, 8, 2, 2, 1, 1, 0, 1}},
    {54, {6, 8, 2, 2, 0, 2, 0, 1}},
    {4, {6, 8, 2, 1, 2, 0, 2, 0}},
    {-36, {6, 8, 2, 1, 2, 0, 0, 2}},
    {-140, {6, 8, 2, 1, 1, 1, 2, 0}},
    {54, {6, 8, 2, 1, 1, 1, 0, 2}},
    {-48, {6, 8, 2, 1, 0, 2, 2, 0}},
    {36, {6, 8, 2, 1, 0, 2, 0, 2}},
    {-42, {6, 8, 2, 0, 2, 0, 2, 1}},
    {88, {6, 8, 2, 0, 1, 1, 2, 1}},
    {-9, {6, 8, 2, 0, 1, 1, 0, 3}},
    {-6, {6, 8, 2, 0, 0, 2, 2, 1}},
    {9, {6, 8, 2, 0, 0, 2, 0, 3}},
    {528, {6, 8, 1, 2, 1, 0, 2, 0}},
    {72, {6, 8, 1, 2, 1, 0, 0, 2}},
    {352, {6, 8, 1, 2, 0, 1, 2, 0}},
    {18, {6, 8, 1, 2, 0, 1, 0, 2}},
    {204, {6, 8, 1, 1, 1, 0, 2, 1}},
    {66, {6, 8, 1, 1, 1, 0, 0, 3}},
    {220, {6, 8, 1, 1, 0, 1, 2, 1}},
    {6, {6, 8, 1, 1, 0, 1, 0, 3}},
    {12, {6, 8, 1, 0, 1, 0, 4, 0}},
    {56, {6, 8, 1, 0, 1, 0, 2, 2}},
    {9, {6, 8, 1, 0, 1, 0, 0, 4}},
    {6, {6, 8, 1, 0, 0, 1, 4, 0}},
    {20, {6, 8, 1, 0, 0, 1, 2, 2}},
    {3, {6, 8, 1, 0, 0, 1, 0, 4}},
    {-176, {6, 8, 0, 2, 0, 0, 2, 1}},
    {-18, {6, 8, 0, 2, 0, 0, 0, 3}},
    {-80, {6, 8, 0, 1, 0, 0, 2, 2}},
    {-21, {6, 8, 0, 1, 0, 0, 0, 4}},
    {-6, {6, 8, 0, 0, 0, 0, 4, 1}},
    {-8, {6, 8, 0, 0, 0, 0, 2, 3}},
    {-6, {6, 8, 0, 0, 0, 0, 0, 5}},
    {-58, {5, 9, 3, 1, 3, 0, 1, 0}},
    {-174, {5, 9, 3, 1, 2, 1, 1, 0}},
    {-58, {5, 9, 3, 1, 1, 2, 1, 0}},
    {-116, {5, 9, 3, 0, 2, 1, 1, 1}},
    {696, {5, 9, 2, 2, 2, 0, 1, 0}},
    {928, {5, 9, 2, 2, 1, 1, 1, 0}},
    {116, {5, 9, 2, 2, 0, 2, 1, 0}},
    {464, {5, 9, 2, 1, 2, 0, 1, 1}},
    {696, {5, 9, 2, 1, 1, 1, 1, 1}},
    {58, {5, 9, 2, 1, 0, 2, 1, 1}},
    {24, {5, 9, 2, 0, 2, 0, 3, 0}},
    {-72, {5, 9, 2, 0, 1, 1, 3, 0}},
    {232, {5, 9, 2, 0, 1, 1, 1, 2}},
    {-464, {5, 9, 1, 2, 1, 0, 1, 1}},
    {-696, {5, 9, 1, 2, 0, 1, 1, 1}},
    {176, {5, 9, 1, 1, 1, 0, 3, 0}},
    {-348, {5, 9, 1, 1, 1, 0, 1, 2}},
    {96, {5, 9, 1, 1, 0, 1, 3, 0}},
    {-522, {5, 9, 1, 1, 0, 1, 1, 2}},
    {16, {5, 9, 1, 0, 1, 0, 3, 1}},
    {72, {5, 9, 1, 0, 0, 1, 3, 1}},
    {-116, {5, 9, 1, 0, 0, 1, 1, 3}},
    {-320, {5, 9, 0, 2, 0, 0, 3, 0}},
    {-116, {5, 9, 0, 2, 0, 0, 1, 2}},
    {-240, {5, 9, 0, 1, 0, 0, 3, 1}},
    {-58, {5, 9, 0, 1, 0, 0, 1, 3}},
    {12, {5, 9, 0, 0, 0, 0, 5, 0}},
    {-40, {5, 9, 0, 0, 0, 0, 3, 2}},
    {-3, {4, 10, 4, 1, 4, 0, 0, 0}},
    {-15, {4, 10, 4, 1, 3, 1, 0, 0}},
    {-9, {4, 10, 4, 1, 2, 2, 0, 0}},
    {-9, {4, 10, 4, 0, 3, 1, 0, 1}},
    {36, {4, 10, 3, 2, 3, 0, 0, 0}},
    {72, {4, 10, 3, 2, 2, 1, 0, 0}},
    {18, {4, 10, 3, 2, 1, 2, 0, 0}},
    {21, {4, 10, 3, 1, 3, 0, 0, 1}},
    {63, {4, 10, 3, 1, 2, 1, 0, 1}},
    {18, {4, 10, 3, 1, 1, 2, 0, 1}},
    {36, {4, 10, 3, 0, 3, 0, 2, 0}},
    {-3, {4, 10, 3, 0, 3, 0, 0, 2}},
    {-30, {4, 10, 3, 0, 2, 1, 2, 0}},
    {27, {4, 10, 3, 0, 2, 1, 0, 2}},
    {-36, {4, 10, 2, 2, 2, 0, 0, 1}},
    {-108, {4, 10, 2, 2, 1, 1, 0, 1}},
    {-18, {4, 10, 2, 2, 0, 2, 0, 1}},
    {136, {4, 10, 2, 1, 2, 0, 2, 0}},
    {-18, {4, 10, 2, 1, 2, 0, 0, 2}},
    {140, {4, 10, 2, 1, 1, 1, 2, 0}},
    {-81, {4, 10, 2, 1, 1, 1, 0, 2}},
    {-9, {4, 10, 2, 1, 0, 2, 0, 2}},
    {-46, {4, 10, 2, 0, 2, 0, 2, 1}},
    {9, {4, 10, 2, 0, 2, 0, 0, 3}},
    {60, {4, 10, 2, 0, 1, 1, 2, 1}},
    {-27, {4, 10, 2, 0, 1, 1, 0, 3}},
    {-352, {4, 10, 1, 2, 1, 0, 2, 0}},
    {-18, {4, 10, 1, 2, 1, 0, 0, 2}},
    {-88, {4, 10, 1, 2, 0, 1, 2, 0}},
    {36, {4, 10, 1, 2, 0, 1, 0, 2}},
    {-308, {4, 10, 1, 1, 1, 0, 2, 1}},
    {-15, {4, 10, 1, 1, 1, 0, 0, 3}},
    {-140, {4, 10, 1, 1, 0, 1, 2, 1}},
    {33, {4, 10, 1, 1, 0, 1, 0, 3}},
    {-6, {4, 10, 1, 0, 1, 0, 4, 0}},
    {-16, {4, 10, 1, 0, 1, 0, 2, 2}},
    {-9, {4, 10, 1, 0, 1, 0, 0, 4}},
    {-30, {4, 10, 1, 0, 0, 1, 2, 2}},
    {9, {4, 10, 1, 0, 0, 1, 0, 4}},
    {264, {4, 10, 0, 2, 0, 0, 2, 1}},
    {18, {4, 10, 0, 2, 0, 0, 0, 3}},
    {172, {4, 10, 0, 1, 0, 0, 2, 2}},
    {15, {4, 10, 0, 1, 0, 0, 0, 4}},
    {6, {4, 10, 0, 0, 0, 0, 4, 1}},
    {26, {4, 10, 0, 0, 0, 0, 2, 3}},
    {3, {4, 10, 0, 0, 0, 0, 0, 5}},
    {116, {3, 11, 3, 1, 3, 0, 1, 0}},
    {116, {3, 11, 3, 1, 2, 1, 1, 0}},
    {58, {3, 11, 3, 0, 3, 0, 1, 1}},
    {-464, {3, 11, 2, 2, 2, 0, 1, 0}},
    {-232, {3, 11, 2, 2, 1, 1, 1, 0}},
    {-464, {3, 11, 2, 1, 2, 0, 1, 1}},
    {-232, {3, 11, 2, 1, 1, 1, 1, 1}},
    {60, {3, 11, 2, 0, 2, 0, 3, 0}},
    {-174, {3, 11, 2, 0, 2, 0, 1, 2}},
    {696, {3, 11, 1, 2, 1, 0, 1, 1}},
    {232, {3, 11, 1, 2, 0, 1, 1, 1}},
    {-136, {3, 11, 1, 1, 1, 0, 3, 0}},
    {580, {3, 11, 1, 1, 1, 0, 1, 2}},
    {116, {3, 11, 1, 1, 0, 1, 1, 2}},
    {-120, {3, 11, 1, 0, 1, 0, 3, 1}},
    {174, {3, 11, 1, 0, 1, 0, 1, 3}},
    {80, {3, 11, 0, 2, 0, 0, 3, 0}},
    {-232, {3, 11, 0, 2, 0, 0, 1, 2}},
    {136, {3, 11, 0, 1, 0, 0, 3, 1}},
    {-232, {3, 11, 0, 1, 0, 0, 1, 3}},
    {60, {3, 11, 0, 0, 0, 0, 3, 2}},
    {-58, {3, 11, 0, 0, 0, 0, 1, 4}},
    {6, {2, 12, 4, 1, 4, 0, 0, 0}},
    {9, {2, 12, 4, 1, 3, 1, 0, 0}},
    {3, {2, 12, 4, 0, 4, 0, 0, 1}},
    {-24, {2, 12, 3, 2, 3, 0, 0, 0}},
    {-18, {2, 12, 3, 2, 2, 1, 0, 0}},
    {-27, {2, 12, 3, 1, 3, 0, 0, 1}},
    {-27, {2, 12, 3, 1, 2, 1, 0, 1}},
    {18, {2, 12, 3, 0, 3, 0, 2, 0}},
    {-12, {2, 12, 3, 0, 3, 0, 0, 2}},
    {54, {2, 12, 2, 2, 2, 0, 0, 1}},
    {36, {2, 12, 2, 2, 1, 1, 0, 1}},
    {-92, {2, 12, 2, 1, 2, 0, 2, 0}},
    {45, {2, 12, 2, 1, 2, 0, 0, 2}},
    {27, {2, 12, 2, 1, 1, 1, 0, 2}},
    {-54, {2, 12, 2, 0, 2, 0, 2, 1}},
    {18, {2, 12, 2, 0, 2, 0, 0, 3}},
    {88, {2, 12, 1, 2, 1, 0, 2, 0}},
    {-36, {2, 12, 1, 2, 1, 0, 0, 2}},
    {-18, {2, 12, 1, 2, 0, 1, 0, 2}},
    {184, {2, 12, 1, 1, 1, 0, 2, 1}},
    {-33, {2, 12, 1, 1, 1, 0, 0, 3}},
    {-9, {2, 12, 1, 1, 0, 1, 0, 3}},
    {54, {2, 12, 1, 0, 1, 0, 2, 2}},
    {-12, {2, 12, 1, 0, 1, 0, 0, 4}},
    {-88, {2, 12, 0, 2, 0, 0, 2, 1}},
    {6, {2, 12, 0, 2, 0, 0, 0, 3}},
    {-92, {2, 12, 0, 1, 0, 0, 2, 2}},
    {9, {2, 12, 0, 1, 0, 0, 0, 4}},
    {-18, {2, 12, 0, 0, 0, 0, 2, 3}},
    {3, {2, 12, 0, 0, 0, 0, 0, 5}},
    {-58, {1, 13, 3, 1, 3, 0, 1, 0}},
    {116, {1, 13, 2, 2, 2, 0, 1, 0}},
    {174, {1, 13, 2, 1, 2, 0, 1, 1}},
    {-232, {1, 13, 1, 2, 1, 0, 1, 1}},
    {-174, {1, 13, 1, 1, 1, 0, 1, 2}},
    {116, {1, 13, 0, 2, 0, 0, 1, 2}},
    {58, {1, 13, 0, 1, 0, 0, 1, 3}},
    {-3, {0, 14, 4, 1, 4, 0, 0, 0}},
    {6, {0, 14, 3, 2, 3, 0, 0, 0}},
    {12, {0, 14, 3, 1, 3, 0, 0, 1}},
    {-18, {0, 14, 2, 2, 2, 0, 0, 1}},
    {-18, {0, 14, 2, 1, 2, 0, 0, 2}},
    {18, {0, 14, 1, 2, 1, 0, 0, 2}},
    {12, {0, 14, 1, 1, 1, 0, 0, 3}},
    {-6, {0, 14, 0, 2, 0, 0, 0, 3}},
    {-3, {0, 14, 0, 1, 0, 0, 0, 4}},
};
static const MonoTerm a6_den[] = {
    {60, {14, 6, 4, 0, 0, 4, 0, 0}},
    {240, {14, 6, 3, 0, 0, 3, 0, 1}},
    {360, {14, 6, 2, 0, 0, 2, 0, 2}},
    {240, {14, 6, 1, 0, 0, 1, 0, 3}},
    {60, {14, 6, 0, 0, 0, 0, 0, 4}},
    {480, {13, 7, 3, 0, 0, 3, 1, 0}},
    {1440, {13, 7, 2, 0, 0, 2, 1, 1}},
    {1440, {13, 7, 1, 0, 0, 1, 1, 2}},
    {480, {13, 7, 0, 0, 0, 0, 1, 3}},
    {-240, {12, 8, 4, 0, 1, 3, 0, 0}},
    {-720, {12, 8, 3, 0, 1, 2, 0, 1}},
    {240, {12, 8, 3, 0, 0, 3, 0, 1}},
    {-720, {12, 8, 2, 0, 1, 1, 0, 2}},
    {1440, {12, 8, 2, 0, 0, 2, 2, 0}},
    {720, {12, 8, 2, 0, 0, 2, 0, 2}},
    {-240, {12, 8, 1, 0, 1, 0, 0, 3}},
    {2880, {12, 8, 1, 0, 0, 1, 2, 1}},
    {720, {12, 8, 1, 0, 0, 1, 0, 3}},
    {1440, {12, 8, 0, 0, 0, 0, 2, 2}},
    {240, {12, 8, 0, 0, 0, 0, 0, 4}},
    {-1440, {11, 9, 3, 0, 1, 2, 1, 0}},
    {-2880, {11, 9, 2, 0, 1, 1, 1, 1}},
    {1440, {11, 9, 2, 0, 0, 2, 1, 1}},
    {-1440, {11, 9, 1, 0, 1, 0, 1, 2}},
    {1920, {11, 9, 1, 0, 0, 1, 3, 0}},
    {2880, {11, 9, 1, 0, 0, 1, 1, 2}},
    {1920, {11, 9, 0, 0, 0, 0, 3, 1}},
    {1440, {11, 9, 0, 0, 0, 0, 1, 3}},
    {360, {10, 10, 4, 0, 2, 2, 0, 0}},
    {720, {10, 10, 3, 0, 2, 1, 0, 1}},
    {-720, {10, 10, 3, 0, 1, 2, 0, 1}},
    {360, {10, 10, 2, 0, 2, 0, 0, 2}},
    {-2880, {10, 10, 2, 0, 1, 1, 2, 0}},
    {-1440, {10, 10, 2, 0, 1, 1, 0, 2}},
    {360, {10, 10, 2, 0, 0, 2, 0, 2}},
    {-2880, {10, 10, 1, 0, 1, 0, 2, 1}},
    {-720, {10, 10, 1, 0, 1, 0, 0, 3}},
    {2880, {10, 10, 1, 0, 0, 1, 2, 1}},
    {720, {10, 10, 1, 0, 0, 1, 0, 3}},
    {960, {10, 10, 0, 0, 0, 0, 4, 0}},
    {2880, {10, 10, 0, 0, 0, 0, 2, 2}},
    {360, {10, 10, 0, 0, 0, 0, 0, 4}},
    {1440, {9, 11, 3, 0, 2, 1, 1, 0}},
    {1440, {9, 11, 2, 0, 2, 0, 1, 1}},
    {-2880, {9, 11, 2, 0, 1, 1, 1, 1}},
    {-1920, {9, 11, 1, 0, 1, 0, 3, 0}},
    {-2880, {9, 11, 1, 0, 1, 0, 1, 2}},
    {1440, {9, 11, 1, 0, 0, 1, 1, 2}},
    {1920, {9, 11, 0, 0, 0, 0, 3, 1}},
    {1440, {9, 11, 0, 0, 0, 0, 1, 3}},
    {-240, {8, 12, 4, 0, 3, 1, 0, 0}},
    {-240, {8, 12, 3, 0, 3, 0, 0, 1}},
    {720, {8, 12, 3, 0, 2, 1, 0, 1}},
    {1440, {8, 12, 2, 0, 2, 0, 2, 0}},
    {720, {8, 12, 2, 0, 2, 0, 0, 2}},
    {-720, {8, 12, 2, 0, 1, 1, 0, 2}},
    {-2880, {8, 12, 1, 0, 1, 0, 2, 1}},
    {-720, {8, 12, 1, 0, 1, 0, 0, 3}},
    {240, {8, 12, 1, 0, 0, 1, 0, 3}},
    {1440, {8, 12, 0, 0, 0, 0, 2, 2}},
    {240, {8, 12, 0, 0, 0, 0, 0, 4}},
    {-480, {7, 13, 3, 0, 3, 0, 1, 0}},
    {1440, {7, 13, 2, 0, 2, 0, 1, 1}},
    {-1440, {7, 13, 1, 0, 1, 0, 1, 2}},
    {480, {7, 13, 0, 0, 0, 0, 1, 3}},
    {60, {6, 14, 4, 0, 4, 0, 0, 0}},
    {-240, {6, 14, 3, 0, 3, 0, 0, 1}},
    {360, {6, 14, 2, 0, 2, 0, 0, 2}},
    {-240, {6, 14, 1, 0, 1, 0, 0, 3}},
    {60, {6, 14, 0, 0, 0, 0, 0, 4}},
};
static const MonoTerm a7_num[] = {
    {-64, {12, 0, 2, 2, 0, 2, 0, 0}},
    {-128, {12, 0, 1, 2, 0, 1, 0, 1}},
    {-64, {12, 0, 0, 2, 0, 0, 0, 2}},
    {-16, {11, 1, 2, 1, 0, 2, 1, 0}},
    {80, {11, 1, 1, 2, 0, 1, 1, 0}},
    {-32, {11, 1, 1, 1, 0, 1, 1, 1}},
    {80, {11, 1, 0, 2, 0, 0, 1, 1}},
    {-16, {11, 1, 0, 1, 0, 0, 1, 2}},
    {128, {10, 2, 2, 2, 1, 1, 0, 0}},
    {128, {10, 2, 2, 2, 0, 2, 0, 0}},
    {64, {10, 2, 2, 1, 0, 2, 0, 1}},
    {9, {10, 2, 2, 0, 0, 2, 2, 0}},
    {128, {10, 2, 1, 2, 1, 0, 0, 1}},
    {128, {10, 2, 1, 2, 0, 1, 0, 1}},
    {-76, {10, 2, 1, 1, 0, 1, 2, 0}},
    {128, {10, 2, 1, 1, 0, 1, 0, 2}},
    {18, {10, 2, 1, 0, 0, 1, 2, 1}},
    {-64, {10, 2, 0, 2, 0, 0, 2, 0}},
    {-76, {10, 2, 0, 1, 0, 0, 2, 1}},
    {64, {10, 2, 0, 1, 0, 0, 0, 3}},
    {9, {10, 2, 0, 0, 0, 0, 2, 2}},
    {-24, {9, 3, 2, 1, 1, 1, 1, 0}},
    {40, {9, 3, 2, 1, 0, 2, 1, 0}},
    {16, {9, 3, 2, 0, 0, 2, 1, 1}},
    {-80, {9, 3, 1, 2, 1, 0, 1, 0}},
    {-160, {9, 3, 1, 2, 0, 1, 1, 0}},
    {-24, {9, 3, 1, 1, 1, 0, 1, 1}},
    {24, {9, 3, 1, 1, 0, 1, 1, 1}},
    {-6, {9, 3, 1, 0, 0, 1, 3, 0}},
    {32, {9, 3, 1, 0, 0, 1, 1, 2}},
    {-80, {9, 3, 0, 2, 0, 0, 1, 1}},
    {80, {9, 3, 0, 1, 0, 0, 3, 0}},
    {-16, {9, 3, 0, 1, 0, 0, 1, 2}},
    {-6, {9, 3, 0, 0, 0, 0, 3, 1}},
    {16, {9, 3, 0, 0, 0, 0, 1, 3}},
    {-64, {8, 4, 2, 2, 2, 0, 0, 0}},
    {-256, {8, 4, 2, 2, 1, 1, 0, 0}},
    {-128, {8, 4, 2, 1, 1, 1, 0, 1}},
    {6, {8, 4, 2, 0, 0, 2, 2, 0}},
    {-128, {8, 4, 1, 2, 1, 0, 0, 1}},
    {256, {8, 4, 1, 2, 0, 1, 0, 1}},
    {108, {8, 4, 1, 1, 1, 0, 2, 0}},
    {-128, {8, 4, 1, 1, 1, 0, 0, 2}},
    {-28, {8, 4, 1, 1, 0, 1, 2, 0}},
    {128, {8, 4, 1, 1, 0, 1, 0, 2}},
    {16, {8, 4, 1, 0, 0, 1, 2, 1}},
    {128, {8, 4, 0, 2, 0, 0, 2, 0}},
    {192, {8, 4, 0, 2, 0, 0, 0, 2}},
    {-72, {8, 4, 0, 1, 0, 0, 2, 1}},
    {128, {8, 4, 0, 1, 0, 0, 0, 3}},
    {-24, {8, 4, 0, 0, 0, 0, 4, 0}},
    {10, {8, 4, 0, 0, 0, 0, 2, 2}},
    {40, {7, 5, 2, 1, 2, 0, 1, 0}},
    {-24, {7, 5, 2, 1, 1, 1, 1, 0}},
    {16, {7, 5, 2, 1, 0, 2, 1, 0}},
    {16, {7, 5, 2, 0, 0, 2, 1, 1}},
    {160, {7, 5, 1, 2, 1, 0, 1, 0}},
    {-24, {7, 5, 1, 1, 1, 0, 1, 1}},
    {56, {7, 5, 1, 1, 0, 1, 1, 1}},
    {-18, {7, 5, 1, 0, 1, 0, 3, 0}},
    {-24, {7, 5, 1, 0, 0, 1, 3, 0}},
    {32, {7, 5, 1, 0, 0, 1, 1, 2}},
    {-160, {7, 5, 0, 2, 0, 0, 1, 1}},
    {-48, {7, 5, 0, 1, 0, 0, 3, 0}},
    {-38, {7, 5, 0, 0, 0, 0, 3, 1}},
    {16, {7, 5, 0, 0, 0, 0, 1, 3}},
    {128, {6, 6, 2, 2, 2, 0, 0, 0}},
    {-128, {6, 6, 2, 2, 0, 2, 0, 0}},
    {64, {6, 6, 2, 1, 2, 0, 0, 1}},
    {-64, {6, 6, 2, 1, 0, 2, 0, 1}},
    {-9, {6, 6, 2, 0, 2, 0, 2, 0}},
    {9, {6, 6, 2, 0, 0, 2, 2, 0}},
    {-256, {6, 6, 1, 2, 1, 0, 0, 1}},
    {-256, {6, 6, 1, 2, 0, 1, 0, 1}},
    {-4, {6, 6, 1, 1, 1, 0, 2, 0}},
    {-128, {6, 6, 1, 1, 1, 0, 0, 2}},
    {-4, {6, 6, 1, 1, 0, 1, 2, 0}},
    {-128, {6, 6, 1, 1, 0, 1, 0, 2}},
    {-18, {6, 6, 1, 0, 1, 0, 2, 1}},
    {-18, {6, 6, 1, 0, 0, 1, 2, 1}},
    {-16, {5, 7, 2, 1, 2, 0, 1, 0}},
    {24, {5, 7, 2, 1, 1, 1, 1, 0}},
    {-40, {5, 7, 2, 1, 0, 2, 1, 0}},
    {-16, {5, 7, 2, 0, 2, 0, 1, 1}},
    {160, {5, 7, 1, 2, 0, 1, 1, 0}},
    {56, {5, 7, 1, 1, 1, 0, 1, 1}},
    {-24, {5, 7, 1, 1, 0, 1, 1, 1}},
    {-24, {5, 7, 1, 0, 1, 0, 3, 0}},
    {32, {5, 7, 1, 0, 1, 0, 1, 2}},
    {-18, {5, 7, 1, 0, 0, 1, 3, 0}},
    {160, {5, 7, 0, 2, 0, 0, 1, 1}},
    {48, {5, 7, 0, 1, 0, 0, 3, 0}},
    {38, {5, 7, 0, 0, 0, 0, 3, 1}},
    {-16, {5, 7, 0, 0, 0, 0, 1, 3}},
    {256, {4, 8, 2, 2, 1, 1, 0, 0}},
    {64, {4, 8, 2, 2, 0, 2, 0, 0}},
    {128, {4, 8, 2, 1, 1, 1, 0, 1}},
    {-6, {4, 8, 2, 0, 2, 0, 2, 0}},
    {256, {4, 8, 1, 2, 1, 0, 0, 1}},
    {-128, {4, 8, 1, 2, 0, 1, 0, 1}},
    {-28, {4, 8, 1, 1, 1, 0, 2, 0}},
    {128, {4, 8, 1, 1, 1, 0, 0, 2}},
    {108, {4, 8, 1, 1, 0, 1, 2, 0}},
    {-128, {4, 8, 1, 1, 0, 1, 0, 2}},
    {16, {4, 8, 1, 0, 1, 0, 2, 1}},
    {-128, {4, 8, 0, 2, 0, 0, 2, 0}},
    {-192, {4, 8, 0, 2, 0, 0, 0, 2}},
    {72, {4, 8, 0, 1, 0, 0, 2, 1}},
    {-128, {4, 8, 0, 1, 0, 0, 0, 3}},
    {24, {4, 8, 0, 0, 0, 0, 4, 0}},
    {-10, {4, 8, 0, 0, 0, 0, 2, 2}},
    {-40, {3, 9, 2, 1, 2, 0, 1, 0}},
    {24, {3, 9, 2, 1, 1, 1, 1, 0}},
    {-16, {3, 9, 2, 0, 2, 0, 1, 1}},
    {-160, {3, 9, 1, 2, 1, 0, 1, 0}},
    {-80, {3, 9, 1, 2, 0, 1, 1, 0}},
    {24, {3, 9, 1, 1, 1, 0, 1, 1}},
    {-24, {3, 9, 1, 1, 0, 1, 1, 1}},
    {-6, {3, 9, 1, 0, 1, 0, 3, 0}},
    {32, {3, 9, 1, 0, 1, 0, 1, 2}},
    {80, {3, 9, 0, 2, 0, 0, 1, 1}},
    {-80, {3, 9, 0, 1, 0, 0, 3, 0}},
    {16, {3, 9, 0, 1, 0, 0, 1, 2}},
    {6, {3, 9, 0, 0, 0, 0, 3, 1}},
    {-16, {3, 9, 0, 0, 0, 0, 1, 3}},
    {-128, {2, 10, 2, 2, 2, 0, 0, 0}},
    {-128, {2, 10, 2, 2, 1, 1, 0, 0}},
    {-64, {2, 10, 2, 1, 2, 0, 0, 1}},
    {-9, {2, 10, 2, 0, 2, 0, 2, 0}},
    {128, {2, 10, 1, 2, 1, 0, 0, 1}},
    {128, {2, 10, 1, 2, 0, 1, 0, 1}},
    {-76, {2, 10, 1, 1, 1, 0, 2, 0}},
    {128, {2, 10, 1, 1, 1, 0, 0, 2}},
    {18, {2, 10, 1, 0, 1, 0, 2, 1}},
    {64, {2, 10, 0, 2, 0, 0, 2, 0}},
    {76, {2, 10, 0, 1, 0, 0, 2, 1}},
    {-64, {2, 10, 0, 1, 0, 0, 0, 3}},
    {-9, {2, 10, 0, 0, 0, 0, 2, 2}},
    {16, {1, 11, 2, 1, 2, 0, 1, 0}},
    {80, {1, 11, 1, 2, 1, 0, 1, 0}},
    {-32, {1, 11, 1, 1, 1, 0, 1, 1}},
    {-80, {1, 11, 0, 2, 0, 0, 1, 1}},
    {16, {1, 11, 0, 1, 0, 0, 1, 2}},
    {64, {0, 12, 2, 2, 2, 0, 0, 0}},
    {-128, {0, 12, 1, 2, 1, 0, 0, 1}},
    {64, {0, 12, 0, 2, 0, 0, 0, 2}},
};
static const MonoTerm a7_den[] = {
    {24, {12, 6, 3, 0, 0, 3, 0, 0}},
    {72, {12, 6, 2, 0, 0, 2, 0, 1}},
    {72, {12, 6, 1, 0, 0, 1, 0, 2}},
    {24, {12, 6, 0, 0, 0, 0, 0, 3}},
    {144, {11, 7, 2, 0, 0, 2, 1, 0}},
    {288, {11, 7, 1, 0, 0, 1, 1, 1}},
    {144, {11, 7, 0, 0, 0, 0, 1, 2}},
    {-72, {10, 8, 3, 0, 1, 2, 0, 0}},
    {-144, {10, 8, 2, 0, 1, 1, 0, 1}},
    {72, {10, 8, 2, 0, 0, 2, 0, 1}},
    {-72, {10, 8, 1, 0, 1, 0, 0, 2}},
    {288, {10, 8, 1, 0, 0, 1, 2, 0}},
    {144, {10, 8, 1, 0, 0, 1, 0, 2}},
    {288, {10, 8, 0, 0, 0, 0, 2, 1}},
    {72, {10, 8, 0, 0, 0, 0, 0, 3}},
    {-288, {9, 9, 2, 0, 1, 1, 1, 0}},
    {-288, {9, 9, 1, 0, 1, 0, 1, 1}},
    {288, {9, 9, 1, 0, 0, 1, 1, 1}},
    {192, {9, 9, 0, 0, 0, 0, 3, 0}},
    {288, {9, 9, 0, 0, 0, 0, 1, 2}},
    {72, {8, 10, 3, 0, 2, 1, 0, 0}},
    {72, {8, 10, 2, 0, 2, 0, 0, 1}},
    {-144, {8, 10, 2, 0, 1, 1, 0, 1}},
    {-288, {8, 10, 1, 0, 1, 0, 2, 0}},
    {-144, {8, 10, 1, 0, 1, 0, 0, 2}},
    {72, {8, 10, 1, 0, 0, 1, 0, 2}},
    {288, {8, 10, 0, 0, 0, 0, 2, 1}},
    {72, {8, 10, 0, 0, 0, 0, 0, 3}},
    {144, {7, 11, 2, 0, 2, 0, 1, 0}},
    {-288, {7, 11, 1, 0, 1, 0, 1, 1}},
    {144, {7, 11, 0, 0, 0, 0, 1, 2}},
    {-24, {6, 12, 3, 0, 3, 0, 0, 0}},
    {72, {6, 12, 2, 0, 2, 0, 0, 1}},
    {-72, {6, 12, 1, 0, 1, 0, 0, 2}},
    {24, {6, 12, 0, 0, 0, 0, 0, 3}},
};
static const MonoTerm a8_num[] = {
    {3, {12, 0, 3, 1, 0, 3, 0, 0}},
    {486, {12, 0, 2, 2, 0, 2, 0, 0}},
    {9, {12, 0, 2, 1, 0, 2, 0, 1}},
    {972, {12, 0, 1, 2, 0, 1, 0, 1}},
    {9, {12, 0, 1, 1, 0, 1, 0, 2}},
    {486, {12, 0, 0, 2, 0, 0, 0, 2}},
    {3, {12, 0, 0, 1, 0, 0, 0, 3}},
    {28, {11, 1, 2, 1, 0, 2, 1, 0}},
    {536, {11, 1, 1, 2, 0, 1, 1, 0}},
    {56, {11, 1, 1, 1, 0, 1, 1, 1}},
    {536, {11, 1, 0, 2, 0, 0, 1, 1}},
    {28, {11, 1, 0, 1, 0, 0, 1, 2}},
    {-6, {10, 2, 3, 1, 1, 2, 0, 0}},
    {-6, {10, 2, 3, 1, 0, 3, 0, 0}},
    {-3, {10, 2, 3, 0, 0, 3, 0, 1}},
    {-972, {10, 2, 2, 2, 1, 1, 0, 0}},
    {-24, {10, 2, 2, 2, 0, 2, 0, 0}},
    {-12, {10, 2, 2, 1, 1, 1, 0, 1}},
    {-24, {10, 2, 2, 1, 0, 2, 0, 1}},
    {-27, {10, 2, 2, 0, 0, 2, 2, 0}},
    {-9, {10, 2, 2, 0, 0, 2, 0, 2}},
    {-972, {10, 2, 1, 2, 1, 0, 0, 1}},
    {924, {10, 2, 1, 2, 0, 1, 0, 1}},
    {-6, {10, 2, 1, 1, 1, 0, 0, 2}},
    {368, {10, 2, 1, 1, 0, 1, 2, 0}},
    {-30, {10, 2, 1, 1, 0, 1, 0, 2}},
    {-54, {10, 2, 1, 0, 0, 1, 2, 1}},
    {-9, {10, 2, 1, 0, 0, 1, 0, 3}},
    {-920, {10, 2, 0, 2, 0, 0, 2, 0}},
    {948, {10, 2, 0, 2, 0, 0, 0, 2}},
    {368, {10, 2, 0, 1, 0, 0, 2, 1}},
    {-12, {10, 2, 0, 1, 0, 0, 0, 3}},
    {-27, {10, 2, 0, 0, 0, 0, 2, 2}},
    {-3, {10, 2, 0, 0, 0, 0, 0, 4}},
    {212, {9, 3, 2, 1, 1, 1, 1, 0}},
    {184, {9, 3, 2, 1, 0, 2, 1, 0}},
    {-28, {9, 3, 2, 0, 0, 2, 1, 1}},
    {-536, {9, 3, 1, 2, 1, 0, 1, 0}},
    {-224, {9, 3, 1, 2, 0, 1, 1, 0}},
    {212, {9, 3, 1, 1, 1, 0, 1, 1}},
    {44, {9, 3, 1, 1, 0, 1, 1, 1}},
    {-84, {9, 3, 1, 0, 0, 1, 3, 0}},
    {-56, {9, 3, 1, 0, 0, 1, 1, 2}},
    {312, {9, 3, 0, 2, 0, 0, 1, 1}},
    {720, {9, 3, 0, 1, 0, 0, 3, 0}},
    {-140, {9, 3, 0, 1, 0, 0, 1, 2}},
    {-84, {9, 3, 0, 0, 0, 0, 3, 1}},
    {-28, {9, 3, 0, 0, 0, 0, 1, 3}},
    {3, {8, 4, 3, 1, 2, 1, 0, 0}},
    {9, {8, 4, 3, 1, 1, 2, 0, 0}},
    {3, {8, 4, 3, 1, 0, 3, 0, 0}},
    {6, {8, 4, 3, 0, 1, 2, 0, 1}},
    {486, {8, 4, 2, 2, 2, 0, 0, 0}},
    {48, {8, 4, 2, 2, 1, 1, 0, 0}},
    {-924, {8, 4, 2, 2, 0, 2, 0, 0}},
    {3, {8, 4, 2, 1, 2, 0, 0, 1}},
    {36, {8, 4, 2, 1, 1, 1, 0, 1}},
    {24, {8, 4, 2, 1, 0, 2, 0, 1}},
    {-12, {8, 4, 2, 0, 1, 1, 2, 0}},
    {12, {8, 4, 2, 0, 1, 1, 0, 2}},
    {6, {8, 4, 2, 0, 0, 2, 2, 0}},
    {-924, {8, 4, 1, 2, 1, 0, 0, 1}},
    {-1896, {8, 4, 1, 2, 0, 1, 0, 1}},
    {132, {8, 4, 1, 1, 1, 0, 2, 0}},
    {27, {8, 4, 1, 1, 1, 0, 0, 2}},
    {92, {8, 4, 1, 1, 0, 1, 2, 0}},
    {18, {8, 4, 1, 1, 0, 1, 0, 2}},
    {-12, {8, 4, 1, 0, 1, 0, 2, 1}},
    {6, {8, 4, 1, 0, 1, 0, 0, 3}},
    {16, {8, 4, 1, 0, 0, 1, 2, 1}},
    {-160, {8, 4, 0, 2, 0, 0, 2, 0}},
    {-486, {8, 4, 0, 2, 0, 0, 0, 2}},
    {-120, {8, 4, 0, 1, 0, 0, 2, 1}},
    {-3, {8, 4, 0, 1, 0, 0, 0, 3}},
    {-84, {8, 4, 0, 0, 0, 0, 4, 0}},
    {10, {8, 4, 0, 0, 0, 0, 2, 2}},
    {-240, {7, 5, 2, 1, 2, 0, 1, 0}},
    {-212, {7, 5, 2, 1, 1, 1, 1, 0}},
    {28, {7, 5, 2, 1, 0, 2, 1, 0}},
    {28, {7, 5, 2, 0, 1, 1, 1, 1}},
    {224, {7, 5, 1, 2, 1, 0, 1, 0}},
    {-624, {7, 5, 1, 2, 0, 1, 1, 0}},
    {380, {7, 5, 1, 1, 1, 0, 1, 1}},
    {492, {7, 5, 1, 1, 0, 1, 1, 1}},
    {-36, {7, 5, 1, 0, 1, 0, 3, 0}},
    {28, {7, 5, 1, 0, 1, 0, 1, 2}},
    {168, {7, 5, 1, 0, 0, 1, 3, 0}},
    {28, {7, 5, 1, 0, 0, 1, 1, 2}},
    {-848, {7, 5, 0, 2, 0, 0, 1, 1}},
    {-720, {7, 5, 0, 1, 0, 0, 3, 0}},
    {112, {7, 5, 0, 1, 0, 0, 1, 2}},
    {204, {7, 5, 0, 0, 0, 0, 3, 1}},
    {28, {7, 5, 0, 0, 0, 0, 1, 3}},
    {-3, {6, 6, 3, 0, 2, 1, 0, 1}},
    {3, {6, 6, 3, 0, 1, 2, 0, 1}},
    {-24, {6, 6, 2, 2, 2, 0, 0, 0}},
    {1848, {6, 6, 2, 2, 1, 1, 0, 0}},
    {-24, {6, 6, 2, 2, 0, 2, 0, 0}},
    {-12, {6, 6, 2, 1, 2, 0, 0, 1}},
    {-48, {6, 6, 2, 1, 1, 1, 0, 1}},
    {-12, {6, 6, 2, 1, 0, 2, 0, 1}},
    {39, {6, 6, 2, 0, 2, 0, 2, 0}},
    {-3, {6, 6, 2, 0, 2, 0, 0, 2}},
    {-12, {6, 6, 2, 0, 1, 1, 2, 0}},
    {39, {6, 6, 2, 0, 0, 2, 2, 0}},
    {-3, {6, 6, 2, 0, 0, 2, 0, 2}},
    {1896, {6, 6, 1, 2, 1, 0, 0, 1}},
    {-1896, {6, 6, 1, 2, 0, 1, 0, 1}},
    {328, {6, 6, 1, 1, 1, 0, 2, 0}},
    {-24, {6, 6, 1, 1, 1, 0, 0, 2}},
    {-328, {6, 6, 1, 1, 0, 1, 2, 0}},
    {24, {6, 6, 1, 1, 0, 1, 0, 2}},
    {-102, {6, 6, 1, 0, 1, 0, 2, 1}},
    {-3, {6, 6, 1, 0, 1, 0, 0, 3}},
    {102, {6, 6, 1, 0, 0, 1, 2, 1}},
    {3, {6, 6, 1, 0, 0, 1, 0, 3}},
    {2160, {6, 6, 0, 2, 0, 0, 2, 0}},
    {-1896, {6, 6, 0, 2, 0, 0, 0, 2}},
    {-496, {6, 6, 0, 1, 0, 0, 2, 1}},
    {24, {6, 6, 0, 1, 0, 0, 0, 3}},
    {288, {6, 6, 0, 0, 0, 0, 4, 0}},
    {154, {6, 6, 0, 0, 0, 0, 2, 2}},
    {6, {6, 6, 0, 0, 0, 0, 0, 4}},
    {28, {5, 7, 2, 1, 2, 0, 1, 0}},
    {-212, {5, 7, 2, 1, 1, 1, 1, 0}},
    {-240, {5, 7, 2, 1, 0, 2, 1, 0}},
    {28, {5, 7, 2, 0, 1, 1, 1, 1}},
    {624, {5, 7, 1, 2, 1, 0, 1, 0}},
    {-224, {5, 7, 1, 2, 0, 1, 1, 0}},
    {-492, {5, 7, 1, 1, 1, 0, 1, 1}},
    {-380, {5, 7, 1, 1, 0, 1, 1, 1}},
    {-168, {5, 7, 1, 0, 1, 0, 3, 0}},
    {-28, {5, 7, 1, 0, 1, 0, 1, 2}},
    {36, {5, 7, 1, 0, 0, 1, 3, 0}},
    {-28, {5, 7, 1, 0, 0, 1, 1, 2}},
    {-848, {5, 7, 0, 2, 0, 0, 1, 1}},
    {-720, {5, 7, 0, 1, 0, 0, 3, 0}},
    {112, {5, 7, 0, 1, 0, 0, 1, 2}},
    {204, {5, 7, 0, 0, 0, 0, 3, 1}},
    {28, {5, 7, 0, 0, 0, 0, 1, 3}},
    {-3, {4, 8, 3, 1, 3, 0, 0, 0}},
    {-9, {4, 8, 3, 1, 2, 1, 0, 0}},
    {-3, {4, 8, 3, 1, 1, 2, 0, 0}},
    {-6, {4, 8, 3, 0, 2, 1, 0, 1}},
    {-924, {4, 8, 2, 2, 2, 0, 0, 0}},
    {48, {4, 8, 2, 2, 1, 1, 0, 0}},
    {486, {4, 8, 2, 2, 0, 2, 0, 0}},
    {24, {4, 8, 2, 1, 2, 0, 0, 1}},
    {36, {4, 8, 2, 1, 1, 1, 0, 1}},
    {3, {4, 8, 2, 1, 0, 2, 0, 1}},
    {6, {4, 8, 2, 0, 2, 0, 2, 0}},
    {-12, {4, 8, 2, 0, 1, 1, 2, 0}},
    {12, {4, 8, 2, 0, 1, 1, 0, 2}},
    {1896, {4, 8, 1, 2, 1, 0, 0, 1}},
    {924, {4, 8, 1, 2, 0, 1, 0, 1}},
    {-92, {4, 8, 1, 1, 1, 0, 2, 0}},
    {-18, {4, 8, 1, 1, 1, 0, 0, 2}},
    {-132, {4, 8, 1, 1, 0, 1, 2, 0}},
    {-27, {4, 8, 1, 1, 0, 1, 0, 2}},
    {-16, {4, 8, 1, 0, 1, 0, 2, 1}},
    {12, {4, 8, 1, 0, 0, 1, 2, 1}},
    {-6, {4, 8, 1, 0, 0, 1, 0, 3}},
    {-160, {4, 8, 0, 2, 0, 0, 2, 0}},
    {-486, {4, 8, 0, 2, 0, 0, 0, 2}},
    {-120, {4, 8, 0, 1, 0, 0, 2, 1}},
    {-3, {4, 8, 0, 1, 0, 0, 0, 3}},
    {-84, {4, 8, 0, 0, 0, 0, 4, 0}},
    {10, {4, 8, 0, 0, 0, 0, 2, 2}},
    {184, {3, 9, 2, 1, 2, 0, 1, 0}},
    {212, {3, 9, 2, 1, 1, 1, 1, 0}},
    {-28, {3, 9, 2, 0, 2, 0, 1, 1}},
    {224, {3, 9, 1, 2, 1, 0, 1, 0}},
    {536, {3, 9, 1, 2, 0, 1, 1, 0}},
    {-44, {3, 9, 1, 1, 1, 0, 1, 1}},
    {-212, {3, 9, 1, 1, 0, 1, 1, 1}},
    {84, {3, 9, 1, 0, 1, 0, 3, 0}},
    {56, {3, 9, 1, 0, 1, 0, 1, 2}},
    {312, {3, 9, 0, 2, 0, 0, 1, 1}},
    {720, {3, 9, 0, 1, 0, 0, 3, 0}},
    {-140, {3, 9, 0, 1, 0, 0, 1, 2}},
    {-84, {3, 9, 0, 0, 0, 0, 3, 1}},
    {-28, {3, 9, 0, 0, 0, 0, 1, 3}},
    {6, {2, 10, 3, 1, 3, 0, 0, 0}},
    {6, {2, 10, 3, 1, 2, 1, 0, 0}},
    {3, {2, 10, 3, 0, 3, 0, 0, 1}},
    {-24, {2, 10, 2, 2, 2, 0, 0, 0}},
    {-972, {2, 10, 2, 2, 1, 1, 0, 0}},
    {-24, {2, 10, 2, 1, 2, 0, 0, 1}},
    {-12, {2, 10, 2, 1, 1, 1, 0, 1}},
    {-27, {2, 10, 2, 0, 2, 0, 2, 0}},
    {-9, {2, 10, 2, 0, 2, 0, 0, 2}},
    {-924, {2, 10, 1, 2, 1, 0, 0, 1}},
    {972, {2, 10, 1, 2, 0, 1, 0, 1}},
    {-368, {2, 10, 1, 1, 1, 0, 2, 0}},
    {30, {2, 10, 1, 1, 1, 0, 0, 2}},
    {6, {2, 10, 1, 1, 0, 1, 0, 2}},
    {54, {2, 10, 1, 0, 1, 0, 2, 1}},
    {9, {2, 10, 1, 0, 1, 0, 0, 3}},
    {-920, {2, 10, 0, 2, 0, 0, 2, 0}},
    {948, {2, 10, 0, 2, 0, 0, 0, 2}},
    {368, {2, 10, 0, 1, 0, 0, 2, 1}},
    {-12, {2, 10, 0, 1, 0, 0, 0, 3}},
    {-27, {2, 10, 0, 0, 0, 0, 2, 2}},
    {-3, {2, 10, 0, 0, 0, 0, 0, 4}},
    {28, {1, 11, 2, 1, 2, 0, 1, 0}},
    {-536, {1, 11, 1, 2, 1, 0, 1, 0}},
    {-56, {1, 11, 1, 1, 1, 0, 1, 1}},
    {536, {1, 11, 0, 2, 0, 0, 1, 1}},
    {28, {1, 11, 0, 1, 0, 0, 1, 2}},
    {-3, {0, 12, 3, 1, 3, 0, 0, 0}},
    {486, {0, 12, 2, 2, 2, 0, 0, 0}},
    {9, {0, 12, 2, 1, 2, 0, 0, 1}},
    {-972, {0, 12, 1, 2, 1, 0, 0, 1}},
    {-9, {0, 12, 1, 1, 1, 0, 0, 2}},
    {486, {0, 12, 0, 2, 0, 0, 0, 2}},
    {3, {0, 12, 0, 1, 0, 0, 0, 3}},
};
static const MonoTerm a8_den[] = {
    {240, {12, 6, 3, 0, 0, 3, 0, 0}},
    {720, {12, 6, 2, 0, 0, 2, 0, 1}},
    {720, {12, 6, 1, 0, 0, 1, 0, 2}},
    {240, {12, 6, 0, 0, 0, 0, 0, 3}},
    {1440, {11, 7, 2, 0, 0, 2, 1, 0}},
    {2880, {11, 7, 1, 0, 0, 1, 1, 1}},
    {1440, {11, 7, 0, 0, 0, 0, 1, 2}},
    {-720, {10, 8, 3, 0, 1, 2, 0, 0}},
    {-1440, {10, 8, 2, 0, 1, 1, 0, 1}},
    {720, {10, 8, 2, 0, 0, 2, 0, 1}},
    {-720, {10, 8, 1, 0, 1, 0, 0, 2}},
    {2880, {10, 8, 1, 0, 0, 1, 2, 0}},
    {1440, {10, 8, 1, 0, 0, 1, 0, 2}},
    {2880, {10, 8, 0, 0, 0, 0, 2, 1}},
    {720, {10, 8, 0, 0, 0, 0, 0, 3}},
    {-2880, {9, 9, 2, 0, 1, 1, 1, 0}},
    {-2880, {9, 9, 1, 0, 1, 0, 1, 1}},
    {2880, {9, 9, 1, 0, 0, 1, 1, 1}},
    {1920, {9, 9, 0, 0, 0, 0, 3, 0}},
    {2880, {9, 9, 0, 0, 0, 0, 1, 2}},
    {720, {8, 10, 3, 0, 2, 1, 0, 0}},
    {720, {8, 10, 2, 0, 2, 0, 0, 1}},
    {-1440, {8, 10, 2, 0, 1, 1, 0, 1}},
    {-2880, {8, 10, 1, 0, 1, 0, 2, 0}},
    {-1440, {8, 10, 1, 0, 1, 0, 0, 2}},
    {720, {8, 10, 1, 0, 0, 1, 0, 2}},
    {2880, {8, 10, 0, 0, 0, 0, 2, 1}},
    {720, {8, 10, 0, 0, 0, 0, 0, 3}},
    {1440, {7, 11, 2, 0, 2, 0, 1, 0}},
    {-2880, {7, 11, 1, 0, 1, 0, 1, 1}},
    {1440, {7, 11, 0, 0, 0, 0, 1, 2}},
    {-240, {6, 12, 3, 0, 3, 0, 0, 0}},
    {720, {6, 12, 2, 0, 2, 0, 0, 1}},
    {-720, {6, 12, 1, 0, 1, 0, 0, 2}},
    {240, {6, 12, 0, 0, 0, 0, 0, 3}},
};
static const MonoTerm a9_num[] = {
    {0, {0, 0, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm a9_den[] = {
    {1, {0, 0, 0, 0, 0, 0, 0, 0}},
};
static const MonoTerm e1_num[] = {
    {-10, {6, 0, 1, 1, 0, 1, 0, 0}},
    {-10, {6, 0, 0, 1, 0, 0, 0, 1}},
    {3, {5, 1, 1, 0, 0, 1, 1, 0}},
    {4, {5, 1, 0, 1, 0, 0, 1, 0}},
    {3, {5, 1, 0, 0, 0, 0, 1, 1}},
    {10, {4, 2, 1, 1, 1, 0, 0, 0}},
    {20, {4, 2, 1, 1, 0, 1, 0, 0}},
    {10, {4, 2, 1, 0, 0, 1, 0, 1}},
    {10, {4, 2, 0, 1, 0, 0, 0, 1}},
    {-6, {4, 2, 0, 0, 0, 0, 2, 0}},
    {10, {4, 2, 0, 0, 0, 0, 0, 2}},
    {-3, {3, 3, 1, 0, 1, 0, 1, 0}},
    {3, {3, 3, 1, 0, 0, 1, 1, 0}},
    {-8, {3, 3, 0, 1, 0, 0, 1, 0}},
    {2, {3, 3, 0, 0, 0, 0, 1, 1}},
    {-20, {2, 4, 1, 1, 1, 0, 0, 0}},
    {-10, {2, 4, 1, 1, 0, 1, 0, 0}},
    {-10, {2, 4, 1, 0, 1, 0, 0, 1}},
    {10, {2, 4, 0, 1, 0, 0, 0, 1}},
    {-6, {2, 4, 0, 0, 0, 0, 2, 0}},
    {10, {2, 4, 0, 0, 0, 0, 0, 2}},
    {-3, {1, 5, 1, 0, 1, 0, 1, 0}},
    {4, {1, 5, 0, 1, 0, 0, 1, 0}},
    {3, {1, 5, 0, 0, 0, 0, 1, 1}},
    {10, {0, 6, 1, 1, 1, 0, 0, 0}},
    {-10, {0, 6, 0, 1, 0, 0, 0, 1}},
};
static const MonoTerm e1_den[] = {
    {12, {6, 2, 2, 0, 0, 2, 0, 0}},
    {24, {6, 2, 1, 0, 0, 1, 0, 1}},
    {12, {6, 2, 0, 0, 0, 0, 0, 2}},
    {48, {5, 3, 1, 0, 0, 1, 1, 0}},
    {48, {5, 3, 0, 0, 0, 0, 1, 1}},
    {-24, {4, 4, 2, 0, 1, 1, 0, 0}},
    {-24, {4, 4, 1, 0, 1, 0, 0, 1}},
    {24, {4, 4, 1, 0, 0, 1, 0, 1}},
    {48, {4, 4, 0, 0, 0, 0, 2, 0}},
    {24, {4, 4, 0, 0, 0, 0, 0, 2}},
    {-48, {3, 5, 1, 0, 1, 0, 1, 0}},
    {48, {3, 5, 0, 0, 0, 0, 1, 1}},
    {12, {2, 6, 2, 0, 2, 0, 0, 0}},
    {-24, {2, 6, 1, 0, 1, 0, 0, 1}},
    {12, {2, 6, 0, 0, 0, 0, 0, 2}},
};
static const MonoTerm e2_num[] = {
    {-2, {4, 0, 0, 1, 0, 0, 0, 0}},
    {1, {3, 1, 0, 0, 0, 0, 1, 0}},
    {4, {2, 2, 0, 1, 0, 0, 0, 0}},
    {2, {2, 2, 0, 0, 0, 0, 0, 1}},
    {1, {1, 3, 0, 0, 0, 0, 1, 0}},
    {-2, {0, 4, 0, 1, 0, 0, 0, 0}},
};
static const MonoTerm e2_den[] = {
    {4, {4, 2, 1, 0, 0, 1, 0, 0}},
    {4, {4, 2, 0, 0, 0, 0, 0, 1}},
    {8, {3, 3, 0, 0, 0, 0, 1, 0}},
    {-4, {2, 4, 1, 0, 1, 0, 0, 0}},
    {4, {2, 4, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm e3_num[] = {
    {4, {4, 0, 0, 1, 0, 0, 0, 0}},
    {-1, {3, 1, 0, 0, 0, 0, 1, 0}},
    {1, {1, 3, 0, 0, 0, 0, 1, 0}},
    {-4, {0, 4, 0, 1, 0, 0, 0, 0}},
};
static const MonoTerm e3_den[] = {
    {4, {4, 2, 1, 0, 0, 1, 0, 0}},
    {4, {4, 2, 0, 0, 0, 0, 0, 1}},
    {8, {3, 3, 0, 0, 0, 0, 1, 0}},
    {-4, {2, 4, 1, 0, 1, 0, 0, 0}},
    {4, {2, 4, 0, 0, 0, 0, 0, 1}},
};
static const MonoTerm f1_num[] = {
    {296, {12, 0, 3, 1, 0, 3, 0, 0}},
    {592, {12, 0, 2, 2, 0, 2, 0, 0}},
    {888, {12, 0, 2, 1, 0, 2, 0, 1}},
    {1184, {12, 0, 1, 2, 0, 1, 0, 1}},
    {888, {12, 0, 1, 1, 0, 1, 0, 2}},
    {592, {12, 0, 0, 2, 0, 0, 0, 2}},
    {296, {12, 0, 0, 1, 0, 0, 0, 3}},
    {-45, {11, 1, 3, 0, 0, 3, 1, 0}},
    {-664, {11, 1, 2, 1, 0, 2, 1, 0}},
    {-135, {11, 1, 2, 0, 0, 2, 1, 1}},
    {-1088, {11, 1, 1, 2, 0, 1, 1, 0}},
    {-1328, {11, 1, 1, 1, 0, 1, 1, 1}},
    {-135, {11, 1, 1, 0, 0, 1, 1, 2}},
    {-1088, {11, 1, 0, 2, 0, 0, 1, 1}},
    {-664, {11, 1, 0, 1, 0, 0, 1, 2}},
    {-45, {11, 1, 0, 0, 0, 0, 1, 3}},
    {-592, {10, 2, 3, 1, 1, 2, 0, 0}},
    {-592, {10, 2, 3, 1, 0, 3, 0, 0}},
    {-296, {10, 2, 3, 0, 0, 3, 0, 1}},
    {-1184, {10, 2, 2, 2, 1, 1, 0, 0}},
    {-2368, {10, 2, 2, 2, 0, 2, 0, 0}},
    {-1184, {10, 2, 2, 1, 1, 1, 0, 1}},
    {-2368, {10, 2, 2, 1, 0, 2, 0, 1}},
    {486, {10, 2, 2, 0, 0, 2, 2, 0}},
    {-888, {10, 2, 2, 0, 0, 2, 0, 2}},
    {-1184, {10, 2, 1, 2, 1, 0, 0, 1}},
    {-3552, {10, 2, 1, 2, 0, 1, 0, 1}},
    {-592, {10, 2, 1, 1, 1, 0, 0, 2}},
    {1856, {10, 2, 1, 1, 0, 1, 2, 0}},
    {-2960, {10, 2, 1, 1, 0, 1, 0, 2}},
    {972, {10, 2, 1, 0, 0, 1, 2, 1}},
    {-888, {10, 2, 1, 0, 0, 1, 0, 3}},
    {1600, {10, 2, 0, 2, 0, 0, 2, 0}},
    {-1184, {10, 2, 0, 2, 0, 0, 0, 2}},
    {1856, {10, 2, 0, 1, 0, 0, 2, 1}},
    {-1184, {10, 2, 0, 1, 0, 0, 0, 3}},
    {486, {10, 2, 0, 0, 0, 0, 2, 2}},
    {-296, {10, 2, 0, 0, 0, 0, 0, 4}},
    {75, {9, 3, 3, 0, 1, 2, 1, 0}},
    {-90, {9, 3, 3, 0, 0, 3, 1, 0}},
    {784, {9, 3, 2, 1, 1, 1, 1, 0}},
    {1208, {9, 3, 2, 1, 0, 2, 1, 0}},
    {150, {9, 3, 2, 0, 1, 1, 1, 1}},
    {319, {9, 3, 2, 0, 0, 2, 1, 1}},
    {1088, {9, 3, 1, 2, 1, 0, 1, 0}},
    {4352, {9, 3, 1, 2, 0, 1, 1, 0}},
    {784, {9, 3, 1, 1, 1, 0, 1, 1}},
    {3808, {9, 3, 1, 1, 0, 1, 1, 1}},
    {75, {9, 3, 1, 0, 1, 0, 1, 2}},
    {-348, {9, 3, 1, 0, 0, 1, 3, 0}},
    {908, {9, 3, 1, 0, 0, 1, 1, 2}},
    {3264, {9, 3, 0, 2, 0, 0, 1, 1}},
    {-480, {9, 3, 0, 1, 0, 0, 3, 0}},
    {2600, {9, 3, 0, 1, 0, 0, 1, 2}},
    {-348, {9, 3, 0, 0, 0, 0, 3, 1}},
    {499, {9, 3, 0, 0, 0, 0, 1, 3}},
    {296, {8, 4, 3, 1, 2, 1, 0, 0}},
    {888, {8, 4, 3, 1, 1, 2, 0, 0}},
    {296, {8, 4, 3, 1, 0, 3, 0, 0}},
    {592, {8, 4, 3, 0, 1, 2, 0, 1}},
    {592, {8, 4, 2, 2, 2, 0, 0, 0}},
    {4736, {8, 4, 2, 2, 1, 1, 0, 0}},
    {3552, {8, 4, 2, 2, 0, 2, 0, 0}},
    {296, {8, 4, 2, 1, 2, 0, 0, 1}},
    {3552, {8, 4, 2, 1, 1, 1, 0, 1}},
    {2368, {8, 4, 2, 1, 0, 2, 0, 1}},
    {-444, {8, 4, 2, 0, 1, 1, 2, 0}},
    {1184, {8, 4, 2, 0, 1, 1, 0, 2}},
    {612, {8, 4, 2, 0, 0, 2, 2, 0}},
    {3552, {8, 4, 1, 2, 1, 0, 0, 1}},
    {2368, {8, 4, 1, 2, 0, 1, 0, 1}},
    {-1056, {8, 4, 1, 1, 1, 0, 2, 0}},
    {2664, {8, 4, 1, 1, 1, 0, 0, 2}},
    {-2656, {8, 4, 1, 1, 0, 1, 2, 0}},
    {1776, {8, 4, 1, 1, 0, 1, 0, 2}},
    {-444, {8, 4, 1, 0, 1, 0, 2, 1}},
    {592, {8, 4, 1, 0, 1, 0, 0, 3}},
    {-188, {8, 4, 1, 0, 0, 1, 2, 1}},
    {-6400, {8, 4, 0, 2, 0, 0, 2, 0}},
    {-592, {8, 4, 0, 2, 0, 0, 0, 2}},
    {-4800, {8, 4, 0, 1, 0, 0, 2, 1}},
    {-296, {8, 4, 0, 1, 0, 0, 0, 3}},
    {72, {8, 4, 0, 0, 0, 0, 4, 0}},
    {-800, {8, 4, 0, 0, 0, 0, 2, 2}},
    {-15, {7, 5, 3, 0, 2, 1, 1, 0}},
    {270, {7, 5, 3, 0, 1, 2, 1, 0}},
    {15, {7, 5, 3, 0, 0, 3, 1, 0}},
    {-120, {7, 5, 2, 1, 2, 0, 1, 0}},
    {-784, {7, 5, 2, 1, 1, 1, 1, 0}},
    {-424, {7, 5, 2, 1, 0, 2, 1, 0}},
    {-15, {7, 5, 2, 0, 2, 0, 1, 1}},
    {-214, {7, 5, 2, 0, 1, 1, 1, 1}},
    {-105, {7, 5, 2, 0, 0, 2, 1, 1}},
    {-4352, {7, 5, 1, 2, 1, 0, 1, 0}},
    {-6528, {7, 5, 1, 2, 0, 1, 1, 0}},
    {-2720, {7, 5, 1, 1, 1, 0, 1, 1}},
    {-4416, {7, 5, 1, 1, 0, 1, 1, 1}},
    {108, {7, 5, 1, 0, 1, 0, 3, 0}},
    {-484, {7, 5, 1, 0, 1, 0, 1, 2}},
    {-24, {7, 5, 1, 0, 0, 1, 3, 0}},
    {-574, {7, 5, 1, 0, 0, 1, 1, 2}},
    {-2176, {7, 5, 0, 2, 0, 0, 1, 1}},
    {480, {7, 5, 0, 1, 0, 0, 3, 0}},
    {-1936, {7, 5, 0, 1, 0, 0, 1, 2}},
    {348, {7, 5, 0, 0, 0, 0, 3, 1}},
    {-454, {7, 5, 0, 0, 0, 0, 1, 3}},
    {-296, {6, 6, 3, 0, 2, 1, 0, 1}},
    {296, {6, 6, 3, 0, 1, 2, 0, 1}},
    {-2368, {6, 6, 2, 2, 2, 0, 0, 0}},
    {-7104, {6, 6, 2, 2, 1, 1, 0, 0}},
    {-2368, {6, 6, 2, 2, 0, 2, 0, 0}},
    {-1184, {6, 6, 2, 1, 2, 0, 0, 1}},
    {-4736, {6, 6, 2, 1, 1, 1, 0, 1}},
    {-1184, {6, 6, 2, 1, 0, 2, 0, 1}},
    {-42, {6, 6, 2, 0, 2, 0, 2, 0}},
    {-296, {6, 6, 2, 0, 2, 0, 0, 2}},
    {-1224, {6, 6, 2, 0, 1, 1, 2, 0}},
    {-42, {6, 6, 2, 0, 0, 2, 2, 0}},
    {-296, {6, 6, 2, 0, 0, 2, 0, 2}},
    {-2368, {6, 6, 1, 2, 1, 0, 0, 1}},
    {2368, {6, 6, 1, 2, 0, 1, 0, 1}},
    {256, {6, 6, 1, 1, 1, 0, 2, 0}},
    {-2368, {6, 6, 1, 1, 1, 0, 0, 2}},
    {-256, {6, 6, 1, 1, 0, 1, 2, 0}},
    {2368, {6, 6, 1, 1, 0, 1, 0, 2}},
    {-84, {6, 6, 1, 0, 1, 0, 2, 1}},
    {-296, {6, 6, 1, 0, 1, 0, 0, 3}},
    {84, {6, 6, 1, 0, 0, 1, 2, 1}},
    {296, {6, 6, 1, 0, 0, 1, 0, 3}},
    {9600, {6, 6, 0, 2, 0, 0, 2, 0}},
    {2368, {6, 6, 0, 2, 0, 0, 0, 2}},
    {5888, {6, 6, 0, 1, 0, 0, 2, 1}},
    {2368, {6, 6, 0, 1, 0, 0, 0, 3}},
    {-144, {6, 6, 0, 0, 0, 0, 4, 0}},
    {628, {6, 6, 0, 0, 0, 0, 2, 2}},
    {592, {6, 6, 0, 0, 0, 0, 0, 4}},
    {-15, {5, 7, 3, 0, 3, 0, 1, 0}},
    {-270, {5, 7, 3, 0, 2, 1, 1, 0}},
    {15, {5, 7, 3, 0, 1, 2, 1, 0}},
    {-424, {5, 7, 2, 1, 2, 0, 1, 0}},
    {-784, {5, 7, 2, 1, 1, 1, 1, 0}},
    {-120, {5, 7, 2, 1, 0, 2, 1, 0}},
    {-105, {5, 7, 2, 0, 2, 0, 1, 1}},
    {-214, {5, 7, 2, 0, 1, 1, 1, 1}},
    {-15, {5, 7, 2, 0, 0, 2, 1, 1}},
    {6528, {5, 7, 1, 2, 1, 0, 1, 0}},
    {4352, {5, 7, 1, 2, 0, 1, 1, 0}},
    {4416, {5, 7, 1, 1, 1, 0, 1, 1}},
    {2720, {5, 7, 1, 1, 0, 1, 1, 1}},
    {24, {5, 7, 1, 0, 1, 0, 3, 0}},
    {574, {5, 7, 1, 0, 1, 0, 1, 2}},
    {-108, {5, 7, 1, 0, 0, 1, 3, 0}},
    {484, {5, 7, 1, 0, 0, 1, 1, 2}},
    {-2176, {5, 7, 0, 2, 0, 0, 1, 1}},
    {480, {5, 7, 0, 1, 0, 0, 3, 0}},
    {-1936, {5, 7, 0, 1, 0, 0, 1, 2}},
    {348, {5, 7, 0, 0, 0, 0, 3, 1}},
    {-454, {5, 7, 0, 0, 0, 0, 1, 3}},
    {-296, {4, 8, 3, 1, 3, 0, 0, 0}},
    {-888, {4, 8, 3, 1, 2, 1, 0, 0}},
    {-296, {4, 8, 3, 1, 1, 2, 0, 0}},
    {-592, {4, 8, 3, 0, 2, 1, 0, 1}},
    {3552, {4, 8, 2, 2, 2, 0, 0, 0}},
    {4736, {4, 8, 2, 2, 1, 1, 0, 0}},
    {592, {4, 8, 2, 2, 0, 2, 0, 0}},
    {2368, {4, 8, 2, 1, 2, 0, 0, 1}},
    {3552, {4, 8, 2, 1, 1, 1, 0, 1}},
    {296, {4, 8, 2, 1, 0, 2, 0, 1}},
    {612, {4, 8, 2, 0, 2, 0, 2, 0}},
    {-444, {4, 8, 2, 0, 1, 1, 2, 0}},
    {1184, {4, 8, 2, 0, 1, 1, 0, 2}},
    {-2368, {4, 8, 1, 2, 1, 0, 0, 1}},
    {-3552, {4, 8, 1, 2, 0, 1, 0, 1}},
    {2656, {4, 8, 1, 1, 1, 0, 2, 0}},
    {-1776, {4, 8, 1, 1, 1, 0, 0, 2}},
    {1056, {4, 8, 1, 1, 0, 1, 2, 0}},
    {-2664, {4, 8, 1, 1, 0, 1, 0, 2}},
    {188, {4, 8, 1, 0, 1, 0, 2, 1}},
    {444, {4, 8, 1, 0, 0, 1, 2, 1}},
    {-592, {4, 8, 1, 0, 0, 1, 0, 3}},
    {-6400, {4, 8, 0, 2, 0, 0, 2, 0}},
    {-592, {4, 8, 0, 2, 0, 0, 0, 2}},
    {-4800, {4, 8, 0, 1, 0, 0, 2, 1}},
    {-296, {4, 8, 0, 1, 0, 0, 0, 3}},
    {72, {4, 8, 0, 0, 0, 0, 4, 0}},
    {-800, {4, 8, 0, 0, 0, 0, 2, 2}},
    {90, {3, 9, 3, 0, 3, 0, 1, 0}},
    {-75, {3, 9, 3, 0, 2, 1, 1, 0}},
    {1208, {3, 9, 2, 1, 2, 0, 1, 0}},
    {784, {3, 9, 2, 1, 1, 1, 1, 0}},
    {319, {3, 9, 2, 0, 2, 0, 1, 1}},
    {150, {3, 9, 2, 0, 1, 1, 1, 1}},
    {-4352, {3, 9, 1, 2, 1, 0, 1, 0}},
    {-1088, {3, 9, 1, 2, 0, 1, 1, 0}},
    {-3808, {3, 9, 1, 1, 1, 0, 1, 1}},
    {-784, {3, 9, 1, 1, 0, 1, 1, 1}},
    {348, {3, 9, 1, 0, 1, 0, 3, 0}},
    {-908, {3, 9, 1, 0, 1, 0, 1, 2}},
    {-75, {3, 9, 1, 0, 0, 1, 1, 2}},
    {3264, {3, 9, 0, 2, 0, 0, 1, 1}},
    {-480, {3, 9, 0, 1, 0, 0, 3, 0}},
    {2600, {3, 9, 0, 1, 0, 0, 1, 2}},
    {-348, {3, 9, 0, 0, 0, 0, 3, 1}},
    {499, {3, 9, 0, 0, 0, 0, 1, 3}},
    {592, {2, 10, 3, 1, 3, 0, 0, 0}},
    {592, {2, 10, 3, 1, 2, 1, 0, 0}},
    {296, {2, 10, 3, 0, 3, 0, 0, 1}},
    {-2368, {2, 10, 2, 2, 2, 0, 0, 0}},
    {-1184, {2, 10, 2, 2, 1, 1, 0, 0}},
    {-2368, {2, 10, 2, 1, 2, 0, 0, 1}},
    {-1184, {2, 10, 2, 1, 1, 1, 0, 1}},
    {486, {2, 10, 2, 0, 2, 0, 2, 0}},
    {-888, {2, 10, 2, 0, 2, 0, 0, 2}},
    {3552, {2, 10, 1, 2, 1, 0, 0, 1}},
    {1184, {2, 10, 1, 2, 0, 1, 0, 1}},
    {-1856, {2, 10, 1, 1, 1, 0, 2, 0}},
    {2960, {2, 10, 1, 1, 1, 0, 0, 2}},
    {592, {2, 10, 1, 1, 0, 1, 0, 2}},
    {-972, {2, 10, 1, 0, 1, 0, 2, 1}},
    {888, {2, 10, 1, 0, 1, 0, 0, 3}},
    {1600, {2, 10, 0, 2, 0, 0, 2, 0}},
    {-1184, {2, 10, 0, 2, 0, 0, 0, 2}},
    {1856, {2, 10, 0, 1, 0, 0, 2, 1}},
    {-1184, {2, 10, 0, 1, 0, 0, 0, 3}},
    {486, {2, 10, 0, 0, 0, 0, 2, 2}},
    {-296, {2, 10, 0, 0, 0, 0, 0, 4}},
    {45, {1, 11, 3, 0, 3, 0, 1, 0}},
    {-664, {1, 11, 2, 1, 2, 0, 1, 0}},
    {-135, {1, 11, 2, 0, 2, 0, 1, 1}},
    {1088, {1, 11, 1, 2, 1, 0, 1, 0}},
    {1328, {1, 11, 1, 1, 1, 0, 1, 1}},
    {135, {1, 11, 1, 0, 1, 0, 1, 2}},
    {-1088, {1, 11, 0, 2, 0, 0, 1, 1}},
    {-664, {1, 11, 0, 1, 0, 0, 1, 2}},
    {-45, {1, 11, 0, 0, 0, 0, 1, 3}},
    {-296, {0, 12, 3, 1, 3, 0, 0, 0}},
    {592, {0, 12, 2, 2, 2, 0, 0, 0}},
    {888, {0, 12, 2, 1, 2, 0, 0, 1}},
    {-1184, {0, 12, 1, 2, 1, 0, 0, 1}},
    {-888, {0, 12, 1, 1, 1, 0, 0, 2}},
    {592, {0, 12, 0, 2, 0, 0, 0, 2}},
    {296, {0, 12, 0, 1, 0, 0, 0, 3}},
};
static const MonoTerm f1_den[] = {
    {960, {12, 4, 4, 0, 0, 4, 0, 0}},
    {3840, {12, 4, 3, 0, 0, 3, 0, 1}},
    {5760, {12, 4, 2, 0, 0, 2, 0, 2}},
    {3840, {12, 4, 1, 0, 0, 1, 0, 3}},
    {960, {12, 4, 0, 0, 0, 0, 0, 4}},
    {7680, {11, 5, 3, 0, 0, 3, 1, 0}},
    {23040, {11, 5, 2, 0, 0, 2, 1, 1}},
    {23040, {11, 5, 1, 0, 0, 1, 1, 2}},
    {7680, {11, 5, 0, 0, 0, 0, 1, 3}},
    {-3840, {10, 6, 4, 0, 1, 3, 0, 0}},
    {-11520, {10, 6, 3, 0, 1, 2, 0, 1}},
    {3840, {10, 6, 3, 0, 0, 3, 0, 1}},
    {-11520, {10, 6, 2, 0, 1, 1, 0, 2}},
    {23040, {10, 6, 2, 0, 0, 2, 2, 0}},
    {11520, {10, 6, 2, 0, 0, 2, 0, 2}},
    {-3840, {10, 6, 1, 0, 1, 0, 0, 3}},
    {46080, {10, 6, 1, 0, 0, 1, 2, 1}},
    {11520, {10, 6, 1, 0, 0, 1, 0, 3}},
    {23040, {10, 6, 0, 0, 0, 0, 2, 2}},
    {3840, {10, 6, 0, 0, 0, 0, 0, 4}},
    {-23040, {9, 7, 3, 0, 1, 2, 1, 0}},
    {-46080, {9, 7, 2, 0, 1, 1, 1, 1}},
    {23040, {9, 7, 2, 0, 0, 2, 1, 1}},
    {-23040, {9, 7, 1, 0, 1, 0, 1, 2}},
    {30720, {9, 7, 1, 0, 0, 1, 3, 0}},
    {46080, {9, 7, 1, 0, 0, 1, 1, 2}},
    {30720, {9, 7, 0, 0, 0, 0, 3, 1}},
    {23040, {9, 7, 0, 0, 0, 0, 1, 3}},
    {5760, {8, 8, 4, 0, 2, 2, 0, 0}},
    {11520, {8, 8, 3, 0, 2, 1, 0, 1}},
    {-11520, {8, 8, 3, 0, 1, 2, 0, 1}},
    {5760, {8, 8, 2, 0, 2, 0, 0, 2}},
    {-46080, {8, 8, 2, 0, 1, 1, 2, 0}},
    {-23040, {8, 8, 2, 0, 1, 1, 0, 2}},
    {5760, {8, 8, 2, 0, 0, 2, 0, 2}},
    {-46080, {8, 8, 1, 0, 1, 0, 2, 1}},
    {-11520, {8, 8, 1, 0, 1, 0, 0, 3}},
    {46080, {8, 8, 1, 0, 0, 1, 2, 1}},
    {11520, {8, 8, 1, 0, 0, 1, 0, 3}},
    {15360, {8, 8, 0, 0, 0, 0, 4, 0}},
    {46080, {8, 8, 0, 0, 0, 0, 2, 2}},
    {5760, {8, 8, 0, 0, 0, 0, 0, 4}},
    {23040, {7, 9, 3, 0, 2, 1, 1, 0}},
    {23040, {7, 9, 2, 0, 2, 0, 1, 1}},
    {-46080, {7, 9, 2, 0, 1, 1, 1, 1}},
    {-30720, {7, 9, 1, 0, 1, 0, 3, 0}},
    {-46080, {7, 9, 1, 0, 1, 0, 1, 2}},
    {23040, {7, 9, 1, 0, 0, 1, 1, 2}},
    {30720, {7, 9, 0, 0, 0, 0, 3, 1}},
    {23040, {7, 9, 0, 0, 0, 0, 1, 3}},
    {-3840, {6, 10, 4, 0, 3, 1, 0, 0}},
    {-3840, {6, 10, 3, 0, 3, 0, 0, 1}},
    {11520, {6, 10, 3, 0, 2, 1, 0, 1}},
    {23040, {6, 10, 2, 0, 2, 0, 2, 0}},
    {11520, {6, 10, 2, 0, 2, 0, 0, 2}},
    {-11520, {6, 10, 2, 0, 1, 1, 0, 2}},
    {-46080, {6, 10, 1, 0, 1, 0, 2, 1}},
    {-11520, {6, 10, 1, 0, 1, 0, 0, 3}},
    {3840, {6, 10, 1, 0, 0, 1, 0, 3}},
    {23040, {6, 10, 0, 0, 0, 0, 2, 2}},
    {3840, {6, 10, 0, 0, 0, 0, 0, 4}},
    {-7680, {5, 11, 3, 0, 3, 0, 1, 0}},
    {23040, {5, 11, 2, 0, 2, 0, 1, 1}},
    {-23040, {5, 11, 1, 0, 1, 0, 1, 2}},
    {7680, {5, 11, 0, 0, 0, 0, 1, 3}},
    {960, {4, 12, 4, 0, 4, 0, 0, 0}},
    {-3840, {4, 12, 3, 0, 3, 0, 0, 1}},
    {5760, {4, 12, 2, 0, 2, 0, 0, 2}},
    {-3840, {4, 12, 1, 0, 1, 0, 0, 3}},
    {960, {4, 12, 0, 0, 0, 0, 0, 4}},
};
static const MonoTerm f2_num[] = {
    {-64, {10, 0, 2, 1, 0, 2, 0, 0}},
    {224, {10, 0, 1, 2, 0, 1, 0, 0}},
    {-128, {10, 0, 1, 1, 0, 1, 0, 1}},
    {224, {10, 0, 0, 2, 0, 0, 0, 1}},
    {-64, {10, 0, 0, 1, 0, 0, 0, 2}},
    {15, {9, 1, 2, 0, 0, 2, 1, 0}},
    {-36, {9, 1, 1, 1, 0, 1, 1, 0}},
    {30, {9, 1, 1, 0, 0, 1, 1, 1}},
    {-128, {9, 1, 0, 2, 0, 0, 1, 0}},
    {-36, {9, 1, 0, 1, 0, 0, 1, 1}},
    {15, {9, 1, 0, 0, 0, 0, 1, 2}},
    {64, {8, 2, 2, 1, 1, 1, 0, 0}},
    {80, {8, 2, 2, 1, 0, 2, 0, 0}},
    {40, {8, 2, 2, 0, 0, 2, 0, 1}},
    {-224, {8, 2, 1, 2, 1, 0, 0, 0}},
    {-448, {8, 2, 1, 2, 0, 1, 0, 0}},
    {64, {8, 2, 1, 1, 1, 0, 0, 1}},
    {-128, {8, 2, 1, 1, 0, 1, 0, 1}},
    {-48, {8, 2, 1, 0, 0, 1, 2, 0}},
    {80, {8, 2, 1, 0, 0, 1, 0, 2}},
    {-224, {8, 2, 0, 2, 0, 0, 0, 1}},
    {232, {8, 2, 0, 1, 0, 0, 2, 0}},
    {-208, {8, 2, 0, 1, 0, 0, 0, 2}},
    {-48, {8, 2, 0, 0, 0, 0, 2, 1}},
    {40, {8, 2, 0, 0, 0, 0, 0, 3}},
    {-12, {7, 3, 2, 0, 1, 1, 1, 0}},
    {6, {7, 3, 2, 0, 0, 2, 1, 0}},
    {196, {7, 3, 1, 1, 1, 0, 1, 0}},
    {-116, {7, 3, 1, 1, 0, 1, 1, 0}},
    {-12, {7, 3, 1, 0, 1, 0, 1, 1}},
    {-12, {7, 3, 1, 0, 0, 1, 1, 1}},
    {256, {7, 3, 0, 2, 0, 0, 1, 0}},
    {-184, {7, 3, 0, 1, 0, 0, 1, 1}},
    {-60, {7, 3, 0, 0, 0, 0, 3, 0}},
    {-18, {7, 3, 0, 0, 0, 0, 1, 2}},
    {-96, {6, 4, 2, 1, 1, 1, 0, 0}},
    {-16, {6, 4, 2, 1, 0, 2, 0, 0}},
    {-40, {6, 4, 2, 0, 1, 1, 0, 1}},
    {448, {6, 4, 1, 2, 1, 0, 0, 0}},
    {128, {6, 4, 1, 1, 1, 0, 0, 1}},
    {64, {6, 4, 1, 1, 0, 1, 0, 1}},
    {-36, {6, 4, 1, 0, 1, 0, 2, 0}},
    {-40, {6, 4, 1, 0, 1, 0, 0, 2}},
    {-60, {6, 4, 1, 0, 0, 1, 2, 0}},
    {40, {6, 4, 1, 0, 0, 1, 0, 2}},
    {-448, {6, 4, 0, 2, 0, 0, 0, 1}},
    {-120, {6, 4, 0, 1, 0, 0, 2, 0}},
    {-144, {6, 4, 0, 1, 0, 0, 0, 2}},
    {-112, {6, 4, 0, 0, 0, 0, 2, 1}},
    {40, {6, 4, 0, 0, 0, 0, 0, 3}},
    {-3, {5, 5, 2, 0, 2, 0, 1, 0}},
    {3, {5, 5, 2, 0, 0, 2, 1, 0}},
    {-44, {5, 5, 1, 1, 1, 0, 1, 0}},
    {-44, {5, 5, 1, 1, 0, 1, 1, 0}},
    {-70, {5, 5, 1, 0, 1, 0, 1, 1}},
    {-70, {5, 5, 1, 0, 0, 1, 1, 1}},
    {16, {4, 6, 2, 1, 2, 0, 0, 0}},
    {96, {4, 6, 2, 1, 1, 1, 0, 0}},
    {40, {4, 6, 2, 0, 1, 1, 0, 1}},
    {448, {4, 6, 1, 2, 0, 1, 0, 0}},
    {64, {4, 6, 1, 1, 1, 0, 0, 1}},
    {128, {4, 6, 1, 1, 0, 1, 0, 1}},
    {-60, {4, 6, 1, 0, 1, 0, 2, 0}},
    {40, {4, 6, 1, 0, 1, 0, 0, 2}},
    {-36, {4, 6, 1, 0, 0, 1, 2, 0}},
    {-40, {4, 6, 1, 0, 0, 1, 0, 2}},
    {448, {4, 6, 0, 2, 0, 0, 0, 1}},
    {120, {4, 6, 0, 1, 0, 0, 2, 0}},
    {144, {4, 6, 0, 1, 0, 0, 0, 2}},
    {112, {4, 6, 0, 0, 0, 0, 2, 1}},
    {-40, {4, 6, 0, 0, 0, 0, 0, 3}},
    {-6, {3, 7, 2, 0, 2, 0, 1, 0}},
    {12, {3, 7, 2, 0, 1, 1, 1, 0}},
    {-116, {3, 7, 1, 1, 1, 0, 1, 0}},
    {196, {3, 7, 1, 1, 0, 1, 1, 0}},
    {-12, {3, 7, 1, 0, 1, 0, 1, 1}},
    {-12, {3, 7, 1, 0, 0, 1, 1, 1}},
    {-256, {3, 7, 0, 2, 0, 0, 1, 0}},
    {184, {3, 7, 0, 1, 0, 0, 1, 1}},
    {60, {3, 7, 0, 0, 0, 0, 3, 0}},
    {18, {3, 7, 0, 0, 0, 0, 1, 2}},
    {-80, {2, 8, 2, 1, 2, 0, 0, 0}},
    {-64, {2, 8, 2, 1, 1, 1, 0, 0}},
    {-40, {2, 8, 2, 0, 2, 0, 0, 1}},
    {-448, {2, 8, 1, 2, 1, 0, 0, 0}},
    {-224, {2, 8, 1, 2, 0, 1, 0, 0}},
    {-128, {2, 8, 1, 1, 1, 0, 0, 1}},
    {64, {2, 8, 1, 1, 0, 1, 0, 1}},
    {-48, {2, 8, 1, 0, 1, 0, 2, 0}},
    {80, {2, 8, 1, 0, 1, 0, 0, 2}},
    {224, {2, 8, 0, 2, 0, 0, 0, 1}},
    {-232, {2, 8, 0, 1, 0, 0, 2, 0}},
    {208, {2, 8, 0, 1, 0, 0, 0, 2}},
    {48, {2, 8, 0, 0, 0, 0, 2, 1}},
    {-40, {2, 8, 0, 0, 0, 0, 0, 3}},
    {-15, {1, 9, 2, 0, 2, 0, 1, 0}},
    {-36, {1, 9, 1, 1, 1, 0, 1, 0}},
    {30, {1, 9, 1, 0, 1, 0, 1, 1}},
    {128, {1, 9, 0, 2, 0, 0, 1, 0}},
    {36, {1, 9, 0, 1, 0, 0, 1, 1}},
    {-15, {1, 9, 0, 0, 0, 0, 1, 2}},
    {64, {0, 10, 2, 1, 2, 0, 0, 0}},
    {224, {0, 10, 1, 2, 1, 0, 0, 0}},
    {-128, {0, 10, 1, 1, 1, 0, 0, 1}},
    {-224, {0, 10, 0, 2, 0, 0, 0, 1}},
    {64, {0, 10, 0, 1, 0, 0, 0, 2}},
};
static const MonoTerm f2_den[] = {
    {96, {10, 4, 3, 0, 0, 3, 0, 0}},
    {288, {10, 4, 2, 0, 0, 2, 0, 1}},
    {288, {10, 4, 1, 0, 0, 1, 0, 2}},
    {96, {10, 4, 0, 0, 0, 0, 0, 3}},
    {576, {9, 5, 2, 0, 0, 2, 1, 0}},
    {1152, {9, 5, 1, 0, 0, 1, 1, 1}},
    {576, {9, 5, 0, 0, 0, 0, 1, 2}},
    {-288, {8, 6, 3, 0, 1, 2, 0, 0}},
    {-576, {8, 6, 2, 0, 1, 1, 0, 1}},
    {288, {8, 6, 2, 0, 0, 2, 0, 1}},
    {-288, {8, 6, 1, 0, 1, 0, 0, 2}},
    {1152, {8, 6, 1, 0, 0, 1, 2, 0}},
    {576, {8, 6, 1, 0, 0, 1, 0, 2}},
    {1152, {8, 6, 0, 0, 0, 0, 2, 1}},
    {288, {8, 6, 0, 0, 0, 0, 0, 3}},
    {-1152, {7, 7, 2, 0, 1, 1, 1, 0}},
    {-1152, {7, 7, 1, 0, 1, 0, 1, 1}},
    {1152, {7, 7, 1, 0, 0, 1, 1, 1}},
    {768, {7, 7, 0, 0, 0, 0, 3, 0}},
    {1152, {7, 7, 0, 0, 0, 0, 1, 2}},
    {288, {6, 8, 3, 0, 2, 1, 0, 0}},
    {288, {6, 8, 2, 0, 2, 0, 0, 1}},
    {-576, {6, 8, 2, 0, 1, 1, 0, 1}},
    {-1152, {6, 8, 1, 0, 1, 0, 2, 0}},
    {-576, {6, 8, 1, 0, 1, 0, 0, 2}},
    {288, {6, 8, 1, 0, 0, 1, 0, 2}},
    {1152, {6, 8, 0, 0, 0, 0, 2, 1}},
    {288, {6, 8, 0, 0, 0, 0, 0, 3}},
    {576, {5, 9, 2, 0, 2, 0, 1, 0}},
    {-1152, {5, 9, 1, 0, 1, 0, 1, 1}},
    {576, {5, 9, 0, 0, 0, 0, 1, 2}},
    {-96, {4, 10, 3, 0, 3, 0, 0, 0}},
    {288, {4, 10, 2, 0, 2, 0, 0, 1}},
    {-288, {4, 10, 1, 0, 1, 0, 0, 2}},
    {96, {4, 10, 0, 0, 0, 0, 0, 3}},
};
static const MonoTerm f3_num[] = {
    {8, {8, 0, 1, 1, 0, 1, 0, 0}},
    {16, {8, 0, 0, 2, 0, 0, 0, 0}},
    {8, {8, 0, 0, 1, 0, 0, 0, 1}},
    {-3, {7, 1, 1, 0, 0, 1, 1, 0}},
    {-8, {7, 1, 0, 1, 0, 0, 1, 0}},
    {-3, {7, 1, 0, 0, 0, 0, 1, 1}},
    {-16, {6, 2, 1, 1, 0, 1, 0, 0}},
    {-8, {6, 2, 1, 0, 0, 1, 0, 1}},
    {-64, {6, 2, 0, 2, 0, 0, 0, 0}},
    {-48, {6, 2, 0, 1, 0, 0, 0, 1}},
    {2, {6, 2, 0, 0, 0, 0, 2, 0}},
    {-8, {6, 2, 0, 0, 0, 0, 0, 2}},
    {-1, {5, 3, 1, 0, 1, 0, 1, 0}},
    {-6, {5, 3, 1, 0, 0, 1, 1, 0}},
    {8, {5, 3, 0, 1, 0, 0, 1, 0}},
    {3, {5, 3, 0, 0, 0, 0, 1, 1}},
    {-8, {4, 4, 1, 1, 1, 0, 0, 0}},
    {8, {4, 4, 1, 1, 0, 1, 0, 0}},
    {96, {4, 4, 0, 2, 0, 0, 0, 0}},
    {80, {4, 4, 0, 1, 0, 0, 0, 1}},
    {-4, {4, 4, 0, 0, 0, 0, 2, 0}},
    {16, {4, 4, 0, 0, 0, 0, 0, 2}},
    {6, {3, 5, 1, 0, 1, 0, 1, 0}},
    {1, {3, 5, 1, 0, 0, 1, 1, 0}},
    {8, {3, 5, 0, 1, 0, 0, 1, 0}},
    {3, {3, 5, 0, 0, 0, 0, 1, 1}},
    {16, {2, 6, 1, 1, 1, 0, 0, 0}},
    {8, {2, 6, 1, 0, 1, 0, 0, 1}},
    {-64, {2, 6, 0, 2, 0, 0, 0, 0}},
    {-48, {2, 6, 0, 1, 0, 0, 0, 1}},
    {2, {2, 6, 0, 0, 0, 0, 2, 0}},
    {-8, {2, 6, 0, 0, 0, 0, 0, 2}},
    {3, {1, 7, 1, 0, 1, 0, 1, 0}},
    {-8, {1, 7, 0, 1, 0, 0, 1, 0}},
    {-3, {1, 7, 0, 0, 0, 0, 1, 1}},
    {-8, {0, 8, 1, 1, 1, 0, 0, 0}},
    {16, {0, 8, 0, 2, 0, 0, 0, 0}},
    {8, {0, 8, 0, 1, 0, 0, 0, 1}},
};
static const MonoTerm f3_den[] = {
    {64, {8, 4, 2, 0, 0, 2, 0, 0}},
    {128, {8, 4, 1, 0, 0, 1, 0, 1}},
    {64, {8, 4, 0, 0, 0, 0, 0, 2}},
    {256, {7, 5, 1, 0, 0, 1, 1, 0}},
    {256, {7, 5, 0, 0, 0, 0, 1, 1}},
    {-128, {6, 6, 2, 0, 1, 1, 0, 0}},
    {-128, {6, 6, 1, 0, 1, 0, 0, 1}},
    {128, {6, 6, 1, 0, 0, 1, 0, 1}},
    {256, {6, 6, 0, 0, 0, 0, 2, 0}},
    {128, {6, 6, 0, 0, 0, 0, 0, 2}},
    {-256, {5, 7, 1, 0, 1, 0, 1, 0}},
    {256, {5, 7, 0, 0, 0, 0, 1, 1}},
    {64, {4, 8, 2, 0, 2, 0, 0, 0}},
    {-128, {4, 8, 1, 0, 1, 0, 0, 1}},
    {64, {4, 8, 0, 0, 0, 0, 0, 2}},
};
static const MonoTerm f4_num[] = {
    {-16, {8, 0, 1, 1, 0, 1, 0, 0}},
    {-16, {8, 0, 0, 1, 0, 0, 0, 1}},
    {5, {7, 1, 1, 0, 0, 1, 1, 0}},
    {-12, {7, 1, 0, 1, 0, 0, 1, 0}},
    {5, {7, 1, 0, 0, 0, 0, 1, 1}},
    {16, {6, 2, 1, 1, 0, 1, 0, 0}},
    {8, {6, 2, 1, 0, 0, 1, 0, 1}},
    {16, {6, 2, 0, 1, 0, 0, 0, 1}},
    {2, {6, 2, 0, 0, 0, 0, 2, 0}},
    {8, {6, 2, 0, 0, 0, 0, 0, 2}},
    {1, {5, 3, 1, 0, 1, 0, 1, 0}},
    {2, {5, 3, 1, 0, 0, 1, 1, 0}},
    {4, {5, 3, 0, 1, 0, 0, 1, 0}},
    {5, {5, 3, 0, 0, 0, 0, 1, 1}},
    {2, {3, 5, 1, 0, 1, 0, 1, 0}},
    {1, {3, 5, 1, 0, 0, 1, 1, 0}},
    {-4, {3, 5, 0, 1, 0, 0, 1, 0}},
    {-5, {3, 5, 0, 0, 0, 0, 1, 1}},
    {16, {2, 6, 1, 1, 1, 0, 0, 0}},
    {8, {2, 6, 1, 0, 1, 0, 0, 1}},
    {-16, {2, 6, 0, 1, 0, 0, 0, 1}},
    {-2, {2, 6, 0, 0, 0, 0, 2, 0}},
    {-8, {2, 6, 0, 0, 0, 0, 0, 2}},
    {5, {1, 7, 1, 0, 1, 0, 1, 0}},
    {12, {1, 7, 0, 1, 0, 0, 1, 0}},
    {-5, {1, 7, 0, 0, 0, 0, 1, 1}},
    {-16, {0, 8, 1, 1, 1, 0, 0, 0}},
    {16, {0, 8, 0, 1, 0, 0, 0, 1}},
};
static const MonoTerm f4_den[] = {
    {32, {8, 4, 2, 0, 0, 2, 0, 0}},
    {64, {8, 4, 1, 0, 0, 1, 0, 1}},
    {32, {8, 4, 0, 0, 0, 0, 0, 2}},
    {128, {7, 5, 1, 0, 0, 1, 1, 0}},
    {128, {7, 5, 0, 0, 0, 0, 1, 1}},
    {-64, {6, 6, 2, 0, 1, 1, 0, 0}},
    {-64, {6, 6, 1, 0, 1, 0, 0, 1}},
    {64, {6, 6, 1, 0, 0, 1, 0, 1}},
    {128, {6, 6, 0, 0, 0, 0, 2, 0}},
    {64, {6, 6, 0, 0, 0, 0, 0, 2}},
    {-128, {5, 7, 1, 0, 1, 0, 1, 0}},
    {128, {5, 7, 0, 0, 0, 0, 1, 1}},
    {32, {4, 8, 2, 0, 2, 0, 0, 0}},
    {-64, {4, 8, 1, 0, 1, 0, 0, 1}},
    {32, {4, 8, 0, 0, 0, 0, 0, 2}},
};
static const MonoTerm f5_num[] = {
    {224, {10, 0, 2, 1, 0, 2, 0, 0}},
    {-320, {10, 0, 1, 2, 0, 1, 0, 0}},
    {448, {10, 0, 1, 1, 0, 1, 0, 1}},
    {-320, {10, 0, 0, 2, 0, 0, 0, 1}},
    {224, {10, 0, 0, 1, 0, 0, 0, 2}},
    {-51, {9, 1, 2, 0, 0, 2, 1, 0}},
    {616, {9, 1, 1, 1, 0, 1, 1, 0}},
    {-102, {9, 1, 1, 0, 0, 1, 1, 1}},
    {-832, {9, 1, 0, 2, 0, 0, 1, 0}},
    {616, {9, 1, 0, 1, 0, 0, 1, 1}},
    {-51, {9, 1, 0, 0, 0, 0, 1, 2}},
    {-224, {8, 2, 2, 1, 1, 1, 0, 0}},
    {-64, {8, 2, 2, 1, 0, 2, 0, 0}},
    {-32, {8, 2, 2, 0, 0, 2, 0, 1}},
    {320, {8, 2, 1, 2, 1, 0, 0, 0}},
    {-256, {8, 2, 1, 2, 0, 1, 0, 0}},
    {-224, {8, 2, 1, 1, 1, 0, 0, 1}},
    {-32, {8, 2, 1, 1, 0, 1, 0, 1}},
    {-90, {8, 2, 1, 0, 0, 1, 2, 0}},
    {-64, {8, 2, 1, 0, 0, 1, 0, 2}},
    {-576, {8, 2, 0, 2, 0, 0, 0, 1}},
    {624, {8, 2, 0, 1, 0, 0, 2, 0}},
    {32, {8, 2, 0, 1, 0, 0, 0, 2}},
    {-90, {8, 2, 0, 0, 0, 0, 2, 1}},
    {-32, {8, 2, 0, 0, 0, 0, 0, 3}},
    {42, {7, 3, 2, 0, 1, 1, 1, 0}},
    {42, {7, 3, 2, 0, 0, 2, 1, 0}},
    {-264, {7, 3, 1, 1, 1, 0, 1, 0}},
    {-200, {7, 3, 1, 1, 0, 1, 1, 0}},
    {42, {7, 3, 1, 0, 1, 0, 1, 1}},
    {98, {7, 3, 1, 0, 0, 1, 1, 1}},
    {256, {7, 3, 0, 2, 0, 0, 1, 0}},
    {192, {7, 3, 0, 1, 0, 0, 1, 1}},
    {-72, {7, 3, 0, 0, 0, 0, 3, 0}},
    {56, {7, 3, 0, 0, 0, 0, 1, 2}},
    {224, {6, 4, 2, 1, 1, 1, 0, 0}},
    {-160, {6, 4, 2, 1, 0, 2, 0, 0}},
    {32, {6, 4, 2, 0, 1, 1, 0, 1}},
    {256, {6, 4, 1, 2, 1, 0, 0, 0}},
    {1152, {6, 4, 1, 2, 0, 1, 0, 0}},
    {352, {6, 4, 1, 1, 1, 0, 0, 1}},
    {-288, {6, 4, 1, 1, 0, 1, 0, 1}},
    {18, {6, 4, 1, 0, 1, 0, 2, 0}},
    {32, {6, 4, 1, 0, 1, 0, 0, 2}},
    {252, {6, 4, 1, 0, 0, 1, 2, 0}},
    {32, {6, 4, 1, 0, 0, 1, 0, 2}},
    {896, {6, 4, 0, 2, 0, 0, 0, 1}},
    {-624, {6, 4, 0, 1, 0, 0, 2, 0}},
    {-256, {6, 4, 0, 1, 0, 0, 0, 2}},
    {186, {6, 4, 0, 0, 0, 0, 2, 1}},
    {32, {6, 4, 0, 0, 0, 0, 0, 3}},
    {9, {5, 5, 2, 0, 2, 0, 1, 0}},
    {-84, {5, 5, 2, 0, 1, 1, 1, 0}},
    {9, {5, 5, 2, 0, 0, 2, 1, 0}},
    {680, {5, 5, 1, 1, 1, 0, 1, 0}},
    {-680, {5, 5, 1, 1, 0, 1, 1, 0}},
    {-126, {5, 5, 1, 0, 1, 0, 1, 1}},
    {126, {5, 5, 1, 0, 0, 1, 1, 1}},
    {1152, {5, 5, 0, 2, 0, 0, 1, 0}},
    {-1616, {5, 5, 0, 1, 0, 0, 1, 1}},
    {240, {5, 5, 0, 0, 0, 0, 3, 0}},
    {86, {5, 5, 0, 0, 0, 0, 1, 2}},
    {-160, {4, 6, 2, 1, 2, 0, 0, 0}},
    {224, {4, 6, 2, 1, 1, 1, 0, 0}},
    {32, {4, 6, 2, 0, 1, 1, 0, 1}},
    {-1152, {4, 6, 1, 2, 1, 0, 0, 0}},
    {-256, {4, 6, 1, 2, 0, 1, 0, 0}},
    {288, {4, 6, 1, 1, 1, 0, 0, 1}},
    {-352, {4, 6, 1, 1, 0, 1, 0, 1}},
    {-252, {4, 6, 1, 0, 1, 0, 2, 0}},
    {-32, {4, 6, 1, 0, 1, 0, 0, 2}},
    {-18, {4, 6, 1, 0, 0, 1, 2, 0}},
    {-32, {4, 6, 1, 0, 0, 1, 0, 2}},
    {896, {4, 6, 0, 2, 0, 0, 0, 1}},
    {-624, {4, 6, 0, 1, 0, 0, 2, 0}},
    {-256, {4, 6, 0, 1, 0, 0, 0, 2}},
    {186, {4, 6, 0, 0, 0, 0, 2, 1}},
    {32, {4, 6, 0, 0, 0, 0, 0, 3}},
    {42, {3, 7, 2, 0, 2, 0, 1, 0}},
    {42, {3, 7, 2, 0, 1, 1, 1, 0}},
    {200, {3, 7, 1, 1, 1, 0, 1, 0}},
    {264, {3, 7, 1, 1, 0, 1, 1, 0}},
    {-98, {3, 7, 1, 0, 1, 0, 1, 1}},
    {-42, {3, 7, 1, 0, 0, 1, 1, 1}},
    {256, {3, 7, 0, 2, 0, 0, 1, 0}},
    {192, {3, 7, 0, 1, 0, 0, 1, 1}},
    {-72, {3, 7, 0, 0, 0, 0, 3, 0}},
    {56, {3, 7, 0, 0, 0, 0, 1, 2}},
    {-64, {2, 8, 2, 1, 2, 0, 0, 0}},
    {-224, {2, 8, 2, 1, 1, 1, 0, 0}},
    {-32, {2, 8, 2, 0, 2, 0, 0, 1}},
    {256, {2, 8, 1, 2, 1, 0, 0, 0}},
    {-320, {2, 8, 1, 2, 0, 1, 0, 0}},
    {32, {2, 8, 1, 1, 1, 0, 0, 1}},
    {224, {2, 8, 1, 1, 0, 1, 0, 1}},
    {90, {2, 8, 1, 0, 1, 0, 2, 0}},
    {64, {2, 8, 1, 0, 1, 0, 0, 2}},
    {-576, {2, 8, 0, 2, 0, 0, 0, 1}},
    {624, {2, 8, 0, 1, 0, 0, 2, 0}},
    {32, {2, 8, 0, 1, 0, 0, 0, 2}},
    {-90, {2, 8, 0, 0, 0, 0, 2, 1}},
    {-32, {2, 8, 0, 0, 0, 0, 0, 3}},
    {-51, {1, 9, 2, 0, 2, 0, 1, 0}},
    {-616, {1, 9, 1, 1, 1, 0, 1, 0}},
    {102, {1, 9, 1, 0, 1, 0, 1, 1}},
    {-832, {1, 9, 0, 2, 0, 0, 1, 0}},
    {616, {1, 9, 0, 1, 0, 0, 1, 1}},
    {-51, {1, 9, 0, 0, 0, 0, 1, 2}},
    {224, {0, 10, 2, 1, 2, 0, 0, 0}},
    {320, {0, 10, 1, 2, 1, 0, 0, 0}},
    {-448, {0, 10, 1, 1, 1, 0, 0, 1}},
    {-320, {0, 10, 0, 2, 0, 0, 0, 1}},
    {224, {0, 10, 0, 1, 0, 0, 0, 2}},
};
static const MonoTerm f5_den[] = {
    {384, {10, 4, 3, 0, 0, 3, 0, 0}},
    {1152, {10, 4, 2, 0, 0, 2, 0, 1}},
    {1152, {10, 4, 1, 0, 0, 1, 0, 2}},
    {384, {10, 4, 0, 0, 0, 0, 0, 3}},
    {2304, {9, 5, 2, 0, 0, 2, 1, 0}},
    {4608, {9, 5, 1, 0, 0, 1, 1, 1}},
    {2304, {9, 5, 0, 0, 0, 0, 1, 2}},
    {-1152, {8, 6, 3, 0, 1, 2, 0, 0}},
    {-2304, {8, 6, 2, 0, 1, 1, 0, 1}},
    {1152, {8, 6, 2, 0, 0, 2, 0, 1}},
    {-1152, {8, 6, 1, 0, 1, 0, 0, 2}},
    {4608, {8, 6, 1, 0, 0, 1, 2, 0}},
    {2304, {8, 6, 1, 0, 0, 1, 0, 2}},
    {4608, {8, 6, 0, 0, 0, 0, 2, 1}},
    {1152, {8, 6, 0, 0, 0, 0, 0, 3}},
    {-4608, {7, 7, 2, 0, 1, 1, 1, 0}},
    {-4608, {7, 7, 1, 0, 1, 0, 1, 1}},
    {4608, {7, 7, 1, 0, 0, 1, 1, 1}},
    {3072, {7, 7, 0, 0, 0, 0, 3, 0}},
    {4608, {7, 7, 0, 0, 0, 0, 1, 2}},
    {1152, {6, 8, 3, 0, 2, 1, 0, 0}},
    {1152, {6, 8, 2, 0, 2, 0, 0, 1}},
    {-2304, {6, 8, 2, 0, 1, 1, 0, 1}},
    {-4608, {6, 8, 1, 0, 1, 0, 2, 0}},
    {-2304, {6, 8, 1, 0, 1, 0, 0, 2}},
    {1152, {6, 8, 1, 0, 0, 1, 0, 2}},
    {4608, {6, 8, 0, 0, 0, 0, 2, 1}},
    {1152, {6, 8, 0, 0, 0, 0, 0, 3}},
    {2304, {5, 9, 2, 0, 2, 0, 1, 0}},
    {-4608, {5, 9, 1, 0, 1, 0, 1, 1}},
    {2304, {5, 9, 0, 0, 0, 0, 1, 2}},
    {-384, {4, 10, 3, 0, 3, 0, 0, 0}},
    {1152, {4, 10, 2, 0, 2, 0, 0, 1}},
    {-1152, {4, 10, 1, 0, 1, 0, 0, 2}},
    {384, {4, 10, 0, 0, 0, 0, 0, 3}},
};
static const MonoTerm f6_num[] = {
    {8, {10, 0, 2, 1, 0, 2, 0, 0}},
    {16, {10, 0, 1, 2, 0, 1, 0, 0}},
    {16, {10, 0, 1, 1, 0, 1, 0, 1}},
    {16, {10, 0, 0, 2, 0, 0, 0, 1}},
    {8, {10, 0, 0, 1, 0, 0, 0, 2}},
    {3, {9, 1, 2, 0, 0, 2, 1, 0}},
    {-112, {9, 1, 1, 1, 0, 1, 1, 0}},
    {6, {9, 1, 1, 0, 0, 1, 1, 1}},
    {-224, {9, 1, 0, 2, 0, 0, 1, 0}},
    {-112, {9, 1, 0, 1, 0, 0, 1, 1}},
    {3, {9, 1, 0, 0, 0, 0, 1, 2}},
    {-8, {8, 2, 2, 1, 1, 1, 0, 0}},
    {-16, {8, 2, 2, 1, 0, 2, 0, 0}},
    {-8, {8, 2, 2, 0, 0, 2, 0, 1}},
    {-16, {8, 2, 1, 2, 1, 0, 0, 0}},
    {-64, {8, 2, 1, 2, 0, 1, 0, 0}},
    {-8, {8, 2, 1, 1, 1, 0, 0, 1}},
    {-56, {8, 2, 1, 1, 0, 1, 0, 1}},
    {66, {8, 2, 1, 0, 0, 1, 2, 0}},
    {-16, {8, 2, 1, 0, 0, 1, 0, 2}},
    {-48, {8, 2, 0, 2, 0, 0, 0, 1}},
    {128, {8, 2, 0, 1, 0, 0, 2, 0}},
    {-40, {8, 2, 0, 1, 0, 0, 0, 2}},
    {66, {8, 2, 0, 0, 0, 0, 2, 1}},
    {-8, {8, 2, 0, 0, 0, 0, 0, 3}},
    {-6, {7, 3, 2, 0, 1, 1, 1, 0}},
    {-6, {7, 3, 2, 0, 0, 2, 1, 0}},
    {224, {7, 3, 1, 1, 0, 1, 1, 0}},
    {-6, {7, 3, 1, 0, 1, 0, 1, 1}},
    {106, {7, 3, 1, 0, 0, 1, 1, 1}},
    {896, {7, 3, 0, 2, 0, 0, 1, 0}},
    {672, {7, 3, 0, 1, 0, 0, 1, 1}},
    {-8, {7, 3, 0, 0, 0, 0, 3, 0}},
    {112, {7, 3, 0, 0, 0, 0, 1, 2}},
    {8, {6, 4, 2, 1, 1, 1, 0, 0}},
    {8, {6, 4, 2, 1, 0, 2, 0, 0}},
    {8, {6, 4, 2, 0, 1, 1, 0, 1}},
    {64, {6, 4, 1, 2, 1, 0, 0, 0}},
    {96, {6, 4, 1, 2, 0, 1, 0, 0}},
    {40, {6, 4, 1, 1, 1, 0, 0, 1}},
    {72, {6, 4, 1, 1, 0, 1, 0, 1}},
    {-2, {6, 4, 1, 0, 1, 0, 2, 0}},
    {8, {6, 4, 1, 0, 1, 0, 0, 2}},
    {60, {6, 4, 1, 0, 0, 1, 2, 0}},
    {8, {6, 4, 1, 0, 0, 1, 0, 2}},
    {32, {6, 4, 0, 2, 0, 0, 0, 1}},
    {-128, {6, 4, 0, 1, 0, 0, 2, 0}},
    {32, {6, 4, 0, 1, 0, 0, 0, 2}},
    {-66, {6, 4, 0, 0, 0, 0, 2, 1}},
    {8, {6, 4, 0, 0, 0, 0, 0, 3}},
    {3, {5, 5, 2, 0, 2, 0, 1, 0}},
    {12, {5, 5, 2, 0, 1, 1, 1, 0}},
    {3, {5, 5, 2, 0, 0, 2, 1, 0}},
    {112, {5, 5, 1, 1, 1, 0, 1, 0}},
    {-112, {5, 5, 1, 1, 0, 1, 1, 0}},
    {6, {5, 5, 1, 0, 1, 0, 1, 1}},
    {-6, {5, 5, 1, 0, 0, 1, 1, 1}},
    {-1344, {5, 5, 0, 2, 0, 0, 1, 0}},
    {-1120, {5, 5, 0, 1, 0, 0, 1, 1}},
    {16, {5, 5, 0, 0, 0, 0, 3, 0}},
    {-230, {5, 5, 0, 0, 0, 0, 1, 2}},
    {8, {4, 6, 2, 1, 2, 0, 0, 0}},
    {8, {4, 6, 2, 1, 1, 1, 0, 0}},
    {8, {4, 6, 2, 0, 1, 1, 0, 1}},
    {-96, {4, 6, 1, 2, 1, 0, 0, 0}},
    {-64, {4, 6, 1, 2, 0, 1, 0, 0}},
    {-72, {4, 6, 1, 1, 1, 0, 0, 1}},
    {-40, {4, 6, 1, 1, 0, 1, 0, 1}},
    {-60, {4, 6, 1, 0, 1, 0, 2, 0}},
    {-8, {4, 6, 1, 0, 1, 0, 0, 2}},
    {2, {4, 6, 1, 0, 0, 1, 2, 0}},
    {-8, {4, 6, 1, 0, 0, 1, 0, 2}},
    {32, {4, 6, 0, 2, 0, 0, 0, 1}},
    {-128, {4, 6, 0, 1, 0, 0, 2, 0}},
    {32, {4, 6, 0, 1, 0, 0, 0, 2}},
    {-66, {4, 6, 0, 0, 0, 0, 2, 1}},
    {8, {4, 6, 0, 0, 0, 0, 0, 3}},
    {-6, {3, 7, 2, 0, 2, 0, 1, 0}},
    {-6, {3, 7, 2, 0, 1, 1, 1, 0}},
    {-224, {3, 7, 1, 1, 1, 0, 1, 0}},
    {-106, {3, 7, 1, 0, 1, 0, 1, 1}},
    {6, {3, 7, 1, 0, 0, 1, 1, 1}},
    {896, {3, 7, 0, 2, 0, 0, 1, 0}},
    {672, {3, 7, 0, 1, 0, 0, 1, 1}},
    {-8, {3, 7, 0, 0, 0, 0, 3, 0}},
    {112, {3, 7, 0, 0, 0, 0, 1, 2}},
    {-16, {2, 8, 2, 1, 2, 0, 0, 0}},
    {-8, {2, 8, 2, 1, 1, 1, 0, 0}},
    {-8, {2, 8, 2, 0, 2, 0, 0, 1}},
    {64, {2, 8, 1, 2, 1, 0, 0, 0}},
    {16, {2, 8, 1, 2, 0, 1, 0, 0}},
    {56, {2, 8, 1, 1, 1, 0, 0, 1}},
    {8, {2, 8, 1, 1, 0, 1, 0, 1}},
    {-66, {2, 8, 1, 0, 1, 0, 2, 0}},
    {16, {2, 8, 1, 0, 1, 0, 0, 2}},
    {-48, {2, 8, 0, 2, 0, 0, 0, 1}},
    {128, {2, 8, 0, 1, 0, 0, 2, 0}},
    {-40, {2, 8, 0, 1, 0, 0, 0, 2}},
    {66, {2, 8, 0, 0, 0, 0, 2, 1}},
    {-8, {2, 8, 0, 0, 0, 0, 0, 3}},
    {3, {1, 9, 2, 0, 2, 0, 1, 0}},
    {112, {1, 9, 1, 1, 1, 0, 1, 0}},
    {-6, {1, 9, 1, 0, 1, 0, 1, 1}},
    {-224, {1, 9, 0, 2, 0, 0, 1, 0}},
    {-112, {1, 9, 0, 1, 0, 0, 1, 1}},
    {3, {1, 9, 0, 0, 0, 0, 1, 2}},
    {8, {0, 10, 2, 1, 2, 0, 0, 0}},
    {-16, {0, 10, 1, 2, 1, 0, 0, 0}},
    {-16, {0, 10, 1, 1, 1, 0, 0, 1}},
    {16, {0, 10, 0, 2, 0, 0, 0, 1}},
    {8, {0, 10, 0, 1, 0, 0, 0, 2}},
};
static const MonoTerm f6_den[] = {
    {384, {10, 4, 3, 0, 0, 3, 0, 0}},
    {1152, {10, 4, 2, 0, 0, 2, 0, 1}},
    {1152, {10, 4, 1, 0, 0, 1, 0, 2}},
    {384, {10, 4, 0, 0, 0, 0, 0, 3}},
    {2304, {9, 5, 2, 0, 0, 2, 1, 0}},
    {4608, {9, 5, 1, 0, 0, 1, 1, 1}},
    {2304, {9, 5, 0, 0, 0, 0, 1, 2}},
    {-1152, {8, 6, 3, 0, 1, 2, 0, 0}},
    {-2304, {8, 6, 2, 0, 1, 1, 0, 1}},
    {1152, {8, 6, 2, 0, 0, 2, 0, 1}},
    {-1152, {8, 6, 1, 0, 1, 0, 0, 2}},
    {4608, {8, 6, 1, 0, 0, 1, 2, 0}},
    {2304, {8, 6, 1, 0, 0, 1, 0, 2}},
    {4608, {8, 6, 0, 0, 0, 0, 2, 1}},
    {1152, {8, 6, 0, 0, 0, 0, 0, 3}},
    {-4608, {7, 7, 2, 0, 1, 1, 1, 0}},
    {-4608, {7, 7, 1, 0, 1, 0, 1, 1}},
    {4608, {7, 7, 1, 0, 0, 1, 1, 1}},
    {3072, {7, 7, 0, 0, 0, 0, 3, 0}},
    {4608, {7, 7, 0, 0, 0, 0, 1, 2}},
    {1152, {6, 8, 3, 0, 2, 1, 0, 0}},
    {1152, {6, 8, 2, 0, 2, 0, 0, 1}},
    {-2304, {6, 8, 2, 0, 1, 1, 0, 1}},
    {-4608, {6, 8, 1, 0, 1, 0, 2, 0}},
    {-2304, {6, 8, 1, 0, 1, 0, 0, 2}},
    {1152, {6, 8, 1, 0, 0, 1, 0, 2}},
    {4608, {6, 8, 0, 0, 0, 0, 2, 1}},
    {1152, {6, 8, 0, 0, 0, 0, 0, 3}},
    {2304, {5, 9, 2, 0, 2, 0, 1, 0}},
    {-4608, {5, 9, 1, 0, 1, 0, 1, 1}},
    {2304, {5, 9, 0, 0, 0, 0, 1, 2}},
    {-384, {4, 10, 3, 0, 3, 0, 0, 0}},
    {1152, {4, 10, 2, 0, 2, 0, 0, 1}},
    {-1152, {4, 10, 1, 0, 1, 0, 0, 2}},
    {384, {4, 10, 0, 0, 0, 0, 0, 3}},
};

const std::vector<RationalFormula>& closed_form_table()
{
    static const std::vector<RationalFormula> t = {
        {"b", {std::begin(b_num), std::end(b_num)}, {std::begin(b_den), std::end(b_den)}},
        {"a1", {std::begin(a1_num), std::end(a1_num)}, {std::begin(a1_den), std::end(a1_den)}},
        {"a2", {std::begin(a2_num), std::end(a2_num)}, {std::begin(a2_den), std::end(a2_den)}},
        {"a3", {std::begin(a3_num), std::end(a3_num)}, {std::begin(a3_den), std::end(a3_den)}},
        {"a4", {std::begin(a4_num), std::end(a4_num)}, {std::begin(a4_den), std::end(a4_den)}},
        {"a5", {std::begin(a5_num), std::end(a5_num)}, {std::begin(a5_den), std::end(a5_den)}},
        {"a6", {std::begin(a6_num), std::end(a6_num)}, {std::begin(a6_den), std::end(a6_den)}},
        {"a7", {std::begin(a7_num), std::end(a7_num)}, {std::begin(a7_den), std::end(a7_den)}},
        {"a8", {std::begin(a8_num), std::end(a8_num)}, {std::begin(a8_den), std::end(a8_den)}},
        {"a9", {std::begin(a9_num), std::end(a9_num)}, {std::begin(a9_den), std::end(a9_den)}},
        {"e1", {std::begin(e1_num), std::end(e1_num)}, {std::begin(e1_den), std::end(e1_den)}},
        {"e2", {std::begin(e2_num), std::end(e2_num)}, {std::begin(e2_den), std::end(e2_den)}},
        {"e3", {std::begin(e3_num), std::end(e3_num)}, {std::begin(e3_den), std::end(e3_den)}},
        {"f1", {std::begin(f1_num), std::end(f1_num)}, {std::begin(f1_den), std::end(f1_den)}},
        {"f2", {std::begin(f2_num), std::end(f2_num)}, {std::begin(f2_den), std::end(f2_den)}},
        {"f3", {std::begin(f3_num), std::end(f3_num)}, {std::begin(f3_den), std::end(f3_den)}},
        {"f4", {std::begin(f4_num), std::end(f4_num)}, {std::begin(f4_den), std::end(f4_den)}},
        {"f5", {std::begin(f5_num), std::end(f5_num)}, {std::begin(f5_den), std::end(f5_den)}},
        {"f6", {std::begin(f6_num), std::end(f6_num)}, {std::begin(f6_den), std::end(f6_den)}},
    };
    return t;
}

} // namespace gaudin::detail
