#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gaudin {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

template <class T>
T abs_val(const T& x)
{
    return x < 0 ? T(-x) : x;
}

// exact zero for rationals, |x| <= tol for doubles
inline bool near_zero(double x, double tol) { return std::fabs(x) <= tol; }
inline bool near_zero(const Rational& x, double) { return x == 0; }

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// best rational with denominator <= maxden; throws if not within tol of x
Rational to_rational(double x, long long maxden = 1000000, double tol = 1e-15);

} // namespace gaudin
