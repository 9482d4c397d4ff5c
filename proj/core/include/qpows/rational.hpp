#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qpows {

// All coefficients in the library are exact rationals; no floating point
// appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

} // namespace qpows
