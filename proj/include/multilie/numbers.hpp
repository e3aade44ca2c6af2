#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multilie {

// All counts and coefficients in this library are arbitrary-precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an enumeration is requested beyond its configured bound.
struct bound_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// n! / (parts[0]! * parts[1]! * ...); the parts must sum to n.
inline Int multinomial(int n, const std::vector<int>& parts) {
    Int r = factorial(n);
    int total = 0;
    for (int p : parts) {
        r /= factorial(p);
        total += p;
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    return r;
}

// 1 * 3 * 5 * ... * m for odd m; returns 1 for m < 1.
inline Int odd_double_factorial(int m) {
    Int r = 1;
    for (int i = 1; i <= m; i += 2) r *= i;
    return r;
}

}  // namespace multilie
