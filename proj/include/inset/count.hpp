#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace inset {

// Exact arbitrary-precision integer. Counting results outgrow 64 bits at
// modest parameters (central Delannoy growth), so every arithmetic path in
// the library runs over cpp_int.
using Integer = boost::multiprecision::cpp_int;

// A counting result; always >= 0. Signed quantities (Chebyshev coefficients,
// identity sides under verification) use Integer directly.
using Count = Integer;

// Thrown when an enumeration would exceed its documented budget. Enumerators
// never truncate or approximate; the caller switches to a formula route.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binomial coefficient C(a, b) over the extended domain: 0 whenever b < 0 or
// b > a. The closed formulas and recurrences in this library generate
// boundary sub-calls with out-of-range b and stay valid verbatim under this
// convention.
inline Count binomial_ext(long long a, long long b) {
    if (a < 0) {
        throw std::domain_error("binomial_ext: upper index must be nonnegative");
    }
    if (b < 0 || b > a) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    Count result = 1;
    for (long long i = 0; i < b; ++i) {
        result *= a - i;
        result /= i + 1;  // exact: result is C(a, i+1) after this step
    }
    return result;
}

// 2^e for e >= 0.
inline Count pow2(long long e) {
    if (e < 0) {
        throw std::domain_error("pow2: negative exponent");
    }
    return Count(1) << static_cast<unsigned>(e);
}

// q^n for n >= 0.
inline Count ipow(long long base, long long n) {
    if (n < 0) {
        throw std::domain_error("ipow: negative exponent");
    }
    Count result = 1;
    Count b = base;
    while (n > 0) {
        if (n & 1) {
            result *= b;
        }
        b *= b;
        n >>= 1;
    }
    return result;
}

}  // namespace inset
