#ifndef CADET_BIGINT_HPP
#define CADET_BIGINT_HPP

// Exact arbitrary-precision integers and rationals used throughout the
// library. Weight counts, power moments and binomial ratios are exact
// integer statements; nothing here may ever round.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cadet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the usual convention C(n,k) = 0 for k < 0 or k > n.
inline Int binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

inline Int ipow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Exact quotient; throws if the division leaves a remainder.
Int exact_div(const Int& num, const Int& den);

// True iff r is an integer.
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace cadet

#endif
