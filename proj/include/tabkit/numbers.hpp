#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "tabkit/error.hpp"

namespace tabkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

// Binomial coefficient; out-of-range k yields 0, which is the convention the
// counting formulas rely on.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw DomainError("binomial with negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;  // exact at every step
    }
    return out;
}

inline long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw DomainError("value does not fit in 64 bits");
    return v.convert_to<long long>();
}

}  // namespace tabkit
