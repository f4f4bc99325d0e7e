#pragma once

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace kerov {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    // each prefix product C(n-k+i, i) is an integer, so the division is exact
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt catalan(int l) { return binomial(2 * l, l) / (l + 1); }

/** N(k, r) = C(k,r) C(k,r-1) / k; coefficient of alpha^r in the MP moment mu_k. */
inline BigInt narayana(int k, int r) { return binomial(k, r) * binomial(k, r - 1) / k; }

}  // namespace kerov
