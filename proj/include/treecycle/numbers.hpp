#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "treecycle/errors.hpp"

namespace treecycle {

using BigInt = boost::multiprecision::cpp_int;

/// Euler numbers E_n, the Entringer triangle E(n,i), and the almost up-down
/// counts A_n, all from the recursion
///   E(n+1,i+1) = E(n+1,i) + E(n,n-i),  E(0,0) = 1,  E(n,0) = 0 for n >= 1,
/// with E_n = E(n,n) and A_n = n E_{n-1} - E_n for n >= 2 (A_1 = 1 by
/// convention, matching the count of almost up-down permutations).
struct NumberTables {
    std::vector<BigInt> euler;                    // E_0..E_N
    std::vector<std::vector<BigInt>> entringer;   // E(n,i), 0 <= i <= n <= N
    std::vector<BigInt> almost_updown;            // A_0..A_N (A_0 unused, = 0)
};

inline NumberTables number_tables(int N) {
    NumberTables t;
    t.entringer.resize(N + 1);
    t.entringer[0] = {BigInt(1)};
    for (int n = 1; n <= N; ++n) {
        t.entringer[n].assign(n + 1, 0);
        for (int i = 1; i <= n; ++i)
            t.entringer[n][i] = t.entringer[n][i - 1] + t.entringer[n - 1][n - i];
    }
    for (int n = 0; n <= N; ++n) t.euler.push_back(t.entringer[n][n]);
    t.almost_updown.assign(N + 1, 0);
    if (N >= 1) t.almost_updown[1] = 1;
    for (int n = 2; n <= N; ++n) t.almost_updown[n] = n * t.euler[n - 1] - t.euler[n];
    return t;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Number of labelled trees on n vertices realising a fixed n-cycle:
/// C(3n-3, n-1) / (2n-1).
inline BigInt fuss_catalan(int n) {
    if (n < 1) throw IndexOutOfRange("fuss_catalan");
    return binomial(3 * n - 3, n - 1) / (2 * n - 1);
}

}  // namespace treecycle
