#pragma once

#include "gkummer/rational.hpp"

namespace gkummer {

/// Kronecker symbol (a|n), extending the Jacobi symbol to all integers via
/// quadratic reciprocity plus the supplements for 2, -1 and 0.
inline int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;

    int k = 1;
    // (a|2) factor for each power of two in n; nonzero only for odd a,
    // +1 when a = +-1 mod 8 and -1 when a = +-3 mod 8.
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        Int r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) k = -k;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n is now positive and odd: Jacobi loop.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        int v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) {
            Int r = n % 8;
            if (r == 3 || r == 5) k = -k;
        }
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        Int t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? k : 0;
}

inline int kronecker(long long a, long long n) { return kronecker(Int(a), Int(n)); }

}  // namespace gkummer
