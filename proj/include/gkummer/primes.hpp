#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gkummer/rational.hpp"

namespace gkummer {

// Largest prime modulus the counting kernel supports. Trial division stays
// exact up to here and 64-bit products v1*v2 < p^2 never overflow.
inline constexpr std::uint64_t kMaxPrime = 1'000'000;

/// Deterministic primality by trial division; valid for all n <= kMaxPrime^2.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

inline void require_odd_prime(std::uint64_t p) {
    if (p > kMaxPrime || p < 3 || !is_prime(p))
        throw std::invalid_argument("expected an odd prime <= 10^6, got " + std::to_string(p));
}

/// Ascending primes in [2, bound].
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

/// Distinct prime factors of |n| that are <= kMaxPrime. Any remaining cofactor
/// has only prime factors beyond the supported modulus range.
inline std::vector<std::uint64_t> small_prime_factors(Int n) {
    std::vector<std::uint64_t> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto strip = [&](std::uint64_t d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d <= kMaxPrime && Int(d) * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1 && n <= kMaxPrime) out.push_back(static_cast<std::uint64_t>(n));
    return out;
}

}  // namespace gkummer
