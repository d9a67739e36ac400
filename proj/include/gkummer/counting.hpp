#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gkummer/fp.hpp"
#include "gkummer/polynomial.hpp"

namespace gkummer {

/// Affine point count of the double cover y^2 = g(u) over F_p.
/// count = p^n + character_sum holds by construction and is re-verified from
/// two independently maintained accumulators.
struct CountResult {
    std::uint64_t p = 0;
    long long count = 0;
    long long character_sum = 0;
};

namespace detail {

// Flat term view of g grouped for the enumeration: exponents of the outer
// variables, exponent in the innermost variable, coefficient.
struct FlatTerm {
    std::array<int, kMaxVars> outer_exp;
    int inner_exp;
    std::uint64_t coeff;
};

struct CountShard {
    long long tally = 0;     // sum of (1 + chi)
    long long chi_sum = 0;   // sum of chi
};

// Enumerate u over [first, last) x F_p^{n-1}; for every outer assignment the
// innermost variable is specialized last: g collapses to a univariate
// polynomial evaluated by one Horner pass per inner value.
inline CountShard count_range(const std::vector<FlatTerm>& terms, int nvars, std::uint64_t p,
                              const QuadraticCharacter& chi, std::uint64_t first,
                              std::uint64_t last, int max_inner_deg, int max_outer_deg) {
    CountShard shard;
    const int outer_vars = nvars - 1;
    std::vector<std::uint64_t> point(static_cast<std::size_t>(outer_vars), 0);
    // pow_tab[v][e] = point[v]^e mod p
    std::vector<std::vector<std::uint64_t>> pow_tab(
        static_cast<std::size_t>(outer_vars),
        std::vector<std::uint64_t>(static_cast<std::size_t>(max_outer_deg) + 1, 1));
    auto refresh = [&](int v) {
        auto& t = pow_tab[static_cast<std::size_t>(v)];
        t[0] = 1;
        for (std::size_t e = 1; e < t.size(); ++e)
            t[e] = t[e - 1] * point[static_cast<std::size_t>(v)] % p;
    };

    std::vector<std::uint64_t> inner(static_cast<std::size_t>(max_inner_deg) + 1, 0);

    if (first >= last) return shard;
    point[0] = first;
    for (int v = 0; v < outer_vars; ++v) refresh(v);

    while (true) {
        // Specialize outer variables: univariate coefficients in the inner var.
        std::fill(inner.begin(), inner.end(), 0);
        for (const auto& t : terms) {
            std::uint64_t c = t.coeff;
            for (int v = 0; v < outer_vars; ++v)
                c = c * pow_tab[static_cast<std::size_t>(v)]
                             [static_cast<std::size_t>(t.outer_exp[static_cast<std::size_t>(v)])] %
                    p;
            auto& slot = inner[static_cast<std::size_t>(t.inner_exp)];
            slot += c;
            if (slot >= p) slot -= p;
        }

        for (std::uint64_t w = 0; w < p; ++w) {
            std::uint64_t acc = 0;
            for (auto it = inner.rbegin(); it != inner.rend(); ++it) acc = (acc * w + *it) % p;
            int ch = chi(acc);
            shard.tally += 1 + ch;
            shard.chi_sum += ch;
        }

        // Odometer over the outer variables, most significant first.
        int v = outer_vars - 1;
        while (v >= 0) {
            ++point[static_cast<std::size_t>(v)];
            std::uint64_t limit = (v == 0) ? last : p;
            if (point[static_cast<std::size_t>(v)] < limit) {
                refresh(v);
                break;
            }
            if (v == 0) return shard;
            point[static_cast<std::size_t>(v)] = 0;
            refresh(v);
            --v;
        }
    }
}

// One-variable case: a single Horner sweep.
inline CountShard count_univariate(const std::vector<FlatTerm>& terms, std::uint64_t p,
                                   const QuadraticCharacter& chi, int max_inner_deg) {
    CountShard shard;
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(max_inner_deg) + 1, 0);
    for (const auto& t : terms) {
        auto& slot = coeffs[static_cast<std::size_t>(t.inner_exp)];
        slot = (slot + t.coeff) % p;
    }
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
        int ch = chi(acc);
        shard.tally += 1 + ch;
        shard.chi_sum += ch;
    }
    return shard;
}

inline std::vector<FlatTerm> flatten(const FpPoly& g, std::uint64_t p, int& max_inner_deg,
                                     int& max_outer_deg) {
    std::vector<FlatTerm> terms;
    max_inner_deg = 0;
    max_outer_deg = 0;
    const int inner = g.nvars() - 1;
    for (const auto& [e, c] : g.terms()) {
        if (c.modulus() != p) throw std::invalid_argument("count: polynomial modulus mismatch");
        FlatTerm t{};
        for (int v = 0; v < inner; ++v) {
            t.outer_exp[static_cast<std::size_t>(v)] = e[static_cast<std::size_t>(v)];
            max_outer_deg = std::max(max_outer_deg, e[static_cast<std::size_t>(v)]);
        }
        t.inner_exp = e[static_cast<std::size_t>(inner)];
        t.coeff = c.value();
        max_inner_deg = std::max(max_inner_deg, t.inner_exp);
        terms.push_back(t);
    }
    return terms;
}

}  // namespace detail

/// Number of affine points (u, y) in F_p^{n+1} with y^2 = g(u), together with
/// the character sum. The outer coordinate may be sharded across `workers`
/// threads; partial sums combine associatively, so the result is identical to
/// the sequential scan.
inline CountResult count_double_cover(const FpPoly& g, const QuadraticCharacter& chi,
                                      int workers = 1) {
    const std::uint64_t p = chi.modulus();
    const int n = g.nvars();

    int max_inner_deg = 0, max_outer_deg = 0;
    auto terms = detail::flatten(g, p, max_inner_deg, max_outer_deg);

    detail::CountShard total;
    if (n == 1) {
        total = detail::count_univariate(terms, p, chi, max_inner_deg);
    } else {
        int nw = std::max(1, std::min<int>(workers, static_cast<int>(p)));
        if (nw == 1) {
            total = detail::count_range(terms, n, p, chi, 0, p, max_inner_deg, max_outer_deg);
        } else {
            std::vector<detail::CountShard> shards(static_cast<std::size_t>(nw));
            std::vector<std::thread> pool;
            for (int w = 0; w < nw; ++w) {
                std::uint64_t lo = p * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nw);
                std::uint64_t hi =
                    p * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nw);
                pool.emplace_back([&, w, lo, hi] {
                    shards[static_cast<std::size_t>(w)] = detail::count_range(
                        terms, n, p, chi, lo, hi, max_inner_deg, max_outer_deg);
                });
            }
            for (auto& t : pool) t.join();
            for (const auto& s : shards) {
                total.tally += s.tally;
                total.chi_sum += s.chi_sum;
            }
        }
    }

    Int pn_exact = 1;
    for (int i = 0; i < n; ++i) pn_exact *= p;
    if (pn_exact > std::numeric_limits<long long>::max() / 2)
        throw std::invalid_argument("count_double_cover: p^n exceeds the supported range");
    long long pn = static_cast<long long>(pn_exact);
    if (total.tally != pn + total.chi_sum)
        throw std::logic_error("count_double_cover: tally and character sum disagree");
    return CountResult{p, total.tally, total.chi_sum};
}

/// Frobenius trace b_p = p + 1 - #E(F_p) of the elliptic curve y^2 = f(x) for
/// a nonsingular cubic f over F_p; #E counts affine points plus one at
/// infinity. Throws BadPrimeError on singular reduction; the Hasse bound is
/// asserted on the result.
inline long long elliptic_trace(const FpPoly& cubic, const QuadraticCharacter& chi) {
    const std::uint64_t p = chi.modulus();
    if (cubic.nvars() != 1) throw std::invalid_argument("elliptic_trace: univariate cubic expected");

    std::array<std::uint64_t, 4> c{};  // c[i] = coefficient of x^i
    for (const auto& [e, v] : cubic.terms()) {
        if (e[0] > 3) throw std::invalid_argument("elliptic_trace: degree exceeds 3");
        if (v.modulus() != p) throw std::invalid_argument("elliptic_trace: modulus mismatch");
        c[static_cast<std::size_t>(e[0])] = v.value();
    }
    if (c[3] == 0) throw std::invalid_argument("elliptic_trace: leading cubic coefficient vanishes");

    // Discriminant of A*x^3+B*x^2+C*x+D, zero iff the curve is singular mod p.
    Int A = c[3], B = c[2], C = c[1], D = c[0];
    Int disc = 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * A * C * C * C -
               27 * A * A * D * D;
    if (disc % Int(p) == 0) throw BadPrimeError(p, "singular cubic reduction");

    long long chi_sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (int i = 3; i >= 0; --i) acc = (acc * x + c[static_cast<std::size_t>(i)]) % p;
        chi_sum += chi(acc);
    }
    long long bp = -chi_sum;
    if (bp * bp > 4 * static_cast<long long>(p))
        throw std::logic_error("elliptic_trace: Hasse bound violated");
    return bp;
}

}  // namespace gkummer
