#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "gkummer/kronecker.hpp"
#include "gkummer/quadideal.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

/// Exact value of a Hecke character: an element of K, or the zero marker at
/// ideals sharing a factor with the conductor.
struct HeckeValue {
    std::optional<KElem> value;

    bool is_zero() const { return !value.has_value(); }
    const KElem& get() const {
        if (!value) throw std::logic_error("HeckeValue: zero marker has no element");
        return *value;
    }
};

namespace detail {

/// Quadratic twist attached to the conductor (sqrt d): the Legendre symbol of
/// Re(alpha) viewed mod p0 = |d|. Half-integers a/2 evaluate through the
/// inverse of 2 mod p0.
inline int re_symbol(long long p0, const KElem& alpha) {
    const Rat& re = alpha.re();
    Int num = rat_num(re), den = rat_den(re);
    if (den != 1 && den != 2) throw std::logic_error("re_symbol: unexpected denominator");
    Int r = num % p0;
    if (r < 0) r += p0;
    if (den == 2) {
        Int inv2 = (p0 + 1) / 2;  // 2 * (p0+1)/2 = p0 + 1 = 1 mod p0
        r = r * inv2 % p0;
    }
    return kronecker(r, Int(p0));
}

}  // namespace detail

/// The weight-4 CM character: for an order with |d| = p0 prime and class
/// number 1 or 3, and I coprime to (sqrt d), compute I^3 = (alpha) and return
/// (Re(alpha)|p0) * alpha. The symbol factor makes the value independent of
/// the generator sign: the units are +-1 and p0 = 3 mod 4 flips the symbol
/// exactly when the generator flips.
inline HeckeValue hecke_w4(const QuadOrder& order, const QuadIdeal& I) {
    const long long p0 = -order.disc();
    if (order.disc() % 4 == 0 || !is_prime(static_cast<std::uint64_t>(p0)))
        throw std::invalid_argument("hecke_w4: |d| must be an odd prime");

    Rat n = I.norm();
    if (rat_num(n) % p0 == 0 || rat_den(n) % p0 == 0) return HeckeValue{std::nullopt};

    QuadIdeal cube = ideal_mul(ideal_mul(I, I), I);
    auto alpha = principal_generator(cube);
    if (!alpha)
        throw std::domain_error("hecke_w4: I^3 is not principal (class exponent violated)");
    int sym = detail::re_symbol(p0, *alpha);
    if (sym == 0) throw std::logic_error("hecke_w4: Re(alpha) vanishes mod p0 on a coprime ideal");
    return HeckeValue{*alpha * Rat(sym)};
}

/// The weight-3 character of the d = -15 example: alpha^2 on principal
/// ideals, +-3 on the ramified prime above 3, extended multiplicatively to
/// the non-principal class through division by that value. `twisted` selects
/// the level-15 twist (-3), which is the one the double cover realizes.
inline HeckeValue hecke_w3_15(const QuadIdeal& I, bool twisted) {
    if (I.disc() != -15) throw std::invalid_argument("hecke_w3_15: requires d = -15");
    const QuadOrder order(-15);
    const Rat p3_value = twisted ? Rat(-3) : Rat(3);

    if (is_principal_class(I)) {
        auto alpha = principal_generator(I);
        if (!alpha) throw std::logic_error("hecke_w3_15: principal class without generator");
        return HeckeValue{*alpha * *alpha};
    }
    // I * p3 lands in the principal class; phi(I) = phi(I*p3) / phi(p3).
    QuadIdeal p3(order, Int(3), Int(3));
    QuadIdeal J = ideal_mul(I, p3);
    auto beta = principal_generator(J);
    if (!beta) throw std::logic_error("hecke_w3_15: extension ideal not principal");
    return HeckeValue{(*beta * *beta) / p3_value};
}

/// A CM newform's coefficient source: which character to evaluate, over which
/// order. The two embedded characters cover the scenarios this toolkit
/// verifies.
struct HeckeCharacter {
    enum class Kind { W4, W3_15 } kind;
    QuadOrder order;
    bool twisted = false;  // W3_15 only
    int weight() const { return kind == Kind::W4 ? 4 : 3; }

    HeckeValue operator()(const QuadIdeal& I) const {
        if (kind == Kind::W4) return hecke_w4(order, I);
        return hecke_w3_15(I, twisted);
    }
};

/// Newform coefficient a_p: phi(p) + phi(conj p) at split primes (an integer;
/// the sqrt-d components must cancel), 0 at inert primes. Ramified primes are
/// out of domain.
inline long long newform_ap(const HeckeCharacter& chi, std::uint64_t p) {
    auto split = prime_above(chi.order, p);
    if (split.kind == PrimeKind::Ramified)
        throw std::domain_error("newform_ap: coefficient at ramified prime is not defined here");
    if (split.kind == PrimeKind::Inert) return 0;

    HeckeValue v1 = chi(*split.prime);
    HeckeValue v2 = chi(*split.conjugate);
    if (v1.is_zero() || v2.is_zero())
        throw std::logic_error("newform_ap: character vanishes at an unramified prime");
    KElem sum = v1.get() + v2.get();
    if (!sum.im_coeff().is_zero())
        throw std::logic_error("newform_ap: sqrt-d component did not cancel");
    const Rat& tr = sum.re();
    if (rat_den(tr) != 1) throw std::logic_error("newform_ap: non-integral coefficient");
    return static_cast<long long>(rat_num(tr));
}

/// Resolve the sign of a_p from the point count of the K3 double cover, using
/// #S(F_p) = a_p + p*l_p + p^2: the two signs are incongruent mod p, so the
/// residue of the count picks one; l_p then comes out exactly and must lie in
/// {-2, 0, 2}.
struct ResolvedAp {
    long long ap;
    long long lp;
};

inline ResolvedAp resolve_ap_sign(long long abs_ap, long long count, std::uint64_t p) {
    if (abs_ap < 0) throw std::invalid_argument("resolve_ap_sign: magnitude must be >= 0");
    const long long pp = static_cast<long long>(p);
    auto fits = [&](long long ap) { return (count - ap) % pp == 0; };

    long long ap;
    if (abs_ap == 0) {
        if (!fits(0)) throw std::logic_error("resolve_ap_sign: count does not match a_p = 0");
        ap = 0;
    } else if (abs_ap % pp == 0) {
        throw std::invalid_argument("resolve_ap_sign: p divides 2*a_p, sign is ambiguous");
    } else if (fits(abs_ap)) {
        ap = abs_ap;
    } else if (fits(-abs_ap)) {
        ap = -abs_ap;
    } else {
        throw std::logic_error("resolve_ap_sign: neither sign matches the count mod p");
    }
    long long lp = (count - ap - pp * pp) / pp;
    if (lp != -2 && lp != 0 && lp != 2)
        throw std::logic_error("resolve_ap_sign: l_p outside {-2, 0, 2}");
    return ResolvedAp{ap, lp};
}

/// Residue degree of the primes of the Hilbert class field above p, for class
/// number 3: f = 2 iff p is inert; among split primes f = 1 iff the prime
/// above p is principal, else f = 3.
inline int frobenius_degree(const QuadOrder& order, std::uint64_t p) {
    auto split = prime_above(order, p);
    if (split.kind == PrimeKind::Ramified)
        throw std::domain_error("frobenius_degree: ramified prime");
    if (split.kind == PrimeKind::Inert) return 2;
    return is_principal_class(*split.prime) ? 1 : 3;
}

}  // namespace gkummer
