#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkummer/numberfield.hpp"
#include "gkummer/polynomial.hpp"
#include "gkummer/primes.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

/// Reduction at p failed: a coefficient denominator vanishes or the curve
/// degenerates. Callers skip such primes rather than report failure.
class BadPrimeError : public std::runtime_error {
public:
    BadPrimeError(std::uint64_t p, const std::string& what)
        : std::runtime_error("bad reduction at p=" + std::to_string(p) + ": " + what), prime_(p) {}
    std::uint64_t prime() const { return prime_; }

private:
    std::uint64_t prime_;
};

/// Element of F_p for an odd prime p <= 10^6. Values stay reduced; with
/// p < 2^32 all products fit in 64 bits without overflow.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(reduce_checked(value, p)), p_(p) {}

    static Fp from_int(const Int& n, std::uint64_t p) {
        Int r = n % Int(p);
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        return Fp(s >= p_ ? s - p_ : s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(v_ * o.v_ % p_, p_);
    }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // Extended Euclid on (v, p).
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return Fp(static_cast<std::uint64_t>(t), p_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
    static std::uint64_t reduce_checked(std::uint64_t v, std::uint64_t p) {
        if (p < 2 || p > kMaxPrime) throw std::invalid_argument("Fp: modulus out of range");
        return v % p;
    }

    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mismatched moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }

using FpPoly = MPoly<Fp>;

template <>
inline bool MPoly<Fp>::coeff_compatible(const Fp& a, const Fp& b) {
    return a.modulus() == b.modulus();
}

/// Quadratic character chi_p via a residue table built once per prime by
/// squaring all residues: chi(0) = 0, chi(square) = +1, else -1.
class QuadraticCharacter {
public:
    explicit QuadraticCharacter(std::uint64_t p) : p_(p), table_(p, -1) {
        require_odd_prime(p);
        table_[0] = 0;
        for (std::uint64_t x = 1; x < p; ++x) table_[x * x % p] = 1;
    }

    std::uint64_t modulus() const { return p_; }
    int operator()(std::uint64_t a) const { return table_[a % p_]; }
    int operator()(const Fp& a) const {
        if (a.modulus() != p_) throw std::invalid_argument("QuadraticCharacter: wrong modulus");
        return table_[a.value()];
    }

private:
    std::uint64_t p_;
    std::vector<signed char> table_;
};

/// Reduce a rational-coefficient polynomial mod p. Throws BadPrimeError when
/// any coefficient denominator is divisible by p; p = 2 is always bad (the
/// quadratic character degenerates there).
inline FpPoly reduce_mod_p(const RatPoly& poly, std::uint64_t p) {
    if (p == 2) throw BadPrimeError(2, "p = 2 is not a good prime for double covers");
    require_odd_prime(p);
    FpPoly out(poly.nvars());
    for (const auto& [e, c] : poly.terms()) {
        Int den = rat_den(c);
        if (den % Int(p) == 0) throw BadPrimeError(p, "coefficient denominator divisible by p");
        Fp num = Fp::from_int(rat_num(c), p);
        Fp d = Fp::from_int(den, p);
        out.add_term(e, num * d.inverse());
    }
    return out;
}

/// Reduce a number-field element at theta -> root mod p (coordinatewise, with
/// denominator inversion).
inline Fp reduce_at_root(const NFElem& e, std::uint64_t p, std::uint64_t root) {
    Fp acc(0, p), rp(root, p), pw(1, p);
    for (int i = 0; i < e.degree(); ++i) {
        const Rat& c = e.coord(i);
        Int den = rat_den(c);
        if (den % Int(p) == 0) throw BadPrimeError(p, "coordinate denominator divisible by p");
        acc = acc + Fp::from_int(rat_num(c), p) * Fp::from_int(den, p).inverse() * pw;
        pw = pw * rp;
    }
    return acc;
}

enum class SplittingKind {
    SplitComplete,  // as many roots as the degree
    Partial,        // exactly one root (degree 3 only)
    Inert,          // no roots
    Ramified,       // p divides the minimal polynomial discriminant
};

struct RootsModP {
    SplittingKind kind;
    std::vector<std::uint64_t> roots;  // ascending; empty when ramified
};

/// All roots of the minimal polynomial mod p by direct scan, with the
/// splitting classification. Ramified primes carry no root list.
inline RootsModP minpoly_roots_mod_p(const MinPoly& m, std::uint64_t p) {
    require_odd_prime(p);
    if (m.discriminant() % Int(p) == 0) return {SplittingKind::Ramified, {}};

    std::vector<std::uint64_t> cs;
    for (int i = 0; i <= m.degree(); ++i) {
        Int r = m.coeff(i) % Int(p);
        if (r < 0) r += p;
        cs.push_back(static_cast<std::uint64_t>(r));
    }
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = (acc * x + *it) % p;
        if (acc == 0) roots.push_back(x);
    }
    SplittingKind kind;
    if (static_cast<int>(roots.size()) == m.degree())
        kind = SplittingKind::SplitComplete;
    else if (roots.empty())
        kind = SplittingKind::Inert;
    else if (roots.size() == 1 && m.degree() == 3)
        kind = SplittingKind::Partial;
    else
        throw std::logic_error("minpoly_roots_mod_p: impossible root count for unramified prime");
    return {kind, std::move(roots)};
}

}  // namespace gkummer
