#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkummer/galois_norm.hpp"
#include "gkummer/numberfield.hpp"
#include "gkummer/polynomial.hpp"
#include "gkummer/primes.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

/// Elliptic curve y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over a
/// number field of degree 2 or 3. Construction rejects singular curves.
class WeierstrassCurve {
public:
    WeierstrassCurve(FieldPtr field, NFElem a1, NFElem a2, NFElem a3, NFElem a4, NFElem a6,
                     std::string label = "")
        : field_(std::move(field)),
          a1_(std::move(a1)),
          a2_(std::move(a2)),
          a3_(std::move(a3)),
          a4_(std::move(a4)),
          a6_(std::move(a6)),
          label_(std::move(label)) {
        for (const NFElem* e : {&a1_, &a2_, &a3_, &a4_, &a6_})
            if (!field_->same_field(*e->field()))
                throw std::invalid_argument("WeierstrassCurve: coefficient field mismatch");
        if (discriminant().is_zero())
            throw std::invalid_argument("WeierstrassCurve: singular curve (zero discriminant)");
    }

    const FieldPtr& field() const { return field_; }
    const NFElem& a1() const { return a1_; }
    const NFElem& a2() const { return a2_; }
    const NFElem& a3() const { return a3_; }
    const NFElem& a4() const { return a4_; }
    const NFElem& a6() const { return a6_; }
    const std::string& label() const { return label_; }

    NFElem b2() const { return a1_ * a1_ + a2_ * Rat(4); }
    NFElem b4() const { return a4_ * Rat(2) + a1_ * a3_; }
    NFElem b6() const { return a3_ * a3_ + a6_ * Rat(4); }
    NFElem b8() const {
        return a1_ * a1_ * a6_ + a2_ * a6_ * Rat(4) - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
               a4_ * a4_;
    }

    NFElem discriminant() const {
        NFElem B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - B4 * B4 * B4 * Rat(8) - B6 * B6 * Rat(27) + B2 * B4 * B6 * Rat(9);
    }

private:
    FieldPtr field_;
    NFElem a1_, a2_, a3_, a4_, a6_;
    std::string label_;
};

/// Completed-square model: the monic cubic f with
///   f(x) = x^3 + (b2/4) x^2 + (b4/2) x + b6/4,
/// so that (y + (a1*x + a3)/2)^2 = f(x) transforms the curve to y^2 = f(x).
inline NFPoly complete_square(const WeierstrassCurve& curve) {
    const FieldPtr& field = curve.field();
    NFPoly f(1);
    f.add_term(ExpVec{3, 0, 0, 0}, NFElem::from_rational(field, 1));
    f.add_term(ExpVec{2, 0, 0, 0}, curve.b2() * Rat(1, 4));
    f.add_term(ExpVec{1, 0, 0, 0}, curve.b4() * Rat(1, 2));
    f.add_term(ExpVec{0, 0, 0, 0}, curve.b6() * Rat(1, 4));
    return f;
}

/// Descended double-cover model y^2 = g(u_1,...,u_n) of the generalised
/// Kummer variety of the Weil restriction of the curve. g has rational
/// coefficients and total degree 3n.
class KummerModel {
public:
    KummerModel(int n, RatPoly g, WeierstrassCurve curve, Int bad_modulus)
        : n_(n),
          g_(std::move(g)),
          curve_(std::move(curve)),
          bad_modulus_(std::move(bad_modulus)),
          bad_primes_(small_prime_factors(bad_modulus_)) {
        std::sort(bad_primes_.begin(), bad_primes_.end());
    }

    int n() const { return n_; }
    const RatPoly& g() const { return g_; }
    const WeierstrassCurve& curve() const { return curve_; }

    /// Exact divisibility test; complete for every supported prime.
    bool is_bad(std::uint64_t p) const { return bad_modulus_ % Int(p) == 0; }

    /// Explicit bad primes (all of them lie below the supported modulus cap).
    const std::vector<std::uint64_t>& bad_primes() const { return bad_primes_; }

private:
    int n_;
    RatPoly g_;
    WeierstrassCurve curve_;
    Int bad_modulus_;
    std::vector<std::uint64_t> bad_primes_;
};

/// Build the descended Kummer polynomial over Q:
///   f     = completed square of the curve,
///   F(u)  = f evaluated at x = sum_j theta^{j-1} u_j,
///   g     = Norm(F)   (rational by Galois invariance).
/// Bad primes collect 2, the minimal-polynomial discriminant, the norm of the
/// curve discriminant and every coefficient denominator of g.
inline KummerModel build_kummer(const WeierstrassCurve& curve) {
    const FieldPtr& field = curve.field();
    const int n = field->degree();
    if (n > 3) throw std::invalid_argument("build_kummer: only degrees 2 and 3 are supported");

    NFPoly f = complete_square(curve);

    NFPoly image(n);
    for (int j = 0; j < n; ++j) {
        ExpVec e{};
        e[static_cast<std::size_t>(j)] = 1;
        image.add_term(e, NFElem::generator_power(field, j));
    }
    NFPoly F = f.substitute({image});
    RatPoly g = galois_norm_poly(F);

    if (g.degree() != 3 * n)
        throw std::logic_error("build_kummer: expected total degree 3n");

    Int bad = 2 * curve.field()->minpoly().discriminant();
    Rat disc_norm = curve.discriminant().norm();
    bad *= rat_num(disc_norm) * rat_den(disc_norm);
    for (const auto& [e, c] : g.terms()) bad *= rat_den(c);

    return KummerModel(n, std::move(g), curve, std::move(bad));
}

/// Topological invariants of the smooth Calabi-Yau model in the threefold
/// case (n = 3): Euler number, Betti numbers and the nontrivial Hodge pair.
struct TopologicalInvariants {
    int euler;
    int b0, b1, b2, b3;
    int h11, h21;
};

inline TopologicalInvariants expected_invariants(int n) {
    if (n != 3)
        throw std::invalid_argument("expected_invariants: only the threefold case is supported");
    return TopologicalInvariants{96, 1, 0, 51, 8, 51, 3};
}

}  // namespace gkummer
