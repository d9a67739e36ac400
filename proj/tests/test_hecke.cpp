#include <doctest.h>

#include <random>

#include "gkummer/hecke.hpp"
#include "gkummer/fp.hpp"

using namespace gkummer;

namespace {

const HeckeCharacter w4_23{HeckeCharacter::Kind::W4, QuadOrder(-23), false};
const HeckeCharacter w3_15_twisted{HeckeCharacter::Kind::W3_15, QuadOrder(-15), true};

QuadIdeal random_coprime_ideal(const QuadOrder& order, std::mt19937_64& rng, int factors) {
    static const std::vector<std::uint64_t> split = {2, 3, 13, 29, 31, 41, 47, 59, 71};
    std::uniform_int_distribution<std::size_t> pick(0, split.size() - 1);
    std::uniform_int_distribution<int> side(0, 1);
    auto first = prime_above(order, split[pick(rng)]);
    QuadIdeal I = side(rng) ? *first.prime : *first.conjugate;
    for (int i = 1; i < factors; ++i) {
        auto next = prime_above(order, split[pick(rng)]);
        I = ideal_mul(I, side(rng) ? *next.prime : *next.conjugate);
    }
    return I;
}

// Random algebraic integer of O_{Q(sqrt -23)} with norm coprime to 23.
KElem random_beta(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> small(-6, 6);
    while (true) {
        long long a = small(rng), b = small(rng);
        if ((a - b) % 2 != 0) continue;  // parity rule for d = 1 mod 4
        KElem beta(-23, Rat(a, 2), Rat(b, 2));
        if (beta.is_zero()) continue;
        Rat n = beta.norm();
        if (rat_num(n) % 23 == 0) continue;
        return beta;
    }
}

}  // namespace

TEST_CASE("weight-4 character values") {
    QuadOrder order(-23);
    QuadIdeal p3 = *prime_above(order, 3).prime;
    HeckeValue v = hecke_w4(order, p3);
    REQUIRE_FALSE(v.is_zero());
    CHECK(v.get().re() == Rat(2));  // phi(p3) = 2 +- sqrt(-23), symbol (2|23) = +1
    CHECK(boost::multiprecision::abs(rat_num(v.get().im_coeff())) == 1);
    CHECK(v.get().norm() == Rat(27));

    // ramified ideal: zero marker
    QuadIdeal p23 = *prime_above(order, 23).prime;
    CHECK(hecke_w4(order, p23).is_zero());

    // class-exponent violation: h(-47) = 5, so I^3 is generally not principal
    QuadOrder bad(-47);
    QuadIdeal q2 = *prime_above(bad, 2).prime;
    CHECK_THROWS_AS(hecke_w4(bad, q2), std::domain_error);
}

TEST_CASE("weight-4 newform coefficients from the character") {
    CHECK(newform_ap(w4_23, 3) == 4);
    CHECK(newform_ap(w4_23, 7) == 0);  // inert
    CHECK(newform_ap(w4_23, 13) == -74);
    CHECK(newform_ap(w4_23, 29) == 282);
    CHECK(newform_ap(w4_23, 31) == -344);
    CHECK(newform_ap(w4_23, 59) == -396);
    CHECK(newform_ap(w4_23, 71) == 1176);
    CHECK(newform_ap(w4_23, 73) == -1226);
    CHECK_THROWS_AS(newform_ap(w4_23, 23), std::domain_error);
}

TEST_CASE("weight-3 character on the -15 example") {
    QuadOrder order(-15);

    // phi'(p17): -(6 + sqrt(-15))^2 / 3 = -7 - 4 sqrt(-15), so a_17 = -14
    QuadIdeal p17 = *prime_above(order, 17).prime;
    HeckeValue v = hecke_w3_15(p17, true);
    REQUIRE_FALSE(v.is_zero());
    CHECK(v.get().re() == Rat(-7));
    CHECK(boost::multiprecision::abs(rat_num(v.get().im_coeff())) == 4);
    CHECK(newform_ap(w3_15_twisted, 17) == -14);

    CHECK(newform_ap(w3_15_twisted, 19) == -22);
    CHECK(newform_ap(w3_15_twisted, 23) == 34);
    CHECK(newform_ap(w3_15_twisted, 29) == 0);  // inert
    CHECK(newform_ap(w3_15_twisted, 31) == 2);

    // untwisted variant flips the sign at 17
    HeckeCharacter untwisted{HeckeCharacter::Kind::W3_15, QuadOrder(-15), false};
    CHECK(newform_ap(untwisted, 17) == 14);

    // principal ideal (4): phi = 4^2 = 16
    QuadIdeal four(order, Int(1), Int(1), Rat(4));
    HeckeValue v4 = hecke_w3_15(four, true);
    REQUIRE_FALSE(v4.is_zero());
    CHECK(v4.get().re() == Rat(16));
    CHECK(v4.get().im_coeff() == Rat(0));
}

TEST_CASE("sign resolution from point counts") {
    ResolvedAp r17 = resolve_ap_sign(14, 275, 17);
    CHECK(r17.ap == -14);
    CHECK(r17.lp == 0);

    ResolvedAp r31 = resolve_ap_sign(2, 1025, 31);
    CHECK(r31.ap == 2);
    CHECK(r31.lp == 2);

    ResolvedAp r11 = resolve_ap_sign(0, 121, 11);
    CHECK(r11.ap == 0);
    CHECK(r11.lp == 0);

    // count that matches neither sign
    CHECK_THROWS_AS(resolve_ap_sign(3, 100, 17), std::logic_error);
}

TEST_CASE("frobenius degree classification") {
    QuadOrder order(-23);
    CHECK(frobenius_degree(order, 59) == 1);
    CHECK(frobenius_degree(order, 3) == 3);
    CHECK(frobenius_degree(order, 7) == 2);
    CHECK_THROWS_AS(frobenius_degree(order, 23), std::domain_error);

    // f = 1 exactly when x^3 - x - 1 splits completely mod p
    MinPoly cubic({Int(-1), Int(-1), Int(0), Int(1)});
    for (std::uint64_t p : primes_up_to(200)) {
        if (p < 3 || p == 23) continue;
        auto roots = minpoly_roots_mod_p(cubic, p);
        int f = frobenius_degree(order, p);
        CHECK((f == 1) == (roots.kind == SplittingKind::SplitComplete));
        CHECK((f == 2) == (roots.kind == SplittingKind::Partial));
        CHECK((f == 3) == (roots.kind == SplittingKind::Inert));
    }
}

TEST_CASE("unit invariance of the weight-4 twist") {
    // Replacing the cube generator alpha by -alpha leaves the value fixed:
    // (-23) = 1 mod 4 makes (-1|23) = -1, cancelling the generator flip.
    QuadOrder order(-23);
    std::mt19937_64 rng(555);
    for (int t = 0; t < 50; ++t) {
        QuadIdeal I = random_coprime_ideal(order, rng, 2);
        QuadIdeal cube = ideal_mul(ideal_mul(I, I), I);
        auto alpha = principal_generator(cube);
        REQUIRE(alpha.has_value());
        KElem minus = -*alpha;
        KElem v_plus = *alpha * Rat(detail::re_symbol(23, *alpha));
        KElem v_minus = minus * Rat(detail::re_symbol(23, minus));
        CHECK(v_plus == v_minus);
    }
}

TEST_CASE("weight-4 character is well-defined on classes") {
    // phi(I * (beta)) = phi(I) * phi((beta)) for principal multiples.
    QuadOrder order(-23);
    std::mt19937_64 rng(606);
    int tested = 0;
    for (int t = 0; t < 50; ++t) {
        QuadIdeal I = random_coprime_ideal(order, rng, 2);
        KElem beta = random_beta(rng);
        QuadIdeal B = principal_ideal(order, beta);
        HeckeValue lhs = hecke_w4(order, ideal_mul(I, B));
        HeckeValue a = hecke_w4(order, I);
        HeckeValue b = hecke_w4(order, B);
        REQUIRE_FALSE(lhs.is_zero());
        REQUIRE_FALSE(a.is_zero());
        REQUIRE_FALSE(b.is_zero());
        CHECK(lhs.get() == a.get() * b.get());
        ++tested;
    }
    CHECK(tested == 50);
}

TEST_CASE("deligne bounds on computed coefficients") {
    for (std::uint64_t p : primes_up_to(97)) {
        if (p < 3) continue;
        if (p != 23) {
            long long ap = newform_ap(w4_23, p);
            // weight 4: a_p^2 <= 4 p^3
            CHECK(Int(ap) * ap <= Int(4) * p * p * p);
        }
        if (p != 3 && p != 5) {
            long long ap = newform_ap(w3_15_twisted, p);
            // weight 3: a_p^2 <= 4 p^2
            CHECK(Int(ap) * ap <= Int(4) * p * p);
        }
    }
}

TEST_CASE("principal ideals round-trip through generators") {
    QuadOrder order(-23);
    std::mt19937_64 rng(314);
    for (int t = 0; t < 20; ++t) {
        KElem beta = random_beta(rng);
        QuadIdeal B = principal_ideal(order, beta);
        CHECK(B.norm() == boost::multiprecision::abs(rat_num(beta.norm())));
        auto gen = principal_generator(B);
        REQUIRE(gen.has_value());
        // generator is beta up to sign
        CHECK((gen->re() == beta.re() || gen->re() == -beta.re()));
        CHECK(gen->norm() == beta.norm());
    }
}
