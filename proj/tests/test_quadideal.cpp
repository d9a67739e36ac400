#include <doctest.h>

#include <random>

#include "gkummer/quadideal.hpp"

using namespace gkummer;

namespace {

// Random integral ideal coprime to the conductor: a product of a few split
// primes and conjugates.
QuadIdeal random_ideal(const QuadOrder& order, std::mt19937_64& rng,
                       const std::vector<std::uint64_t>& split_primes, int factors) {
    std::uniform_int_distribution<std::size_t> pick(0, split_primes.size() - 1);
    std::uniform_int_distribution<int> side(0, 1);
    auto first = prime_above(order, split_primes[pick(rng)]);
    QuadIdeal I = side(rng) ? *first.prime : *first.conjugate;
    for (int i = 1; i < factors; ++i) {
        auto next = prime_above(order, split_primes[pick(rng)]);
        I = ideal_mul(I, side(rng) ? *next.prime : *next.conjugate);
    }
    return I;
}

}  // namespace

TEST_CASE("order validation") {
    CHECK_NOTHROW(QuadOrder(-23));
    CHECK_NOTHROW(QuadOrder(-15));
    CHECK_NOTHROW(QuadOrder(-4));
    CHECK_THROWS_AS(QuadOrder(23), std::invalid_argument);
    CHECK_THROWS_AS(QuadOrder(-21), std::invalid_argument);   // -21 = 3 mod 4
    CHECK_THROWS_AS(QuadOrder(-45), std::invalid_argument);   // not squarefree
    CHECK_THROWS_AS(QuadOrder(-12), std::invalid_argument);   // -12/4 = -3 = 1 mod 4
}

TEST_CASE("class group enumeration") {
    auto forms23 = class_group(QuadOrder(-23));
    REQUIRE(forms23.size() == 3);
    CHECK(forms23[0] == QuadForm{1, 1, 6});
    CHECK(forms23[1] == QuadForm{2, -1, 3});
    CHECK(forms23[2] == QuadForm{2, 1, 3});

    auto forms15 = class_group(QuadOrder(-15));
    REQUIRE(forms15.size() == 2);
    CHECK(forms15[0] == QuadForm{1, 1, 4});
    CHECK(forms15[1] == QuadForm{2, 1, 2});

    auto forms4 = class_group(QuadOrder(-4));
    REQUIRE(forms4.size() == 1);
    CHECK(forms4[0] == QuadForm{1, 0, 1});
}

TEST_CASE("form reduction") {
    CHECK(reduce_form(QuadForm{3, 3, 2}) == QuadForm{2, 1, 2});     // d = -15 ramified 3
    CHECK(reduce_form(QuadForm{1, 1, 6}) == QuadForm{1, 1, 6});
    CHECK(reduce_form(QuadForm{6, -1, 1}) == QuadForm{1, 1, 6});    // swap + normalize
    CHECK(reduce_form(QuadForm{13, 9, 2}) == QuadForm{2, -1, 3});   // d = -23 prime above 13
}

TEST_CASE("prime splitting") {
    QuadOrder d23(-23);
    auto s3 = prime_above(d23, 3);
    REQUIRE(s3.kind == PrimeKind::Split);
    CHECK(s3.prime->a() == 3);
    CHECK(s3.prime->b() == 1);
    CHECK(s3.conjugate->b() == 5);  // -1 mod 6

    auto s23 = prime_above(d23, 23);
    CHECK(s23.kind == PrimeKind::Ramified);

    QuadOrder d15(-15);
    CHECK(prime_above(d15, 29).kind == PrimeKind::Inert);
    CHECK(prime_above(d15, 17).kind == PrimeKind::Split);
}

TEST_CASE("ideal multiplication basics") {
    QuadOrder order(-23);
    QuadIdeal unit(order, Int(1), Int(1));
    auto s3 = prime_above(order, 3);
    QuadIdeal p3 = *s3.prime;

    CHECK(ideal_mul(p3, unit) == p3);
    CHECK(ideal_mul(unit, p3) == p3);

    // p * conj(p) = (p): norm p^2 with trivial primitive part
    QuadIdeal prod = ideal_mul(p3, *s3.conjugate);
    CHECK(prod.norm() == Rat(9));
    CHECK(prod.a() == 1);
    CHECK(prod.scale() == Rat(3));
}

TEST_CASE("cube of the non-principal class is principal") {
    QuadOrder order(-23);
    QuadIdeal f23(order, Int(2), Int(1));  // the form (2, 1, 3)
    QuadIdeal cube = ideal_mul(ideal_mul(f23, f23), f23);
    CHECK_FALSE(is_principal_class(f23));
    CHECK(is_principal_class(cube));
}

TEST_CASE("principal generators of small prime cubes") {
    QuadOrder order(-23);

    // p2^3 with p2 = [2, (1+sqrt-23)/2]: generator (3 +- sqrt-23)/2, norm 8
    QuadIdeal p2 = *prime_above(order, 2).prime;
    QuadIdeal p2cube = ideal_mul(ideal_mul(p2, p2), p2);
    auto g2 = principal_generator(p2cube);
    REQUIRE(g2.has_value());
    CHECK(g2->re() == Rat(3, 2));
    CHECK(boost::multiprecision::abs(rat_num(g2->im_coeff())) == 1);
    CHECK(rat_den(g2->im_coeff()) == 2);  // |im| = 1/2
    CHECK(g2->norm() == Rat(8));

    // p3^3: generator 2 +- sqrt-23, norm 27
    QuadIdeal p3 = *prime_above(order, 3).prime;
    QuadIdeal p3cube = ideal_mul(ideal_mul(p3, p3), p3);
    auto g3 = principal_generator(p3cube);
    REQUIRE(g3.has_value());
    CHECK(g3->re() == Rat(2));
    CHECK(boost::multiprecision::abs(rat_num(g3->im_coeff())) == 1);
    CHECK(g3->norm() == Rat(27));

    // the non-principal class itself has no generator
    CHECK_FALSE(principal_generator(QuadIdeal(order, Int(2), Int(1))).has_value());
}

TEST_CASE("generators lie in the ideal and have canonical sign") {
    QuadOrder order(-23);
    std::mt19937_64 rng(8);
    std::vector<std::uint64_t> split = {2, 3, 13, 29, 31, 41};
    for (int t = 0; t < 30; ++t) {
        QuadIdeal I = random_ideal(order, rng, split, 3);
        QuadIdeal cube = ideal_mul(ideal_mul(I, I), I);
        auto g = principal_generator(cube);
        REQUIRE(g.has_value());
        CHECK(g->norm() == cube.norm());
        bool canonical = g->re() > 0 || (g->re() == 0 && g->im_coeff() > 0);
        CHECK(canonical);
    }
}

TEST_CASE("ideal norm is multiplicative") {
    std::mt19937_64 rng(99);
    QuadOrder order(-23);
    std::vector<std::uint64_t> split = {2, 3, 13, 29, 31, 41, 47};
    for (int t = 0; t < 40; ++t) {
        QuadIdeal I = random_ideal(order, rng, split, 2);
        QuadIdeal J = random_ideal(order, rng, split, 2);
        CHECK(ideal_mul(I, J).norm() == I.norm() * J.norm());
    }
}

TEST_CASE("class group closure under composition") {
    for (long long d : {-23LL, -15LL}) {
        QuadOrder order(d);
        auto forms = class_group(order);
        for (const auto& f1 : forms) {
            for (const auto& f2 : forms) {
                QuadIdeal prod = ideal_mul(QuadIdeal(order, f1.a, f1.b),
                                           QuadIdeal(order, f2.a, f2.b));
                QuadForm red = reduce_form(prod.form());
                bool found = false;
                for (const auto& f : forms) found = found || f == red;
                CHECK(found);
            }
        }
    }
}
