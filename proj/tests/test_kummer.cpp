#include <doctest.h>

#include <random>
#include <set>

#include "gkummer/counting.hpp"
#include "gkummer/fp.hpp"
#include "gkummer/kummer.hpp"
#include "gkummer/verify.hpp"

using namespace gkummer;

namespace {

// The published sextic for the curve y^2 = x^3 - 3(5+4 sqrt5) x - 14(3+2 sqrt5).
RatPoly published_k3_sextic() {
    RatPoly g(2);
    auto add = [&](int eu, int ev, long long c) { g.add_term(ExpVec{eu, ev, 0, 0}, Rat(c)); };
    add(6, 0, 1);
    add(4, 2, -15);
    add(4, 0, -30);
    add(3, 1, 240);
    add(3, 0, -84);
    add(2, 4, 75);
    add(2, 1, 840);
    add(2, 0, -495);
    add(1, 3, -1200);
    add(1, 2, -1260);
    add(1, 0, -2100);
    add(0, 6, -125);
    add(0, 4, 750);
    add(0, 3, 1400);
    add(0, 2, 2475);
    add(0, 1, 840);
    add(0, 0, -2156);
    return g;
}

// Direct mod-p product over the minpoly roots; the independent route the
// norm construction must match at completely split primes.
FpPoly root_product(const WeierstrassCurve& curve, const std::vector<std::uint64_t>& roots,
                    std::uint64_t p) {
    const int n = curve.field()->degree();
    NFPoly f = complete_square(curve);
    FpPoly prod = FpPoly::constant(n, Fp(1, p));
    for (std::uint64_t r : roots) {
        // specialize f at theta -> r, substitute x -> sum_j r^j u_{j+1}
        FpPoly fr(1);
        for (const auto& [e, c] : f.terms()) fr.add_term(e, reduce_at_root(c, p, r));
        FpPoly image(n);
        Fp pw(1, p);
        for (int j = 0; j < n; ++j) {
            ExpVec e{};
            e[static_cast<std::size_t>(j)] = 1;
            image.add_term(e, pw);
            pw = pw * Fp(r, p);
        }
        prod = prod * fr.substitute({image});
    }
    return prod;
}

}  // namespace

TEST_CASE("completing the square") {
    auto field = NumberField::create({Int(-5), Int(0), Int(1)});
    auto nf = [&](long long c0, long long c1) { return NFElem(field, {Rat(c0), Rat(c1)}); };

    // a1 = a3 = 0: the cubic passes through unchanged
    WeierstrassCurve plain(field, nf(0, 0), nf(1, 0), nf(0, 0), nf(2, 0), nf(3, 0));
    NFPoly f = complete_square(plain);
    CHECK(*f.coeff(ExpVec{3, 0, 0, 0}) == nf(1, 0));
    CHECK(*f.coeff(ExpVec{2, 0, 0, 0}) == nf(1, 0));
    CHECK(*f.coeff(ExpVec{1, 0, 0, 0}) == nf(2, 0));
    CHECK(*f.coeff(ExpVec{0, 0, 0, 0}) == nf(3, 0));

    // a1 = 1 contributes b2/4 = 1/4 to the x^2 coefficient
    WeierstrassCurve mixed(field, nf(1, 0), nf(0, 0), nf(0, 0), nf(0, 0), nf(1, 0));
    NFPoly g = complete_square(mixed);
    CHECK(*g.coeff(ExpVec{2, 0, 0, 0}) == NFElem(field, {Rat(1, 4), Rat(0)}));
}

TEST_CASE("completing the square satisfies the resubstitution identity") {
    // (y + (a1 x + a3)/2)^2 - f(x) must equal y^2 + a1 x y + a3 y - RHS as
    // polynomials in (x, y) over the field.
    Scenario s = make_scenario("cy3-23");
    const WeierstrassCurve& c = s.curve;
    const FieldPtr& field = c.field();
    NFElem one = NFElem::from_rational(field, 1);

    NFPoly x = NFPoly::monomial(2, 0, 1, one);
    NFPoly y = NFPoly::monomial(2, 1, 1, one);
    auto cpoly = [&](const NFElem& e) { return NFPoly::constant(2, e); };

    NFPoly f1 = complete_square(c);
    NFPoly f = f1.substitute({x});  // view the cubic inside (x, y)

    NFPoly half_line = (x.scaled(c.a1()) + cpoly(c.a3())).scaled(NFElem::from_rational(field, Rat(1, 2)));
    NFPoly lhs = (y + half_line) * (y + half_line) - f;
    NFPoly rhs = y * y + (x * y).scaled(c.a1()) + y.scaled(c.a3()) -
                 (x * x * x + (x * x).scaled(c.a2()) + x.scaled(c.a4()) + cpoly(c.a6()));
    CHECK(lhs == rhs);
}

TEST_CASE("kummer polynomial of the quadratic example matches the published sextic") {
    Scenario s = make_scenario("k3-15");
    KummerModel model = build_kummer(s.curve);
    CHECK(model.n() == 2);
    CHECK(model.g() == published_k3_sextic());
}

TEST_CASE("bad primes of the embedded models") {
    KummerModel k3 = build_kummer(make_scenario("k3-15").curve);
    CHECK(k3.bad_primes() == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(k3.is_bad(2));
    CHECK(k3.is_bad(5));
    CHECK_FALSE(k3.is_bad(7));

    KummerModel cy3 = build_kummer(make_scenario("cy3-23").curve);
    CHECK(cy3.bad_primes() == std::vector<std::uint64_t>{2, 23});
    CHECK_FALSE(cy3.is_bad(3));
}

TEST_CASE("cubic example produces a rational degree-9 polynomial") {
    Scenario s = make_scenario("cy3-23");
    KummerModel model = build_kummer(s.curve);
    CHECK(model.n() == 3);
    CHECK(model.g().degree() == 9);
    CHECK(model.g().terms().size() == 218);
    for (const auto& [e, c] : model.g().terms()) {
        Int den = rat_den(c);
        while (den % 2 == 0) den /= 2;
        CHECK(den == 1);  // denominators are powers of 2 only
    }
}

TEST_CASE("leading form of a quadratic model is the norm form cubed") {
    auto field = NumberField::create({Int(-2), Int(0), Int(1)});
    auto nf = [&](long long c0, long long c1) { return NFElem(field, {Rat(c0), Rat(c1)}); };
    WeierstrassCurve curve(field, nf(0, 0), nf(0, 0), nf(0, 0), nf(0, 0), nf(0, 1));  // y^2 = x^3 + theta
    KummerModel model = build_kummer(curve);

    // (u^2 - 2 v^2)^3
    RatPoly norm_form = RatPoly::monomial(2, 0, 2, Rat(1)) + RatPoly::monomial(2, 1, 2, Rat(-2));
    RatPoly lead_expect = norm_form * norm_form * norm_form;

    RatPoly lead(2);
    for (const auto& [e, c] : model.g().terms())
        if (total_degree(e) == 6) lead.add_term(e, c);
    CHECK(lead == lead_expect);
}

TEST_CASE("norm agrees with the root product at completely split primes") {
    for (const char* name : {"k3-15", "cy3-23"}) {
        Scenario s = make_scenario(name);
        KummerModel model = build_kummer(s.curve);
        const MinPoly& mp = s.curve.field()->minpoly();
        int tested = 0;
        for (std::uint64_t p : primes_up_to(200)) {
            if (p < 3 || model.is_bad(p)) continue;
            auto roots = minpoly_roots_mod_p(mp, p);
            if (roots.kind != SplittingKind::SplitComplete) continue;
            FpPoly direct = root_product(s.curve, roots.roots, p);
            CHECK(direct == reduce_mod_p(model.g(), p));

            // the product is symmetric in the roots
            auto reversed = roots.roots;
            std::reverse(reversed.begin(), reversed.end());
            CHECK(root_product(s.curve, reversed, p) == direct);
            ++tested;
        }
        CHECK(tested >= 1);
    }
}

TEST_CASE("square scaling of g does not change the count") {
    Scenario s = make_scenario("k3-15");
    KummerModel model = build_kummer(s.curve);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> cdist(1, 50);
    const std::uint64_t ps[] = {7, 11, 13, 17, 19};
    for (int t = 0; t < 10; ++t) {
        std::uint64_t p = ps[t % 5];
        Rat c(cdist(rng), 1 + cdist(rng) % 7);
        QuadraticCharacter chi(p);
        FpPoly g1 = reduce_mod_p(model.g(), p);
        FpPoly g2 = reduce_mod_p(model.g().scaled(c * c), p);
        if (reduce_mod_p(RatPoly::constant(1, c), p).is_zero()) continue;  // c = 0 mod p
        CHECK(count_double_cover(g1, chi).count == count_double_cover(g2, chi).count);
    }
}

TEST_CASE("pointwise evaluation agrees with the counting kernel") {
    // sum over F_7^2 of (1 + chi(g(u, v))) computed by direct evaluation
    Scenario s = make_scenario("k3-15");
    KummerModel model = build_kummer(s.curve);
    const std::uint64_t p = 7;
    QuadraticCharacter chi(p);
    FpPoly g = reduce_mod_p(model.g(), p);
    long long total = 0;
    for (std::uint64_t u = 0; u < p; ++u)
        for (std::uint64_t v = 0; v < p; ++v)
            total += 1 + chi(g.evaluate({Fp(u, p), Fp(v, p)}));
    CHECK(total == 35);
    CHECK(total == count_double_cover(g, chi).count);
}

TEST_CASE("degree-4 weil restrictions are rejected") {
    CHECK_THROWS_AS(NumberField::create({Int(2), Int(0), Int(0), Int(0), Int(1)}),
                    std::invalid_argument);
}

TEST_CASE("topological invariants of the threefold") {
    TopologicalInvariants inv = expected_invariants(3);
    CHECK(inv.euler == 96);
    CHECK(inv.b0 == 1);
    CHECK(inv.b1 == 0);
    CHECK(inv.b2 == 51);
    CHECK(inv.b3 == 8);
    CHECK(inv.h11 == 51);
    CHECK(inv.h21 == 3);
    CHECK_THROWS_AS(expected_invariants(2), std::invalid_argument);
}
