#include <doctest.h>

#include "mdscodex/poly.hpp"

using namespace mdscodex;

TEST_CASE("poly gcd") {
    const FieldSpec& gf2 = field_make(2, 1);
    Poly x7m1 = Poly::x_pow_minus_one(gf2, 7);
    Poly f = Poly::from_integers(gf2, {1, 1, 0, 1});  // x^3 + x + 1
    CHECK(poly_gcd(x7m1, f) == f);

    Poly one = Poly::from_integers(gf2, {1});
    CHECK(poly_gcd(f, one) == one);

    const FieldSpec& gf11 = field_make(11, 1);
    Poly x5m1 = Poly::x_pow_minus_one(gf11, 5);
    Poly xm1 = Poly::from_integers(gf11, {-1, 1});
    CHECK(poly_gcd(x5m1, xm1) == xm1);
}

TEST_CASE("gcd divides both inputs exactly and is monic") {
    const FieldSpec& gf11 = field_make(11, 1);
    std::vector<std::pair<Poly, Poly>> cases = {
        {Poly::x_pow_minus_one(gf11, 5), Poly::from_integers(gf11, {3, 1, 4, 1})},
        {Poly::from_integers(gf11, {1, 2, 3, 4, 5}), Poly::from_integers(gf11, {5, 4, 3})},
        {Poly::from_integers(gf11, {0, 0, 1}) * Poly::from_integers(gf11, {7, 1}),
         Poly::from_integers(gf11, {7, 1}) * Poly::from_integers(gf11, {2, 9, 1})},
    };
    for (const auto& [f, g] : cases) {
        Poly d = poly_gcd(f, g);
        CHECK(d.is_monic());
        CHECK(Poly::divmod(f, d).second.is_zero());
        CHECK(Poly::divmod(g, d).second.is_zero());
    }
}

TEST_CASE("irreducibility") {
    const FieldSpec& gf2 = field_make(2, 1);
    CHECK(poly_is_irreducible(Poly::from_integers(gf2, {1, 1, 1, 1, 1})));  // Phi_5
    CHECK(poly_is_irreducible(Poly::from_integers(gf2, {1, 1, 1})));        // x^2+x+1
    CHECK(poly_is_irreducible(Poly::from_integers(gf2, {1, 1, 0, 1})));     // x^3+x+1
    CHECK(!poly_is_irreducible(Poly::from_integers(gf2, {1, 0, 0, 0, 0, 0, 0, 1})));  // x^7+1

    const FieldSpec& gf11 = field_make(11, 1);
    CHECK(!poly_is_irreducible(Poly::from_integers(gf11, {-1, 0, 1})));  // (x-1)(x+1)

    CHECK_THROWS_AS(poly_is_irreducible(Poly::from_integers(gf2, {1})), std::invalid_argument);
}

TEST_CASE("divmod reconstructs the dividend") {
    const FieldSpec& gf11 = field_make(11, 1);
    Poly a = Poly::from_integers(gf11, {1, 2, 3, 4, 5, 6});
    Poly b = Poly::from_integers(gf11, {7, 0, 2});
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
}

TEST_CASE("eval and term count") {
    const FieldSpec& gf11 = field_make(11, 1);
    Poly f = Poly::from_integers(gf11, {1, 0, 1});  // x^2 + 1
    CHECK(f.eval(gf11.from_integer(3)) == gf11.from_integer(10));
    CHECK(f.nonzero_term_count() == 2);
    CHECK(Poly(gf11).degree() == -1);
}
