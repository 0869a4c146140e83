#include <doctest.h>

#include "mdscodex/fourier.hpp"
#include "oracles.hpp"

using namespace mdscodex;

namespace {

std::vector<std::int64_t> int_row(const MatrixF& m, int r) {
    std::vector<std::int64_t> out;
    for (int c = 0; c < m.cols(); ++c) {
        auto coeffs = m.at(r, c).finite_coeffs();
        out.push_back(coeffs.empty() ? 0 : coeffs[0]);
    }
    return out;
}

}  // namespace

TEST_CASE("F_5 over GF(11) with omega 4 matches the worked example") {
    const FieldSpec& gf11 = field_make(11, 1);
    FourierMatrix f = fourier_build(gf11, 5, gf11.from_integer(4));
    CHECK(int_row(f.forward, 0) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(int_row(f.forward, 1) == std::vector<std::int64_t>{1, 4, 5, 9, 3});
    CHECK(int_row(f.forward, 2) == std::vector<std::int64_t>{1, 5, 3, 4, 9});
    CHECK(int_row(f.forward, 3) == std::vector<std::int64_t>{1, 9, 4, 3, 5});
    CHECK(int_row(f.forward, 4) == std::vector<std::int64_t>{1, 3, 9, 5, 4});
    CHECK(f.forward * f.inverse == MatrixF::identity(gf11, 5));

    MatrixF sub = submatrix(f.forward, {1, 2}, {1, 2});
    CHECK(int_row(sub, 0) == std::vector<std::int64_t>{4, 5});
    CHECK(int_row(sub, 1) == std::vector<std::int64_t>{5, 3});
}

TEST_CASE("F_11 over GF(23) with omega 2 matches the worked rows") {
    const FieldSpec& gf23 = field_make(23, 1);
    FourierMatrix f = fourier_build(gf23, 11, gf23.from_integer(2));
    CHECK(int_row(f.forward, 1) ==
          std::vector<std::int64_t>{1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12});
    CHECK(int_row(f.forward, 2) ==
          std::vector<std::int64_t>{1, 4, 16, 18, 3, 12, 2, 8, 9, 13, 6});
    for (int i = 0; i < 11; ++i) {
        CHECK(f.forward.at(i, 0).is_one());
        CHECK(f.forward.at(0, i).is_one());
    }
}

TEST_CASE("fourier_build validation") {
    const FieldSpec& gf11 = field_make(11, 1);
    CHECK_THROWS_AS(fourier_build(gf11, 7), std::invalid_argument);   // 7 does not divide 10
    CHECK_THROWS_AS(fourier_build(field_make(7, 1), 7), std::invalid_argument);  // char divides p
    CHECK_THROWS_AS(fourier_build(gf11, 4), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(fourier_build(gf11, 5, gf11.from_integer(2)), std::invalid_argument);  // order 10
    CHECK_THROWS_AS(fourier_build(field_make_cyclotomic(5), 7), std::invalid_argument);

    // default omega over GF(11) is 3, the smallest element of order 5
    CHECK(fourier_build(gf11, 5).omega == gf11.from_integer(3));
}

TEST_CASE("chebotarev holds for F_5 over GF(11) with 251 submatrices") {
    FourierMatrix f = fourier_build(field_make(11, 1), 5, field_make(11, 1).from_integer(4));
    ChebotarevReport r = chebotarev_check(f.forward);
    CHECK(r.holds);
    CHECK(!r.witness.has_value());
    CHECK(r.submatrices_checked == 251);
}

TEST_CASE("chebotarev max_order 1 counts n^2 entries") {
    FourierMatrix f = fourier_build(field_make(11, 1), 5);
    ChebotarevOptions opts;
    opts.max_order = 1;
    ChebotarevReport r = chebotarev_check(f.forward, opts);
    CHECK(r.holds);
    CHECK(r.submatrices_checked == 25);
}

TEST_CASE("chebotarev fails for F_7 over GF(2^6) with an exact zero witness") {
    const FieldSpec& gf64 = field_make(2, 6);
    FourierMatrix f = fourier_build(gf64, 7);
    ChebotarevReport r = chebotarev_check(f.forward);
    CHECK(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->det.is_zero());
    MatrixF sub = submatrix(f.forward, r.witness->rows, r.witness->cols);
    CHECK(determinant(sub).is_zero());
    CHECK(oracles::cofactor_det(sub).is_zero());
    // smallest witnesses are 3x3 or 4x4 on this instance
    CHECK(r.witness->rows.size() >= 3);
    CHECK(r.witness->rows.size() <= 4);
}

TEST_CASE("chebotarev reports are identical for any worker count") {
    const FieldSpec& gf64 = field_make(2, 6);
    FourierMatrix bad = fourier_build(gf64, 7);
    ChebotarevOptions seq, par;
    seq.jobs = 1;
    par.jobs = 4;
    ChebotarevReport a = chebotarev_check(bad.forward, seq);
    ChebotarevReport b = chebotarev_check(bad.forward, par);
    CHECK(a.holds == b.holds);
    CHECK(a.submatrices_checked == b.submatrices_checked);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->rows == b.witness->rows);
    CHECK(a.witness->cols == b.witness->cols);

    FourierMatrix good = fourier_build(field_make(11, 1), 5);
    CHECK(chebotarev_check(good.forward, seq).submatrices_checked ==
          chebotarev_check(good.forward, par).submatrices_checked);
}

TEST_CASE("chebotarev positive suite at unit scale") {
    // nicely pairs
    ChebotarevReport f3_gf4 = chebotarev_check(fourier_build(field_make(2, 2), 3).forward);
    CHECK(f3_gf4.holds);
    CHECK(f3_gf4.submatrices_checked == 19);
    CHECK(chebotarev_check(fourier_build(field_make(2, 4), 5).forward).holds);
    // germain pairs
    CHECK(chebotarev_check(fourier_build(field_make(7, 1), 3).forward).holds);
    CHECK(chebotarev_check(fourier_build(field_make(11, 1), 5).forward).holds);
    // characteristic zero
    CHECK(chebotarev_check(fourier_build(field_make_cyclotomic(3), 3).forward).holds);
    ChebotarevReport q5 = chebotarev_check(fourier_build(field_make_cyclotomic(5), 5).forward);
    CHECK(q5.holds);
    CHECK(q5.submatrices_checked == 251);
}

TEST_CASE("scan budget guard") {
    FourierMatrix f = fourier_build(field_make(23, 1), 11);
    ChebotarevOptions opts;
    opts.budget = 1000;
    CHECK_THROWS_AS(chebotarev_check(f.forward, opts), std::runtime_error);
    opts.force = true;
    opts.max_order = 2;
    CHECK(chebotarev_check(f.forward, opts).holds);
}

TEST_CASE("predicate_nicely") {
    CHECK(predicate_nicely(5, 2));
    CHECK(!predicate_nicely(7, 2));
    CHECK(predicate_nicely(13, 2));
    CHECK(predicate_nicely(3, 2));
    CHECK(predicate_nicely(11, 2));
    CHECK(predicate_nicely(17, 3));
    CHECK(predicate_nicely(7, 3));
    CHECK(predicate_nicely(7, 5));
    CHECK_THROWS_AS(predicate_nicely(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(predicate_nicely(4, 2), std::invalid_argument);
}

TEST_CASE("predicate_germain") {
    CHECK(predicate_germain(5));
    CHECK(predicate_germain(113));
    CHECK(!predicate_germain(7));
    CHECK(predicate_germain(3));
    CHECK(predicate_germain(11));
    CHECK_THROWS_AS(predicate_germain(9), std::invalid_argument);
}

TEST_CASE("isaacs criterion") {
    const FieldSpec& gf2 = field_make(2, 1);
    IsaacsReport r = isaacs_criterion(Poly::from_integers(gf2, {1, 1, 0, 1}), 7);
    CHECK(r.t == 3);
    CHECK(r.deg_h == 3);
    CHECK(r.d == 4);
    CHECK(r.violates);

    IsaacsReport one = isaacs_criterion(Poly::from_integers(gf2, {1}), 7);
    CHECK(one.t == 1);
    CHECK(one.deg_h == 0);
    CHECK(one.d == 7);
    CHECK(!one.violates);

    const FieldSpec& gf11 = field_make(11, 1);
    IsaacsReport phi5 = isaacs_criterion(Poly::from_integers(gf11, {1, 1, 1, 1, 1}), 5);
    CHECK(phi5.t == 5);
    CHECK(phi5.deg_h == 4);
    CHECK(phi5.d == 1);
    CHECK(!phi5.violates);

    CHECK_THROWS_AS(isaacs_criterion(Poly(gf2), 7), std::invalid_argument);  // zero
    CHECK_THROWS_AS(isaacs_criterion(Poly::x_pow_minus_one(gf2, 7), 7), std::invalid_argument);
    CHECK_THROWS_AS(isaacs_criterion(Poly::from_integers(gf2, {1, 1}), 2), std::invalid_argument);
}

TEST_CASE("isaacs criterion cross-validates the scans") {
    const FieldSpec& gf2 = field_make(2, 1);
    // p = 7 over characteristic 2: some f violates, matching the failed scan
    bool any_violates_7 = false;
    for (std::uint64_t enc = 1; enc < 128; ++enc) {
        std::vector<std::int64_t> coeffs;
        for (int i = 0; i < 7; ++i) coeffs.push_back(static_cast<std::int64_t>((enc >> i) & 1));
        if (isaacs_criterion(Poly::from_integers(gf2, coeffs), 7).violates) any_violates_7 = true;
    }
    CHECK(any_violates_7);

    // p = 5 over characteristic 2: no f violates, matching the holding scan
    bool any_violates_5 = false;
    for (std::uint64_t enc = 1; enc < 32; ++enc) {
        std::vector<std::int64_t> coeffs;
        for (int i = 0; i < 5; ++i) coeffs.push_back(static_cast<std::int64_t>((enc >> i) & 1));
        if (isaacs_criterion(Poly::from_integers(gf2, coeffs), 5).violates) any_violates_5 = true;
    }
    CHECK(!any_violates_5);
}

TEST_CASE("scan_prime_pairs") {
    auto empty = scan_prime_pairs(2, 2);
    CHECK(empty.empty());

    auto small = scan_prime_pairs(3, 3);
    REQUIRE(small.size() == 1);
    CHECK(small[0].p == 3);
    CHECK(small[0].q == 2);
    CHECK(small[0].guarantee == PairGuarantee::Nicely);

    auto wide = scan_prime_pairs(13, 23);
    auto find = [&](std::int64_t p, std::int64_t q) -> const PrimePair* {
        for (const auto& pair : wide) {
            if (pair.p == p && pair.q == q) return &pair;
        }
        return nullptr;
    };
    REQUIRE(find(5, 11) != nullptr);
    CHECK(find(5, 11)->guarantee == PairGuarantee::Germain);
    REQUIRE(find(11, 23) != nullptr);
    CHECK(find(11, 23)->guarantee == PairGuarantee::Germain);
    REQUIRE(find(3, 2) != nullptr);
    CHECK(find(3, 2)->guarantee == PairGuarantee::Nicely);
    REQUIRE(find(5, 2) != nullptr);
    CHECK(find(5, 2)->guarantee == PairGuarantee::Nicely);
    REQUIRE(find(7, 2) != nullptr);
    CHECK(find(7, 2)->guarantee == PairGuarantee::None);

    // ordered by (p, q)
    for (std::size_t i = 1; i < wide.size(); ++i) {
        CHECK((wide[i - 1].p < wide[i].p ||
               (wide[i - 1].p == wide[i].p && wide[i - 1].q < wide[i].q)));
    }
}

TEST_CASE("guaranteed pairs up to p = 7 all scan clean") {
    for (const auto& pair : scan_prime_pairs(7, 11)) {
        if (pair.guarantee == PairGuarantee::None) continue;
        const FieldSpec& field = pair.guarantee == PairGuarantee::Germain
                                     ? field_make(pair.q, 1)
                                     : field_make(pair.q, static_cast<int>(pair.p) - 1);
        ChebotarevReport r = chebotarev_check(fourier_build(field, pair.p).forward);
        CHECK(r.holds);
    }
}

TEST_CASE("the Germain pair p = 11 fails: three 11th roots sum to zero mod 23") {
    // 2^0 + 2^2 + 2^6 = 1 + 4 + 18 = 23, so the minor with row exponents
    // {0,1,3} at those columns is (sum of roots) * Vandermonde = 0.
    const FieldSpec& gf23 = field_make(23, 1);
    FourierMatrix f = fourier_build(gf23, 11, gf23.from_integer(2));
    ChebotarevReport r = chebotarev_check(f.forward);
    CHECK(!r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->rows == std::vector<int>{0, 1, 3});
    CHECK(r.witness->cols == std::vector<int>{0, 2, 6});
    CHECK(r.submatrices_checked == 3324);
    CHECK(determinant(submatrix(f.forward, r.witness->rows, r.witness->cols)).is_zero());
    CHECK(oracles::cofactor_det(submatrix(f.forward, r.witness->rows, r.witness->cols)).is_zero());

    // cross-validation: f = (x-1)(x-4)(x-18) = x^3 + 2x + 20 divides x^11 - 1
    // over GF(23) and misses its quadratic term
    IsaacsReport isaacs = isaacs_criterion(Poly::from_integers(gf23, {20, 2, 0, 1}), 11);
    CHECK(isaacs.t == 3);
    CHECK(isaacs.deg_h == 3);
    CHECK(isaacs.violates);
}
