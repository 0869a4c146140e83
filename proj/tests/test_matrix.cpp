#include <doctest.h>

#include "mdscodex/matrix.hpp"
#include "oracles.hpp"

using namespace mdscodex;

namespace {

MatrixF from_ints(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<FieldElement>> out;
    for (const auto& row : rows) {
        std::vector<FieldElement> r;
        for (std::int64_t v : row) r.push_back(f.from_integer(v));
        out.push_back(std::move(r));
    }
    return MatrixF::from_rows(f, std::move(out));
}

}  // namespace

TEST_CASE("determinant basics") {
    const FieldSpec& gf11 = field_make(11, 1);
    CHECK(determinant(MatrixF::identity(gf11, 3)) == gf11.one());

    // top-left 3x3 of F_5 over GF(11), omega = 4; frozen from cofactor expansion
    MatrixF m = from_ints(gf11, {{1, 1, 1}, {1, 4, 5}, {1, 5, 3}});
    FieldElement d = determinant(m);
    CHECK(d == oracles::cofactor_det(m));
    CHECK(d == gf11.from_integer(1));
    CHECK(!d.is_zero());

    CHECK_THROWS_AS(determinant(MatrixF(gf11, 2, 3)), std::invalid_argument);
}

TEST_CASE("determinant over the cyclotomic rationals") {
    const FieldSpec& q5 = field_make_cyclotomic(5);
    FieldElement w = q5.generator_x();
    MatrixF m(q5, 2, 2);
    m.set(0, 0, q5.one());
    m.set(0, 1, q5.one());
    m.set(1, 0, q5.one());
    m.set(1, 1, w);
    // cofactor expansion by hand: w - 1
    CHECK(determinant(m) == w - q5.one());
    CHECK(determinant(m) == oracles::cofactor_det(m));
}

TEST_CASE("determinant is multiplicative") {
    oracles::Sampler rng(7);
    for (const FieldSpec* f : {&field_make(11, 1), &field_make(2, 4), &field_make(23, 1)}) {
        for (int trial = 0; trial < 8; ++trial) {
            MatrixF a = rng.matrix(*f, 4, 4);
            MatrixF b = rng.matrix(*f, 4, 4);
            CHECK(determinant(a * b) == determinant(a) * determinant(b));
        }
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    oracles::Sampler rng(13);
    for (const FieldSpec* f : {&field_make(11, 1), &field_make(2, 4), &field_make(3, 6)}) {
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 4; ++trial) {
                MatrixF a = rng.matrix(*f, n, n);
                CHECK(determinant(a) == oracles::cofactor_det(a));
            }
        }
    }
}

TEST_CASE("rank and kernel") {
    const FieldSpec& gf11 = field_make(11, 1);
    CHECK(rank(from_ints(gf11, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 1);
    CHECK(kernel_basis(MatrixF::identity(gf11, 4)).empty());

    oracles::Sampler rng(21);
    for (const FieldSpec* f : {&field_make(11, 1), &field_make(2, 4)}) {
        for (int trial = 0; trial < 6; ++trial) {
            MatrixF m = rng.matrix(*f, 3, 5);
            auto basis = kernel_basis(m);
            CHECK(rank(m) + static_cast<int>(basis.size()) == m.cols());
            for (const auto& v : basis) {
                for (const FieldElement& entry : mat_vec(m, v)) CHECK(entry.is_zero());
            }
        }
    }
}

TEST_CASE("solve") {
    const FieldSpec& gf11 = field_make(11, 1);
    MatrixF m = from_ints(gf11, {{1, 1}, {1, 4}});
    auto x = solve(m, {gf11.from_integer(2), gf11.from_integer(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == gf11.one());
    CHECK((*x)[1] == gf11.one());

    // inconsistent system
    MatrixF s = from_ints(gf11, {{1, 1}, {2, 2}});
    CHECK(!solve(s, {gf11.from_integer(1), gf11.from_integer(3)}).has_value());
    CHECK(solve(s, {gf11.from_integer(1), gf11.from_integer(2)}).has_value());

    CHECK_THROWS_AS(solve(m, {gf11.one()}), std::invalid_argument);
}

TEST_CASE("submatrix") {
    const FieldSpec& gf11 = field_make(11, 1);
    MatrixF m = from_ints(gf11, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(submatrix(m, {0, 1, 2}, {0, 1, 2}) == m);
    MatrixF corner = submatrix(m, {0}, {0});
    CHECK(corner.rows() == 1);
    CHECK(corner.at(0, 0) == gf11.one());
    MatrixF mid = submatrix(m, {1, 2}, {0, 2});
    CHECK(mid.at(0, 0) == gf11.from_integer(4));
    CHECK(mid.at(1, 1) == gf11.from_integer(9));

    CHECK_THROWS_AS(submatrix(m, {1, 1}, {0}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(submatrix(m, {2, 1}, {0}), std::invalid_argument);  // not increasing
    CHECK_THROWS_AS(submatrix(m, {0}, {3}), std::out_of_range);
}

TEST_CASE("row space comparison") {
    const FieldSpec& gf11 = field_make(11, 1);
    // rows e_0, e_1, e_2 of F_5 over GF(11) with omega = 4
    MatrixF e01 = from_ints(gf11, {{1, 1, 1, 1, 1}, {1, 4, 5, 9, 3}});
    MatrixF e02 = from_ints(gf11, {{1, 1, 1, 1, 1}, {1, 5, 3, 4, 9}});
    CHECK(row_space_equal(e01, e01));

    // permuted and scaled rows span the same space
    MatrixF scaled = from_ints(gf11, {{2, 8, 10, 7, 6}, {1, 1, 1, 1, 1}});
    CHECK(row_space_equal(e01, scaled));

    CHECK(!row_space_equal(e01, e02));
    CHECK(rank(e01.stacked(e02)) == 3);

    CHECK_THROWS_AS(row_space_equal(e01, from_ints(gf11, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("vector helpers") {
    const FieldSpec& gf11 = field_make(11, 1);
    MatrixF m = from_ints(gf11, {{1, 2}, {3, 4}});
    auto v = mat_vec(m, {gf11.one(), gf11.one()});
    CHECK(v[0] == gf11.from_integer(3));
    CHECK(v[1] == gf11.from_integer(7));
    auto u = vec_mat({gf11.one(), gf11.one()}, m);
    CHECK(u[0] == gf11.from_integer(4));
    CHECK(u[1] == gf11.from_integer(6));
}
