#include <random>

#include "cocyc/gf2.hpp"
#include "cocyc/types.hpp"
#include "doctest.h"

using namespace cocyc;
using gf2::Matrix;
using gf2::Vector;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
    return m;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
    return v;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(gf2::rank(Matrix(0, 0)) == 0);
    CHECK(gf2::rank(Matrix::identity(3)) == 3);
    CHECK(gf2::rank(Matrix{{1, 1}, {1, 1}}) == 1);
    CHECK(gf2::rank(Matrix(4, 7)) == 0);
}

TEST_CASE("solve on small systems") {
    auto x = gf2::solve(Matrix::identity(2), Vector{1, 0});
    REQUIRE(x);
    CHECK(*x == Vector{1, 0});

    // [[1,1]] x = 0: the solutions are (0,0) and (1,1); enumerate to check.
    const Matrix m{{1, 1}};
    x = gf2::solve(m, Vector{0});
    REQUIRE(x);
    CHECK(((*x == Vector{0, 0}) || (*x == Vector{1, 1})));

    CHECK_FALSE(gf2::solve(Matrix(2, 2), Vector{1, 0}));
    CHECK_THROWS_AS(gf2::solve(Matrix(2, 2), Vector{1, 0, 1}), ContractViolation);
}

TEST_CASE("column span membership") {
    std::mt19937_64 rng(7);
    const Matrix any = random_matrix(5, 3, rng);
    CHECK(gf2::in_column_span(any, Vector(5)));
    CHECK(gf2::in_column_span(Matrix::identity(2), Vector{1, 1}));
    CHECK_FALSE(gf2::in_column_span(Matrix(3, 3), Vector{0, 1, 0}));
}

TEST_CASE("xor is an involution") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const Vector a = random_vector(100, rng);
        const Vector b = random_vector(100, rng);
        CHECK((a ^ b ^ b) == a);
        CHECK((a ^ a).is_zero());
    }
}

TEST_CASE("random systems: span, transpose rank, exact solutions") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = 1 + rng() % 64;
        const std::size_t c = 1 + rng() % 64;
        Matrix m = random_matrix(r, c, rng);
        // Make some instances rank deficient.
        if (t % 3 == 0 && r > 1) {
            for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m.get(0, j));
        }
        const Vector x = random_vector(c, rng);
        const Vector b = gf2::multiply(m, x);
        CHECK(gf2::in_column_span(m, b));
        CHECK(gf2::rank(m) == gf2::rank(m.transpose()));
        CHECK(gf2::rank(m) <= std::min(r, c));

        const Vector b2 = random_vector(r, rng);
        if (auto y = gf2::solve(m, b2)) CHECK(gf2::multiply(m, *y) == b2);
        if (auto y = gf2::solve(m, b)) CHECK(gf2::multiply(m, *y) == b);
    }
}

TEST_CASE("matrix product and transpose agree") {
    std::mt19937_64 rng(5);
    const Matrix a = random_matrix(9, 70, rng);
    const Matrix b = random_matrix(70, 13, rng);
    CHECK(gf2::multiply(a, b).transpose() == gf2::multiply(b.transpose(), a.transpose()));
}
