#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "levnum/errors.hpp"
#include "levnum/gf2_matrix.hpp"

using namespace levnum;
using gf2::BitVec;
using gf2::Gf2Matrix;

namespace {

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

Gf2Matrix random_regular(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Gf2Matrix m = random_matrix(rng, n, n);
        if (gf2::rank(m) == n) return m;
    }
}

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

}  // namespace

TEST_CASE("mat_vec_mul basics") {
    Gf2Matrix id2 = Gf2Matrix::identity(2);
    CHECK(gf2::mat_vec_mul(id2, BitVec{1, 0}) == BitVec{1, 0});
    Gf2Matrix m{{1, 1}, {1, 0}};
    CHECK(gf2::mat_vec_mul(m, BitVec{1, 1}) == BitVec{0, 1});
    std::mt19937_64 rng(1);
    Gf2Matrix any = random_matrix(rng, 9, 7);
    CHECK(gf2::mat_vec_mul(any, BitVec(7)) == BitVec(9));
    CHECK_THROWS_AS(gf2::mat_vec_mul(m, BitVec(3)), std::invalid_argument);
}

TEST_CASE("rank basics") {
    CHECK(gf2::rank(Gf2Matrix(3, 3)) == 0);
    CHECK(gf2::rank(Gf2Matrix::identity(7)) == 7);
    CHECK(gf2::rank(Gf2Matrix{{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("invert basics") {
    CHECK(gf2::invert(Gf2Matrix::identity(5)) == Gf2Matrix::identity(5));
    Gf2Matrix m{{1, 1}, {1, 0}};
    CHECK(gf2::invert(m) == Gf2Matrix{{0, 1}, {1, 1}});
    CHECK(gf2::mat_mul(m, gf2::invert(m)) == Gf2Matrix::identity(2));
    CHECK_THROWS_AS(gf2::invert(Gf2Matrix{{1, 1}, {1, 1}}), SingularMatrix);
    CHECK_THROWS_AS(gf2::invert(Gf2Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("solve basics") {
    BitVec b{1, 0, 1};
    CHECK(gf2::solve(Gf2Matrix::identity(3), b) == b);
    CHECK(gf2::solve(Gf2Matrix{{1, 1}, {1, 0}}, BitVec{1, 0}) == BitVec{0, 1});
    CHECK_THROWS_AS(gf2::solve(Gf2Matrix{{1, 1}, {1, 1}}, BitVec{1, 0}), SingularMatrix);
}

TEST_CASE("inverse round trip up to 512") {
    std::mt19937_64 rng(42);
    for (std::size_t n : {2, 3, 17, 64, 129, 512}) {
        Gf2Matrix m = random_regular(rng, n);
        Gf2Matrix inv = gf2::invert(m);
        CHECK(gf2::mat_mul(m, inv) == Gf2Matrix::identity(n));
        CHECK(gf2::mat_mul(inv, m) == Gf2Matrix::identity(n));
    }
}

TEST_CASE("solve composed with mat_vec_mul reproduces the input") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng() % 60;
        Gf2Matrix a = random_regular(rng, n);
        BitVec b = random_vec(rng, n);
        BitVec x = gf2::solve(a, b);
        CHECK(gf2::mat_vec_mul(a, x) == b);
    }
}

TEST_CASE("rank is invariant under row swaps and additions") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 2 + rng() % 30, cols = 1 + rng() % 40;
        Gf2Matrix m = random_matrix(rng, rows, cols);
        std::size_t base = gf2::rank(m);
        Gf2Matrix mutated = m;
        for (int op = 0; op < 8; ++op) {
            std::size_t r1 = rng() % rows, r2 = rng() % rows;
            if (rng() & 1) {
                for (std::size_t w = 0; w < mutated.words_per_row(); ++w)
                    std::swap(mutated.row_words(r1)[w], mutated.row_words(r2)[w]);
            } else if (r1 != r2) {
                for (std::size_t w = 0; w < mutated.words_per_row(); ++w)
                    mutated.row_words(r1)[w] ^= mutated.row_words(r2)[w];
            }
        }
        CHECK(gf2::rank(mutated) == base);
    }
}

TEST_CASE("vec_mat_mul agrees with column-wise dot products") {
    std::mt19937_64 rng(45);
    Gf2Matrix m = random_matrix(rng, 23, 37);
    BitVec v = random_vec(rng, 23);
    BitVec out = gf2::vec_mat_mul(v, m);
    for (std::size_t c = 0; c < 37; ++c) {
        int expect = 0;
        for (std::size_t r = 0; r < 23; ++r) expect ^= (v.get(r) && m.get(r, c)) ? 1 : 0;
        CHECK(out.get(c) == (expect == 1));
    }
}

TEST_CASE("bitvec invariants") {
    BitVec v(70);
    v.set(69, true);
    CHECK(v.popcount() == 1);
    CHECK(v.to_string().back() == '1');
    CHECK_THROWS_AS(v.set(70, true), std::out_of_range);
    BitVec a{1, 0, 1}, b{1, 1, 0};
    CHECK(a.dot(b) == 1);
    CHECK((a ^ b) == BitVec{0, 1, 1});
    CHECK_THROWS_AS(a.dot(BitVec(2)), std::invalid_argument);
}
