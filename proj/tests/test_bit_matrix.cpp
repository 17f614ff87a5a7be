#include <doctest.h>

#include <random>

#include "qbent/bit_matrix.hpp"
#include "qbent/maiorana.hpp"

#include "oracles.hpp"

using namespace qbent;

TEST_CASE("multiplication") {
    std::mt19937_64 rng(31);
    BitMatrix x = oracle::random_matrix(5, 5, rng);
    CHECK(BitMatrix::identity(5) * x == x);
    CHECK(x * BitMatrix::identity(5) == x);

    // (J+I)^2 = I on even order, J^2 = J on odd order
    BitMatrix j6 = BitMatrix::ones(6, 6);
    CHECK((j6 + BitMatrix::identity(6)) * (j6 + BitMatrix::identity(6)) ==
          BitMatrix::identity(6));
    BitMatrix j5 = BitMatrix::ones(5, 5);
    CHECK(j5 * j5 == j5);
    CHECK(j5 * j5 == oracle::naive_matmul(j5, j5));

    CHECK_THROWS_AS(BitMatrix(3, 4) * BitMatrix(3, 4), std::invalid_argument);
}

TEST_CASE("multiplication matches the naive product") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix a = oracle::random_matrix(7, 12, rng);
        BitMatrix b = oracle::random_matrix(12, 9, rng);
        CHECK(a * b == oracle::naive_matmul(a, b));
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix a = oracle::random_matrix(16, 16, rng);
        BitMatrix b = oracle::random_matrix(16, 16, rng);
        BitMatrix c = oracle::random_matrix(16, 16, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("transpose") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix a = oracle::random_matrix(6, 11, rng);
        BitMatrix b = oracle::random_matrix(11, 8, rng);
        CHECK(a.transposed().transposed() == a);
        CHECK((a * b).transposed() == b.transposed() * a.transposed());
    }
}

TEST_CASE("is_involution") {
    CHECK(BitMatrix::identity(4).is_involution());
    CHECK((BitMatrix::ones(6, 6) + BitMatrix::identity(6)).is_involution());
    CHECK_FALSE((BitMatrix::ones(5, 5) + BitMatrix::identity(5)).is_involution());
    CHECK_THROWS_AS(BitMatrix(2, 3).is_involution(), std::invalid_argument);
}

TEST_CASE("is_alternating") {
    CHECK(BitMatrix(4, 4).is_alternating());
    CHECK((BitMatrix::ones(6, 6) + BitMatrix::identity(6)).is_alternating());
    CHECK_FALSE(BitMatrix::identity(4).is_alternating());

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix a = oracle::random_matrix(9, 9, rng);
        CHECK((a + a.transposed()).is_alternating());
    }
    CHECK_THROWS_AS(BitMatrix(2, 3).is_alternating(), std::invalid_argument);
}

TEST_CASE("is_invertible") {
    CHECK(BitMatrix::identity(6).is_invertible());
    CHECK_FALSE(BitMatrix::ones(4, 4).is_invertible());
    CHECK(mm_affine_witness(4).substitution.is_invertible());
    CHECK_THROWS_AS(BitMatrix(2, 3).is_invertible(), std::invalid_argument);
}

TEST_CASE("apply") {
    // y_i = row_i . x
    BitMatrix a(3, 3);
    a.set_row(0, 0b011); // y_1 = x_1 + x_2
    a.set_row(1, 0b100); // y_2 = x_3
    a.set_row(2, 0b111); // y_3 = x_1 + x_2 + x_3
    CHECK(a.apply(0b001) == 0b101);
    CHECK(a.apply(0b110) == 0b011);
    CHECK(a.apply(0b011) == 0b000);
}

TEST_CASE("text dump") {
    BitMatrix a(2, 3);
    a.set(0, 1, true);
    a.set(1, 2, true);
    CHECK(to_text(a) == "010\n001\n");
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(BitMatrix(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix(4, 65), std::invalid_argument);
    CHECK_THROWS_AS(BitMatrix(2, 2) + BitMatrix(3, 3), std::invalid_argument);
}
