#include <doctest.h>

#include <bit>
#include <random>
#include <sstream>

#include "qbent/bit_matrix.hpp"
#include "qbent/family.hpp"
#include "qbent/truth_table.hpp"
#include "qbent/walsh.hpp"

#include "oracles.hpp"

using namespace qbent;

TEST_CASE("from_predicate basics") {
    TruthTable zero = TruthTable::from_predicate(2, [](uint32_t) { return false; });
    CHECK(zero.size() == 4);
    for (uint32_t i = 0; i < 4; ++i)
        CHECK_FALSE(zero.get(i));

    // parity of the index popcount is x_1 + x_2
    TruthTable parity = TruthTable::from_predicate(
        2, [](uint32_t i) { return (std::popcount(i) & 1) != 0; });
    CHECK_FALSE(parity.get(0b00));
    CHECK(parity.get(0b01));
    CHECK(parity.get(0b10));
    CHECK_FALSE(parity.get(0b11));

    TruthTable residues = TruthTable::from_predicate(4, [](uint32_t i) {
        int w = std::popcount(i) & 3;
        return w == 2 || w == 3;
    });
    CHECK(residues.weight() == 10); // C(4,2) + C(4,3) = 6 + 4

    CHECK_THROWS_AS(TruthTable::from_predicate(0, [](uint32_t) { return false; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(TruthTable::from_predicate(25, [](uint32_t) { return false; }),
                    std::invalid_argument);
    // the guard is configurable
    CHECK_NOTHROW(TruthTable::from_predicate(25, [](uint32_t) { return false; }, 26));
}

TEST_CASE("weight") {
    CHECK(TruthTable::constant(3, false).weight() == 0);
    CHECK(TruthTable::constant(3, true).weight() == 8);
    CHECK(weight_residue_function({0, 1}, 10).weight() == 528);
    CHECK(weight_residue_function({1, 2}, 6).weight() == 28);
    CHECK(weight_residue_function({1, 2}, 6).weight() ==
          oracle::residue_binomial(1, 6) + oracle::residue_binomial(2, 6));
}

TEST_CASE("complement") {
    CHECK(TruthTable::constant(4, false).complemented() == TruthTable::constant(4, true));
    CHECK(weight_residue_function({2, 3}, 6).complemented() ==
          weight_residue_function({0, 1}, 6));
    CHECK(weight_residue_function({1, 2}, 4).complemented() ==
          weight_residue_function({0, 3}, 4));

    std::mt19937_64 rng(11);
    for (int m : {3, 7, 9}) {
        TruthTable t = oracle::random_table(m, rng);
        CHECK(t.complemented().weight() == t.size() - t.weight());
        CHECK(t.complemented().complemented() == t);
    }
}

TEST_CASE("apply_affine identity and complement") {
    TruthTable f = weight_residue_function({2, 3}, 4);
    BitMatrix id = BitMatrix::identity(4);
    CHECK(apply_affine(f, id, 0, 0, false) == f);
    CHECK(apply_affine(f, id, 0, 0, true) == f.complemented());

    BitMatrix j = BitMatrix::ones(4, 4);
    CHECK_THROWS_AS(apply_affine(f, j, 0, 0, false), SingularMatrix);
}

TEST_CASE("apply_affine preserves bentness") {
    std::mt19937_64 rng(12);
    TruthTable f = weight_residue_function({1, 2}, 6);
    REQUIRE(is_bent(wht(f)));
    for (int trial = 0; trial < 10; ++trial) {
        BitMatrix a = oracle::random_invertible(6, rng);
        uint64_t b = rng() & 63;
        uint64_t c = rng() & 63;
        TruthTable g = apply_affine(f, a, b, c, (rng() & 1) != 0);
        CHECK(is_bent(wht(g)));
        uint64_t w = g.weight();
        CHECK((w == 32 - 4 || w == 32 + 4));
    }
}

TEST_CASE("file round trip") {
    std::mt19937_64 rng(13);
    for (int m : {1, 2, 3, 6, 8, 11}) {
        TruthTable t = oracle::random_table(m, rng);
        std::stringstream ss;
        t.write(ss);
        CHECK(TruthTable::read(ss) == t);
    }
}

TEST_CASE("file format is bit-exact") {
    // x_1 + x_2 on two variables: values 0,1,1,0 -> byte 0b0110
    TruthTable parity = TruthTable::from_predicate(
        2, [](uint32_t i) { return (std::popcount(i) & 1) != 0; });
    std::stringstream ss;
    parity.write(ss);
    CHECK(ss.str() == "m=2\n06\n");

    std::stringstream in("m=2\n06\n");
    CHECK(TruthTable::read(in) == parity);
}

TEST_CASE("file reader rejects malformed input") {
    auto fails = [](const std::string& text) {
        std::stringstream ss(text);
        CHECK_THROWS_AS(TruthTable::read(ss), std::invalid_argument);
    };
    fails("");
    fails("n=2\n06\n");
    fails("m=2\n0\n");      // too few digits
    fails("m=2\n0g\n");     // non-hex
    fails("m=2\n16\n");     // padding bit set (bit 4)
    fails("m=0\n\n");
    fails("m=99\n00\n");
}
