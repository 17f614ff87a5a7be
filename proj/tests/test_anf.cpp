#include <doctest.h>

#include <random>

#include "qbent/anf.hpp"
#include "qbent/family.hpp"

#include "oracles.hpp"

using namespace qbent;

TEST_CASE("anf of simple functions") {
    TruthTable prod = TruthTable::from_predicate(
        2, [](uint32_t i) { return (i & 3) == 3; }); // x_1 x_2
    CHECK(anf(prod) == Anf(2, {0b11}));

    CHECK(anf(TruthTable::constant(3, false)) == Anf(3, {}));
    CHECK(anf(TruthTable::constant(3, true)) == Anf(3, {0}));
}

TEST_CASE("anf of the weight-residue functions") {
    // {2,3}: exactly the 6 quadratic monomials on 4 variables
    std::vector<uint32_t> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            pairs.push_back((uint32_t{1} << i) | (uint32_t{1} << j));
    CHECK(anf(weight_residue_function({2, 3}, 4)) == Anf(4, pairs));

    // {1,2}: all 4 linear terms on top of the 6 quadratic ones
    std::vector<uint32_t> with_linear = pairs;
    for (int i = 0; i < 4; ++i)
        with_linear.push_back(uint32_t{1} << i);
    CHECK(anf(weight_residue_function({1, 2}, 4)) == Anf(4, with_linear));
}

TEST_CASE("degree") {
    CHECK(anf(TruthTable::constant(4, false)).degree() == std::nullopt);
    CHECK(anf(TruthTable::constant(4, true)).degree() == 0);
    for (int m : {4, 6, 8})
        for (ResiduePair p : bent_residue_pairs())
            CHECK(anf(weight_residue_function(p, m)).degree() == 2);
    // even-difference pairs collapse to affine functions
    CHECK(anf(weight_residue_function({0, 2}, 4)).degree() == 1);
    CHECK(anf(weight_residue_function({1, 3}, 4)).degree() == 1);
}

TEST_CASE("from_anf basics") {
    CHECK(from_anf(Anf(3, {})) == TruthTable::constant(3, false));
    CHECK(from_anf(Anf(3, {0})) == TruthTable::constant(3, true));
}

TEST_CASE("anf and from_anf are mutually inverse") {
    // exhaustive over every function of up to 4 variables
    for (int m = 1; m <= 4; ++m) {
        const uint64_t functions = uint64_t{1} << (uint64_t{1} << m);
        for (uint64_t v = 0; v < functions; ++v) {
            TruthTable t = TruthTable::from_words(m, {v});
            CHECK(from_anf(anf(t)) == t);
        }
    }
    // randomized on larger m
    std::mt19937_64 rng(21);
    for (int m : {5, 6, 8, 10, 12})
        for (int i = 0; i < 40; ++i) {
            TruthTable t = oracle::random_table(m, rng);
            CHECK(from_anf(anf(t)) == t);
        }
}

TEST_CASE("anf validates monomials") {
    CHECK_THROWS_AS(Anf(2, {0b100}), std::invalid_argument);
    CHECK_THROWS_AS(Anf(2, {0b11, 0b11}), std::invalid_argument);
}
