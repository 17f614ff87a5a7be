#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbent/truth_table.hpp"
#include "qbent/walsh.hpp"

namespace qbent {

// Unordered pair of distinct residues mod 4. The boolean functions built
// from a pair are symmetric in the two residues, so {2,3} and {3,2} are the
// same object; the difference parity decides whether the function is bent.
struct ResiduePair {
    int lo;
    int hi;

    ResiduePair(int i1, int i2);

    bool odd_difference() const { return ((hi - lo) & 1) != 0; }
    bool contains(int j) const { return j == lo || j == hi; }
    std::string to_string() const;

    auto operator<=>(const ResiduePair& other) const = default;
};

std::array<ResiduePair, 6> all_residue_pairs();
std::array<ResiduePair, 4> bent_residue_pairs(); // the odd-difference ones

// Sum of the binomial coefficients C(m,k) over k congruent to j mod 4,
// exact for 2 <= m <= 64 (computed by running a Pascal row; every value
// fits a 64-bit integer in that range).
uint64_t residue_binomial_sum(int j, int m);

// The same value from the closed-form table indexed by m mod 8, in terms of
// b = 2^(floor(m/2)-1): each entry is b^2, b^2 +- b, or 2b^2 +- b.
uint64_t residue_binomial_closed(int j, int m);

// Indicator of wt(x) mod 4 landing in the pair, as a truth table on even m.
// Its value vector is also the coset leader used in the Hadamard-code
// weight-distribution analysis below.
TruthTable weight_residue_function(ResiduePair p, int m, int max_vars = kDefaultMaxVars);

// Multiset of Hamming weights of v + c over all 2^{m+1} codewords c of the
// [2^m, m+1] Hadamard code (every affine function a.x + eps on m variables).
struct CosetWeightDistribution {
    int m = 0;
    std::map<uint64_t, uint64_t> counts; // weight -> number of codewords

    std::vector<uint64_t> support() const;
    uint64_t total() const;
};

// Distribution of the coset led by the pair's weight-residue function,
// computed from the Walsh spectrum: wt(v + (a.x + eps)) =
// 2^{m-1} - (-1)^eps F(a)/2. Requires even m >= 4.
CosetWeightDistribution coset_weight_distribution(ResiduePair p, int m);

// Classification of the pair's function by m mod 8, for even m >= 4:
// NotBent for even-difference pairs; Neither when m % 4 == 0; for
// m % 8 == 2 the pairs {0,1},{2,3} are self-dual and {0,3},{1,2}
// anti-self-dual; for m % 8 == 6 the roles swap.
DualityClass predicted_duality(ResiduePair p, int m);

} // namespace qbent
