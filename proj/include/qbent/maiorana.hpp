#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbent/bit_matrix.hpp"
#include "qbent/truth_table.hpp"

namespace qbent {

// Partition of the m variables into two blocks of size m/2. The x block is
// the designated "inner product" block; within each block variables are
// taken in increasing index order when forming sub-indices.
struct CoordinateSplit {
    int m = 0;
    uint32_t x_mask = 0; // bit j-1 set iff variable j is in the x block

    CoordinateSplit(int m, uint32_t x_mask);

    uint32_t y_mask() const;
    std::vector<int> x_vars() const; // 1-based, ascending
    std::vector<int> y_vars() const;
    std::string to_string() const;

    bool operator==(const CoordinateSplit& other) const = default;
};

// Every size-m/2 subset as an x block, in ascending mask order. There are
// C(m, m/2) of them; both roles of an unordered partition appear.
std::vector<CoordinateSplit> all_splits(int m);

// Decomposition f(z) = x . phi(y) + g(y): phi maps each y sub-index to an
// x-block mask, g is a function of the y block. A decomposition is reported
// only when phi is a bijection, which is exactly when the construction is
// bent.
struct MmWitness {
    std::vector<uint32_t> phi;
    TruthTable g;
};

// Builds x . phi(y) + g(y) under the split. phi may be any value table of
// 2^{m/2} entries; the result is bent iff phi is a bijection.
TruthTable mm_construct(const std::vector<uint32_t>& phi, const TruthTable& g,
                        const CoordinateSplit& split);

// Exact detection for one split: a witness exists iff every restriction of
// t with the y block fixed is affine in the x block and the extracted phi
// is a bijection.
std::optional<MmWitness> detect_mm(const TruthTable& t, const CoordinateSplit& split);

// First split (ascending x-mask order) admitting a witness. Guarded at
// m <= 12 (924 splits); beyond that throws ResourceLimit.
std::optional<std::pair<CoordinateSplit, MmWitness>>
detect_mm_any_split(const TruthTable& t);

// The quadratic x_1x_2 + x_3x_4 + ... + x_{m-1}x_m, a textbook
// Maiorana-McFarland bent function (split odd/even positions, identity phi).
TruthTable paired_product_function(int m, int max_vars = kDefaultMaxVars);

// Change of variables carrying the paired-product function onto the
// weight-residue function of {2,3}: substitution y_i = x_i + x_{i+1} for odd
// i and y_i = x_i + ... + x_m for even i, plus the linear correction
// x_2 + x_4 + ... + x_m. Row i-1 of `substitution` holds the x coefficients
// of y_i; `correction` is the packed correction vector. The identity
// paired_product(A x) + correction.x = weight_residue({2,3}) holds for every
// even m >= 4, and A is invertible (checked; failure would throw
// SingularMatrix rather than adjust the rule).
struct AffineMmWitness {
    BitMatrix substitution;
    uint64_t correction = 0;
};

AffineMmWitness mm_affine_witness(int m);

} // namespace qbent
