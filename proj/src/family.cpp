#include "qbent/family.hpp"

#include <bit>
#include <stdexcept>

namespace qbent {

namespace {

void check_residue(int j) {
    if (j < 0 || j > 3)
        throw std::invalid_argument("residue index must be in {0,1,2,3}");
}

void check_sum_domain(int j, int m) {
    check_residue(j);
    if (m < 2 || m > 64)
        throw std::invalid_argument("residue binomial sums require 2 <= m <= 64");
}

void check_even(int m, int min_m) {
    if (m < min_m || m % 2 != 0)
        throw std::invalid_argument("m must be even and at least " + std::to_string(min_m));
}

} // namespace

ResiduePair::ResiduePair(int i1, int i2) {
    check_residue(i1);
    check_residue(i2);
    if (i1 == i2)
        throw std::invalid_argument("ResiduePair: residues must differ");
    lo = i1 < i2 ? i1 : i2;
    hi = i1 < i2 ? i2 : i1;
}

std::string ResiduePair::to_string() const {
    return "{" + std::to_string(lo) + "," + std::to_string(hi) + "}";
}

std::array<ResiduePair, 6> all_residue_pairs() {
    return {ResiduePair{0, 1}, ResiduePair{0, 2}, ResiduePair{0, 3},
            ResiduePair{1, 2}, ResiduePair{1, 3}, ResiduePair{2, 3}};
}

std::array<ResiduePair, 4> bent_residue_pairs() {
    return {ResiduePair{0, 1}, ResiduePair{0, 3}, ResiduePair{1, 2}, ResiduePair{2, 3}};
}

uint64_t residue_binomial_sum(int j, int m) {
    check_sum_domain(j, m);
    // Row of Pascal's triangle, updated in place from the right. C(64,32)
    // still fits in 63 bits, so the additions never overflow.
    std::vector<uint64_t> row(static_cast<size_t>(m) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int k = i; k >= 1; --k)
            row[static_cast<size_t>(k)] += row[static_cast<size_t>(k) - 1];
    uint64_t sum = 0;
    for (int k = j; k <= m; k += 4)
        sum += row[static_cast<size_t>(k)];
    return sum;
}

uint64_t residue_binomial_closed(int j, int m) {
    check_sum_domain(j, m);
    // Coefficients (a,c) of a*b^2 + c*b with b = 2^(floor(m/2)-1);
    // rows indexed by m mod 8, columns by the residue j.
    static constexpr int kCoeff[8][4][2] = {
        {{1, 1}, {1, 0}, {1, -1}, {1, 0}},   // m % 8 == 0
        {{2, 1}, {2, 1}, {2, -1}, {2, -1}},  // m % 8 == 1
        {{1, 0}, {1, 1}, {1, 0}, {1, -1}},   // m % 8 == 2
        {{2, -1}, {2, 1}, {2, 1}, {2, -1}},  // m % 8 == 3
        {{1, -1}, {1, 0}, {1, 1}, {1, 0}},   // m % 8 == 4
        {{2, -1}, {2, -1}, {2, 1}, {2, 1}},  // m % 8 == 5
        {{1, 0}, {1, -1}, {1, 0}, {1, 1}},   // m % 8 == 6
        {{2, 1}, {2, -1}, {2, -1}, {2, 1}},  // m % 8 == 7
    };
    const uint64_t b = uint64_t{1} << (m / 2 - 1);
    const int a = kCoeff[m % 8][j][0];
    const int c = kCoeff[m % 8][j][1];
    uint64_t value = static_cast<uint64_t>(a) * b * b;
    if (c > 0)
        value += b;
    else if (c < 0)
        value -= b;
    return value;
}

TruthTable weight_residue_function(ResiduePair p, int m, int max_vars) {
    check_even(m, 2);
    return TruthTable::from_predicate(
        m, [p](uint32_t x) { return p.contains(std::popcount(x) & 3); }, max_vars);
}

std::vector<uint64_t> CosetWeightDistribution::support() const {
    std::vector<uint64_t> s;
    s.reserve(counts.size());
    for (const auto& [w, n] : counts)
        s.push_back(w);
    return s;
}

uint64_t CosetWeightDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [w, n] : counts)
        t += n;
    return t;
}

CosetWeightDistribution coset_weight_distribution(ResiduePair p, int m) {
    check_even(m, 4);
    WalshSpectrum s = wht(weight_residue_function(p, m));
    const int64_t half = int64_t{1} << (m - 1);
    CosetWeightDistribution dist;
    dist.m = m;
    for (int32_t v : s.values()) {
        // One codeword per (a, eps); eps flips the sign of F(a)/2.
        dist.counts[static_cast<uint64_t>(half - v / 2)] += 1;
        dist.counts[static_cast<uint64_t>(half + v / 2)] += 1;
    }
    return dist;
}

DualityClass predicted_duality(ResiduePair p, int m) {
    check_even(m, 4);
    if (!p.odd_difference())
        return DualityClass::NotBent;
    switch (m % 8) {
    case 0:
    case 4:
        return DualityClass::Neither;
    case 2:
        return (p == ResiduePair{0, 1} || p == ResiduePair{2, 3})
                   ? DualityClass::SelfDual
                   : DualityClass::AntiSelfDual;
    default: // m % 8 == 6
        return (p == ResiduePair{0, 3} || p == ResiduePair{1, 2})
                   ? DualityClass::SelfDual
                   : DualityClass::AntiSelfDual;
    }
}

} // namespace qbent
