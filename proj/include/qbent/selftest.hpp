#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbent {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first mismatch, empty when passing
};

// Runs the library's cross-checks with every sweep clamped to m <= max_m:
// closed forms against direct sums, bentness against difference parity,
// ANF identities, weights, spectral against predicted classification, the
// matrix criterion against spectra, dual involution and pairing, coset
// distributions against direct enumeration, split-exhaustive MM detection,
// the affine witness identity, and the butterfly transform against the
// defining sum. Deterministic for a fixed seed and independent of order.
std::vector<CheckResult> run_selftest(int max_m = 8, uint64_t seed = 0x51e7e57);

} // namespace qbent
