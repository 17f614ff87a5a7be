#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbent/truth_table.hpp"

namespace qbent {

// Walsh-Hadamard spectrum of a boolean function: the 2^m signed correlations
// F(a) = sum over x of (-1)^(f(x) + a.x), indexed like the truth table.
// |F(a)| <= 2^m, so 32-bit entries are exact for every m this library
// accepts (wht() guards m <= 30).
class WalshSpectrum {
public:
    WalshSpectrum(int m, std::vector<int32_t> values);

    int vars() const { return m_; }
    uint64_t size() const { return uint64_t{1} << m_; }
    const std::vector<int32_t>& values() const { return values_; }
    int32_t operator[](uint32_t a) const { return values_[a]; }

    bool operator==(const WalshSpectrum& other) const = default;

private:
    int m_;
    std::vector<int32_t> values_;
};

enum class DualityClass { SelfDual, AntiSelfDual, Neither, NotBent };

const char* to_string(DualityClass c);

// In-place butterfly transform, O(m 2^m). Odd m is allowed; bentness then
// never holds but the spectrum itself is still well defined.
WalshSpectrum wht(const TruthTable& t);

// True iff m is even and |F(a)| = 2^{m/2} everywhere.
bool is_bent(const WalshSpectrum& s);

// The function whose sign pattern the spectrum carries:
// F(y) = 2^{m/2} (-1)^{dual(y)}. Throws NotBentInput unless is_bent(s).
TruthTable dual(const WalshSpectrum& s);

// Full classification by table comparison: SelfDual iff the dual equals the
// function, AntiSelfDual iff it equals the complement, Neither for other
// bent functions, NotBent otherwise. For quadratic inputs that pass the
// matrix duality criterion the class is decided from position 0 alone; the
// criterion guarantees the class is one of the two dual ones in that case.
DualityClass duality_class(const TruthTable& t);
DualityClass duality_class(const TruthTable& t, const WalshSpectrum& s);

} // namespace qbent
