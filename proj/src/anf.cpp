#include "qbent/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qbent {

namespace {

// In-place binary Moebius transform on a packed 2^m-bit vector:
// for every k, positions with bit k set absorb the position with bit k
// cleared. Butterflies of width < 64 run inside each word with masked
// shifts; wider ones XOR whole words. Applying it twice is the identity.
void mobius_in_place(std::vector<uint64_t>& w, int m) {
    static constexpr uint64_t kLowHalf[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (int k = 0; k < m && k < 6; ++k) {
        const int d = 1 << k;
        for (uint64_t& word : w)
            word ^= (word & kLowHalf[k]) << d;
    }
    for (int k = 6; k < m; ++k) {
        const size_t dw = size_t{1} << (k - 6);
        for (size_t base = 0; base < w.size(); base += 2 * dw)
            for (size_t j = 0; j < dw; ++j)
                w[base + dw + j] ^= w[base + j];
    }
}

} // namespace

Anf::Anf(int m, std::vector<uint32_t> monomials) : m_(m), monomials_(std::move(monomials)) {
    if (m < 1 || m > kHardMaxVars)
        throw std::invalid_argument("Anf: variable count out of range");
    const uint32_t all = (uint32_t{1} << m) - 1;
    std::sort(monomials_.begin(), monomials_.end());
    for (size_t i = 0; i < monomials_.size(); ++i) {
        if (monomials_[i] & ~all)
            throw std::invalid_argument("Anf: monomial uses a variable beyond x_" +
                                        std::to_string(m));
        if (i > 0 && monomials_[i] == monomials_[i - 1])
            throw std::invalid_argument("Anf: duplicate monomial");
    }
}

bool Anf::contains(uint32_t monomial) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), monomial);
}

std::optional<int> Anf::degree() const {
    if (monomials_.empty())
        return std::nullopt;
    int deg = 0;
    for (uint32_t mono : monomials_)
        deg = std::max(deg, std::popcount(mono));
    return deg;
}

Anf anf(const TruthTable& t) {
    std::vector<uint64_t> coeff = t.words();
    mobius_in_place(coeff, t.vars());
    std::vector<uint32_t> monomials;
    for (size_t wi = 0; wi < coeff.size(); ++wi) {
        uint64_t word = coeff[wi];
        while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            monomials.push_back(static_cast<uint32_t>((wi << 6) | static_cast<size_t>(b)));
        }
    }
    return Anf(t.vars(), std::move(monomials));
}

TruthTable from_anf(const Anf& a) {
    const int m = a.vars();
    std::vector<uint64_t> bits(m >= 6 ? (size_t{1} << (m - 6)) : 1, 0);
    for (uint32_t mono : a.monomials())
        bits[mono >> 6] |= uint64_t{1} << (mono & 63);
    mobius_in_place(bits, m);
    return TruthTable::from_words(m, std::move(bits), kHardMaxVars);
}

} // namespace qbent
