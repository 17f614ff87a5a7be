#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qbent/errors.hpp"

namespace qbent {

class BitMatrix;

// Soft cap on the number of variables; callers may raise it per construction
// up to the hard cap. 2^24 bits per table keeps a full analysis (table,
// spectrum, ANF) comfortably in memory on a desktop.
inline constexpr int kDefaultMaxVars = 24;
inline constexpr int kHardMaxVars = 30;

// Bit-packed value vector of a boolean function on m variables.
//
// Input index i in [0, 2^m) encodes the point with variable x_j stored in
// bit j-1 of i, so x_1 is the least significant bit. The value f(i) is bit
// (i mod 64) of word i/64. With this ordering the truth-table index runs
// through the binary expansions of 0..2^m-1, i.e. through the columns of the
// m x 2^m matrix of all binary m-vectors in natural order.
//
// Instances are immutable after construction; every operation returns a new
// value, so tables can be shared freely across threads.
class TruthTable {
public:
    static TruthTable constant(int m, bool value, int max_vars = kDefaultMaxVars);
    static TruthTable from_predicate(int m, const std::function<bool(uint32_t)>& pred,
                                     int max_vars = kDefaultMaxVars);
    // Adopts pre-packed words; padding bits beyond 2^m are cleared.
    static TruthTable from_words(int m, std::vector<uint64_t> words,
                                 int max_vars = kDefaultMaxVars);

    int vars() const { return m_; }
    uint64_t size() const { return uint64_t{1} << m_; }

    bool get(uint32_t x) const {
        return (bits_[x >> 6] >> (x & 63)) & 1;
    }

    uint64_t weight() const;
    TruthTable complemented() const;

    const std::vector<uint64_t>& words() const { return bits_; }

    bool operator==(const TruthTable& other) const = default;

    // Serialized form: a header line "m=<int>" followed by the 2^m value
    // bits as lowercase hex. Bit i of the function is bit (i mod 8) of byte
    // i/8; bytes appear in order, two hex digits each, wrapped for
    // readability. The packing is bit-exact; whitespace is not significant
    // on input.
    void write(std::ostream& os) const;
    static TruthTable read(std::istream& is, int max_vars = kDefaultMaxVars);

private:
    TruthTable(int m, std::vector<uint64_t> bits) : m_(m), bits_(std::move(bits)) {}

    int m_;
    std::vector<uint64_t> bits_;
};

// g(x) = t(Ax + b) + c.x + eps with A an invertible m x m matrix over GF(2)
// and b, c packed bit vectors. Throws SingularMatrix when A is not
// invertible, since a non-invertible substitution is not an equivalence.
TruthTable apply_affine(const TruthTable& t, const BitMatrix& a, uint64_t b,
                        uint64_t c, bool eps);

} // namespace qbent
