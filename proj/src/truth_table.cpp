#include "qbent/truth_table.hpp"

#include <bit>
#include <cctype>
#include <istream>
#include <ostream>
#include <string>

#include "qbent/bit_matrix.hpp"

namespace qbent {

namespace {

size_t word_count(int m) {
    return m >= 6 ? (size_t{1} << (m - 6)) : 1;
}

uint64_t pad_mask(int m) {
    return m >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << m)) - 1;
}

int check_vars(int m, int max_vars) {
    if (max_vars > kHardMaxVars)
        max_vars = kHardMaxVars;
    if (m < 1 || m > max_vars)
        throw std::invalid_argument("TruthTable: variable count " + std::to_string(m) +
                                    " outside [1, " + std::to_string(max_vars) + "]");
    return m;
}

} // namespace

TruthTable TruthTable::constant(int m, bool value, int max_vars) {
    check_vars(m, max_vars);
    std::vector<uint64_t> bits(word_count(m), value ? ~uint64_t{0} : 0);
    bits.back() &= pad_mask(m);
    return TruthTable(m, std::move(bits));
}

TruthTable TruthTable::from_predicate(int m, const std::function<bool(uint32_t)>& pred,
                                      int max_vars) {
    check_vars(m, max_vars);
    std::vector<uint64_t> bits(word_count(m), 0);
    const uint64_t n = uint64_t{1} << m;
    for (uint64_t i = 0; i < n; ++i)
        if (pred(static_cast<uint32_t>(i)))
            bits[i >> 6] |= uint64_t{1} << (i & 63);
    return TruthTable(m, std::move(bits));
}

TruthTable TruthTable::from_words(int m, std::vector<uint64_t> words, int max_vars) {
    check_vars(m, max_vars);
    if (words.size() != word_count(m))
        throw std::invalid_argument("TruthTable::from_words: wrong word count");
    words.back() &= pad_mask(m);
    return TruthTable(m, std::move(words));
}

uint64_t TruthTable::weight() const {
    uint64_t w = 0;
    for (uint64_t word : bits_)
        w += static_cast<uint64_t>(std::popcount(word));
    return w;
}

TruthTable TruthTable::complemented() const {
    std::vector<uint64_t> out(bits_.size());
    for (size_t i = 0; i < bits_.size(); ++i)
        out[i] = ~bits_[i];
    out.back() &= pad_mask(m_);
    return TruthTable(m_, std::move(out));
}

void TruthTable::write(std::ostream& os) const {
    static const char* hex = "0123456789abcdef";
    os << "m=" << m_ << '\n';
    const uint64_t nbytes = (size() + 7) / 8;
    for (uint64_t j = 0; j < nbytes; ++j) {
        unsigned byte = static_cast<unsigned>((bits_[j >> 3] >> ((j & 7) * 8)) & 0xff);
        os << hex[byte >> 4] << hex[byte & 0xf];
        if ((j + 1) % 32 == 0 && j + 1 < nbytes)
            os << '\n';
    }
    os << '\n';
}

TruthTable TruthTable::read(std::istream& is, int max_vars) {
    std::string header;
    if (!std::getline(is, header))
        throw std::invalid_argument("TruthTable::read: missing header");
    while (!header.empty() && (header.back() == '\r' || header.back() == ' '))
        header.pop_back();
    if (header.rfind("m=", 0) != 0)
        throw std::invalid_argument("TruthTable::read: header must be m=<int>");
    int m = 0;
    try {
        size_t pos = 0;
        m = std::stoi(header.substr(2), &pos);
        if (pos != header.size() - 2)
            throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
        throw std::invalid_argument("TruthTable::read: bad header '" + header + "'");
    }
    check_vars(m, max_vars);

    const uint64_t nbytes = ((uint64_t{1} << m) + 7) / 8;
    std::vector<uint64_t> bits(word_count(m), 0);
    uint64_t byte_index = 0;
    int hi = -1;
    char ch = 0;
    while (byte_index < nbytes && is.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = ch - 'A' + 10;
        else
            throw std::invalid_argument("TruthTable::read: non-hex character");
        if (hi < 0) {
            hi = v;
        } else {
            uint64_t byte = static_cast<uint64_t>((hi << 4) | v);
            bits[byte_index >> 3] |= byte << ((byte_index & 7) * 8);
            ++byte_index;
            hi = -1;
        }
    }
    if (byte_index != nbytes || hi >= 0)
        throw std::invalid_argument("TruthTable::read: expected " + std::to_string(2 * nbytes) +
                                    " hex digits");
    if ((bits.back() & ~pad_mask(m)) != 0)
        throw std::invalid_argument("TruthTable::read: nonzero padding bits");
    return TruthTable(m, std::move(bits));
}

TruthTable apply_affine(const TruthTable& t, const BitMatrix& a, uint64_t b, uint64_t c,
                        bool eps) {
    const int m = t.vars();
    if (a.rows() != m || a.cols() != m)
        throw std::invalid_argument("apply_affine: matrix must be m x m");
    if (!a.is_invertible())
        throw SingularMatrix("apply_affine: substitution matrix is singular");
    const uint64_t mask = (m == 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    b &= mask;
    c &= mask;
    return TruthTable::from_predicate(
        m,
        [&](uint32_t x) {
            uint32_t y = static_cast<uint32_t>(a.apply(x) ^ b);
            bool v = t.get(y);
            v ^= (std::popcount(c & x) & 1) != 0;
            return v ^ eps;
        },
        kHardMaxVars);
}

} // namespace qbent
