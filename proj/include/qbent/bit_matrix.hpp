#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbent {

// Dense matrix over GF(2). Rows are packed one per 64-bit word, so at most
// 64 columns are supported; that covers every matrix this library builds
// (quadratic-form and substitution matrices of order m <= 64).
//
// Addition is XOR; multiplication XORs together the rows of the right factor
// selected by the set bits of each left-factor row.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    static BitMatrix ones(int rows, int cols); // every entry 1

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    uint64_t row(int r) const { return row_[static_cast<size_t>(r)]; }
    void set_row(int r, uint64_t bits);

    BitMatrix operator+(const BitMatrix& other) const;
    BitMatrix operator*(const BitMatrix& other) const;
    BitMatrix transposed() const;

    // y = M x, both vectors packed with coordinate i in bit i.
    uint64_t apply(uint64_t x) const;

    bool is_zero() const;
    bool is_involution() const;  // square and M^2 = I
    bool is_alternating() const; // symmetric with zero diagonal, i.e. A + A^T for some A
    bool is_invertible() const;  // full rank under Gaussian elimination

    bool operator==(const BitMatrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<uint64_t> row_;

    uint64_t col_mask() const;
    void require_square(const char* op) const;
};

// One row per line of '0'/'1' characters.
std::string to_text(const BitMatrix& m);

} // namespace qbent
