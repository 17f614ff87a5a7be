#include "qbent/bit_matrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qbent {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("BitMatrix: dimensions must be positive");
    if (cols > 64)
        throw std::invalid_argument("BitMatrix: at most 64 columns supported");
    row_.assign(static_cast<size_t>(rows), 0);
}

uint64_t BitMatrix::col_mask() const {
    return cols_ == 64 ? ~uint64_t{0} : (uint64_t{1} << cols_) - 1;
}

void BitMatrix::require_square(const char* op) const {
    if (rows_ != cols_)
        throw std::invalid_argument(std::string(op) + ": matrix must be square");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.row_[static_cast<size_t>(i)] = uint64_t{1} << i;
    return m;
}

BitMatrix BitMatrix::ones(int rows, int cols) {
    BitMatrix m(rows, cols);
    for (auto& r : m.row_)
        r = m.col_mask();
    return m;
}

bool BitMatrix::get(int r, int c) const {
    return (row_[static_cast<size_t>(r)] >> c) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t bit = uint64_t{1} << c;
    if (v)
        row_[static_cast<size_t>(r)] |= bit;
    else
        row_[static_cast<size_t>(r)] &= ~bit;
}

void BitMatrix::set_row(int r, uint64_t bits) {
    row_[static_cast<size_t>(r)] = bits & col_mask();
}

BitMatrix BitMatrix::operator+(const BitMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("BitMatrix::operator+: dimension mismatch");
    BitMatrix out(rows_, cols_);
    for (size_t i = 0; i < row_.size(); ++i)
        out.row_[i] = row_[i] ^ other.row_[i];
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("BitMatrix::operator*: inner dimensions disagree");
    BitMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        uint64_t bits = row_[static_cast<size_t>(r)];
        while (bits) {
            int k = std::countr_zero(bits);
            bits &= bits - 1;
            acc ^= other.row_[static_cast<size_t>(k)];
        }
        out.row_[static_cast<size_t>(r)] = acc;
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t bits = row_[static_cast<size_t>(r)];
        while (bits) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.row_[static_cast<size_t>(c)] |= uint64_t{1} << r;
        }
    }
    return out;
}

uint64_t BitMatrix::apply(uint64_t x) const {
    uint64_t y = 0;
    for (int r = 0; r < rows_; ++r)
        y |= static_cast<uint64_t>(std::popcount(row_[static_cast<size_t>(r)] & x) & 1) << r;
    return y;
}

bool BitMatrix::is_zero() const {
    for (uint64_t r : row_)
        if (r)
            return false;
    return true;
}

bool BitMatrix::is_involution() const {
    require_square("is_involution");
    return (*this) * (*this) == identity(rows_);
}

bool BitMatrix::is_alternating() const {
    require_square("is_alternating");
    for (int r = 0; r < rows_; ++r) {
        if (get(r, r))
            return false;
        for (int c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    }
    return true;
}

bool BitMatrix::is_invertible() const {
    require_square("is_invertible");
    std::vector<uint64_t> work = row_;
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if ((work[static_cast<size_t>(r)] >> c) & 1) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return false;
        std::swap(work[static_cast<size_t>(c)], work[static_cast<size_t>(pivot)]);
        for (int r = c + 1; r < n; ++r)
            if ((work[static_cast<size_t>(r)] >> c) & 1)
                work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(c)];
    }
    return true;
}

std::string to_text(const BitMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            os << (m.get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

} // namespace qbent
