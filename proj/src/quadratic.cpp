#include "qbent/quadratic.hpp"

#include <bit>
#include <stdexcept>

namespace qbent {

QuadraticForm::QuadraticForm(int m, const BitMatrix& quad, uint64_t linear, bool constant_term)
    : m_(m), quad_(m, m), linear_(0), constant_(constant_term) {
    if (m < 1 || m > 64)
        throw std::invalid_argument("QuadraticForm: variable count out of range");
    if (quad.rows() != m || quad.cols() != m)
        throw std::invalid_argument("QuadraticForm: coefficient matrix must be m x m");
    const uint64_t mask = (m == 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    linear_ = linear & mask;
    for (int i = 0; i < m; ++i) {
        if (quad.get(i, i))
            linear_ ^= uint64_t{1} << i;
        for (int j = i + 1; j < m; ++j)
            quad_.set(i, j, quad.get(i, j) ^ quad.get(j, i));
    }
}

QuadraticForm QuadraticForm::from_anf(const Anf& a) {
    if (a.degree().value_or(0) > 2)
        throw NotQuadratic("from_anf: ANF degree exceeds 2");
    const int m = a.vars();
    BitMatrix quad(m, m);
    uint64_t linear = 0;
    bool constant = false;
    for (uint32_t mono : a.monomials()) {
        switch (std::popcount(mono)) {
        case 0:
            constant = true;
            break;
        case 1:
            linear |= mono;
            break;
        default: {
            int i = std::countr_zero(mono);
            int j = 31 - std::countl_zero(mono);
            quad.set(i, j, true);
            break;
        }
        }
    }
    return QuadraticForm(m, quad, linear, constant);
}

BitMatrix QuadraticForm::symplectic_matrix() const {
    return quad_ + quad_.transposed();
}

TruthTable QuadraticForm::to_truth_table(int max_vars) const {
    return TruthTable::from_predicate(
        m_,
        [this](uint32_t x) {
            int acc = constant_ ? 1 : 0;
            acc ^= std::popcount(linear_ & x) & 1;
            uint64_t bits = x;
            while (bits) {
                int i = std::countr_zero(bits);
                bits &= bits - 1;
                acc ^= std::popcount(quad_.row(i) & x) & 1;
            }
            return acc != 0;
        },
        max_vars);
}

QuadraticForm family_form(ResiduePair p, int m) {
    if (!p.odd_difference())
        throw NotQuadraticFamily("family_form: pair " + p.to_string() +
                                 " has even difference");
    if (m < 4 || m % 2 != 0)
        throw std::invalid_argument("family_form: m must be even and at least 4");
    BitMatrix quad(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            quad.set(i, j, true);
    const uint64_t all = (uint64_t{1} << m) - 1;
    const uint64_t linear = (p == ResiduePair{1, 2} || p == ResiduePair{0, 3}) ? all : 0;
    const bool constant = p.contains(0);
    return QuadraticForm(m, quad, linear, constant);
}

bool matrix_duality_criterion(const QuadraticForm& q) {
    BitMatrix s = q.symplectic_matrix();
    if (!s.is_involution())
        return false;
    BitMatrix probe = s * q.quad() * s + q.quad().transposed();
    return probe.is_alternating();
}

} // namespace qbent
