#pragma once

#include <cstdint>

#include "qbent/anf.hpp"
#include "qbent/bit_matrix.hpp"
#include "qbent/family.hpp"
#include "qbent/truth_table.hpp"

namespace qbent {

// f(x) = x Q x^T + L.x + eps over GF(2), with Q kept strictly upper
// triangular so the representation of a quadratic function is unique.
// Below-diagonal coefficients are folded into the upper triangle at
// construction and diagonal ones into L (x_i^2 = x_i).
class QuadraticForm {
public:
    QuadraticForm(int m, const BitMatrix& quad, uint64_t linear, bool constant_term);

    // Throws NotQuadratic when the ANF has degree > 2.
    static QuadraticForm from_anf(const Anf& a);

    int vars() const { return m_; }
    const BitMatrix& quad() const { return quad_; }
    uint64_t linear() const { return linear_; }
    bool constant_term() const { return constant_; }

    // Q + Q^T: the symmetric zero-diagonal matrix of the bilinear part.
    BitMatrix symplectic_matrix() const;

    TruthTable to_truth_table(int max_vars = kDefaultMaxVars) const;

    bool operator==(const QuadraticForm& other) const = default;

private:
    int m_;
    BitMatrix quad_;
    uint64_t linear_;
    bool constant_;
};

// Closed quadratic form of a weight-residue function: Q is the all-ones
// strictly upper triangular matrix for every odd-difference pair, L is
// all-ones exactly when 1 and 2 split between the residues, and the
// constant is set exactly when 0 is one of them. Even-difference pairs are
// not quadratic as a family and raise NotQuadraticFamily.
QuadraticForm family_form(ResiduePair p, int m);

// Matrix-algebra test for self- or anti-self-duality of a quadratic bent
// function: with S = Q + Q^T, requires S^2 = I and S Q S + Q^T alternating.
// Decided purely by GF(2) matrix products, independent of any spectrum.
bool matrix_duality_criterion(const QuadraticForm& q);

} // namespace qbent
