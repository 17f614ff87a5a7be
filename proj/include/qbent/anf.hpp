#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qbent/truth_table.hpp"

namespace qbent {

// Algebraic normal form: the XOR of a set of monomials. A monomial is a
// subset of the variables {1..m}, packed with x_j at bit j-1 of a mask; the
// empty mask is the constant-1 term. The monomial set of a function is
// unique, so two Anf values are equal iff the functions are.
class Anf {
public:
    Anf(int m, std::vector<uint32_t> monomials);

    int vars() const { return m_; }
    const std::vector<uint32_t>& monomials() const { return monomials_; }

    bool contains(uint32_t monomial) const;

    // Largest monomial size; nullopt for the identically-zero function.
    std::optional<int> degree() const;

    bool operator==(const Anf& other) const = default;

private:
    int m_;
    std::vector<uint32_t> monomials_; // sorted, unique
};

// Binary Moebius transform of the value vector; an involution, so the same
// transform maps coefficient vectors back to truth tables.
Anf anf(const TruthTable& t);
TruthTable from_anf(const Anf& a);

} // namespace qbent
