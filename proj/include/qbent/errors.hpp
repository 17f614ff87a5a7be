#pragma once

#include <stdexcept>

namespace qbent {

// Operation requires a bent input but the spectrum is not two-valued.
struct NotBentInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ANF has a monomial of degree > 2, so no quadratic form exists.
struct NotQuadratic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Residue pair with even difference has no closed quadratic form.
struct NotQuadraticFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix is singular where an invertible one is required.
struct SingularMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a built-in size guard.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qbent
