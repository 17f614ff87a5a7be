#include "qbent/walsh.hpp"

#include <stdexcept>

#include "qbent/anf.hpp"
#include "qbent/quadratic.hpp"

namespace qbent {

WalshSpectrum::WalshSpectrum(int m, std::vector<int32_t> values)
    : m_(m), values_(std::move(values)) {
    if (m < 1 || m > kHardMaxVars)
        throw std::invalid_argument("WalshSpectrum: variable count out of range");
    if (values_.size() != (size_t{1} << m))
        throw std::invalid_argument("WalshSpectrum: value count must be 2^m");
}

const char* to_string(DualityClass c) {
    switch (c) {
    case DualityClass::SelfDual:
        return "self-dual";
    case DualityClass::AntiSelfDual:
        return "anti-self-dual";
    case DualityClass::Neither:
        return "neither";
    case DualityClass::NotBent:
        return "not-bent";
    }
    return "?";
}

WalshSpectrum wht(const TruthTable& t) {
    const int m = t.vars();
    const size_t n = size_t{1} << m;
    std::vector<int32_t> v(n);
    for (size_t i = 0; i < n; ++i)
        v[i] = t.get(static_cast<uint32_t>(i)) ? -1 : 1;

    // Classic butterfly: after the pass of stride `len`, v[a] holds the
    // transform restricted to the variables processed so far.
    for (size_t len = 1; len < n; len <<= 1) {
        for (size_t base = 0; base < n; base += len << 1) {
            for (size_t j = base; j < base + len; ++j) {
                int32_t a = v[j];
                int32_t b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
    return WalshSpectrum(m, std::move(v));
}

bool is_bent(const WalshSpectrum& s) {
    if (s.vars() % 2 != 0)
        return false;
    const int32_t target = int32_t{1} << (s.vars() / 2);
    for (int32_t v : s.values())
        if (v != target && v != -target)
            return false;
    return true;
}

TruthTable dual(const WalshSpectrum& s) {
    if (!is_bent(s))
        throw NotBentInput("dual: spectrum is not two-valued at +-2^{m/2}");
    return TruthTable::from_predicate(
        s.vars(), [&](uint32_t a) { return s[a] < 0; }, kHardMaxVars);
}

DualityClass duality_class(const TruthTable& t) {
    return duality_class(t, wht(t));
}

DualityClass duality_class(const TruthTable& t, const WalshSpectrum& s) {
    if (!is_bent(s))
        return DualityClass::NotBent;

    // Shortcut for quadratics: when the matrix criterion holds the function
    // is self-dual or anti-self-dual, so comparing the dual at 0 decides.
    // The shortcut is only valid under the criterion; everything else falls
    // through to the defining full-table comparison.
    Anf a = anf(t);
    if (a.degree().value_or(0) <= 2) {
        QuadraticForm q = QuadraticForm::from_anf(a);
        if (matrix_duality_criterion(q)) {
            bool dual_at_zero = s[0] < 0;
            return dual_at_zero == t.get(0) ? DualityClass::SelfDual
                                            : DualityClass::AntiSelfDual;
        }
    }

    TruthTable d = dual(s);
    if (d == t)
        return DualityClass::SelfDual;
    if (d == t.complemented())
        return DualityClass::AntiSelfDual;
    return DualityClass::Neither;
}

} // namespace qbent
