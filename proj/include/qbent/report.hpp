#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qbent/family.hpp"
#include "qbent/maiorana.hpp"
#include "qbent/quadratic.hpp"
#include "qbent/truth_table.hpp"
#include "qbent/walsh.hpp"

namespace qbent {

inline constexpr int kReportSchemaVersion = 1;

// Structured result of one full analysis run. Serializes to JSON with
// sorted keys, so reports are directly diffable; the content depends only
// on the truth table, never on how it was obtained.
struct Report {
    int m = 0;
    std::optional<ResiduePair> family_pair; // detected by table comparison
    uint64_t weight = 0;
    std::optional<int> degree; // nullopt for the zero function
    bool bent = false;
    DualityClass duality = DualityClass::NotBent;
    std::optional<DualityClass> predicted; // family pairs with m >= 4 only

    struct QuadraticSummary {
        int quad_terms = 0;
        std::string linear;     // m chars, x_1 first
        bool constant_term = false;
        bool involution = false;  // (Q+Q^T)^2 = I
        bool alternating = false; // S Q S + Q^T alternating
        bool criterion = false;
    };
    std::optional<QuadraticSummary> quadratic; // degree <= 2 only

    struct MmSummary {
        int splits_checked = 0;
        bool decomposable = false;
        std::optional<CoordinateSplit> split;
    };
    std::optional<MmSummary> mm; // skipped for odd m or m > 12

    // False when a family function disagrees with its predicted
    // classification; the CLI turns that into a nonzero exit.
    bool contract_ok = true;
};

Report analyze(const TruthTable& t);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

nlohmann::json spectrum_json(const WalshSpectrum& s);

} // namespace qbent
