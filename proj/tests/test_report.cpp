#include <doctest.h>

#include <sstream>

#include "qbent/report.hpp"

#include "oracles.hpp"

using namespace qbent;

TEST_CASE("analyze a self-dual family member") {
    Report r = analyze(weight_residue_function({1, 2}, 6));
    CHECK(r.m == 6);
    CHECK(r.weight == 28);
    CHECK(r.degree == 2);
    CHECK(r.bent);
    CHECK(r.duality == DualityClass::SelfDual);
    REQUIRE(r.family_pair.has_value());
    CHECK(*r.family_pair == ResiduePair(1, 2));
    REQUIRE(r.predicted.has_value());
    CHECK(*r.predicted == DualityClass::SelfDual);
    REQUIRE(r.quadratic.has_value());
    CHECK(r.quadratic->quad_terms == 15);
    CHECK(r.quadratic->linear == "111111");
    CHECK(r.quadratic->criterion);
    REQUIRE(r.mm.has_value());
    CHECK(r.mm->splits_checked == 20);
    CHECK_FALSE(r.mm->decomposable);
    CHECK(r.contract_ok);
}

TEST_CASE("analyze at m = 8 reports Neither") {
    Report r = analyze(weight_residue_function({2, 3}, 8));
    CHECK(r.duality == DualityClass::Neither);
    CHECK(r.predicted == DualityClass::Neither);
    REQUIRE(r.quadratic.has_value());
    CHECK_FALSE(r.quadratic->criterion);
    CHECK(r.contract_ok);
}

TEST_CASE("analyze a non-family table") {
    Report r = analyze(TruthTable::constant(4, true));
    CHECK_FALSE(r.family_pair.has_value());
    CHECK_FALSE(r.predicted.has_value());
    CHECK(r.duality == DualityClass::NotBent);
    CHECK(r.degree == 0);
    CHECK(r.contract_ok);
}

TEST_CASE("json is deterministic and source-independent") {
    TruthTable built = weight_residue_function({0, 3}, 6);
    std::stringstream ss;
    built.write(ss);
    TruthTable imported = TruthTable::read(ss);

    nlohmann::json a = to_json(analyze(built));
    nlohmann::json b = to_json(analyze(imported));
    CHECK(a == b);
    CHECK(a.dump() == b.dump());
    CHECK(a["schema_version"] == kReportSchemaVersion);
    CHECK(a["duality"] == "self-dual"); // {0,3} is self-dual at m = 6 mod 8
    CHECK(a["family_pair"] == nlohmann::json({0, 3}));
}

TEST_CASE("text report mentions the essentials") {
    std::string text = to_text(analyze(weight_residue_function({2, 3}, 4)));
    CHECK(text.find("weight: 10") != std::string::npos);
    CHECK(text.find("duality: neither") != std::string::npos);
    CHECK(text.find("contract: ok") != std::string::npos);
}

TEST_CASE("spectrum json") {
    nlohmann::json j = spectrum_json(wht(TruthTable::constant(2, false)));
    CHECK(j["m"] == 2);
    CHECK(j["values"] == nlohmann::json({4, 0, 0, 0}));
}
