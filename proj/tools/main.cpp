#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbent/anf.hpp"
#include "qbent/family.hpp"
#include "qbent/maiorana.hpp"
#include "qbent/quadratic.hpp"
#include "qbent/report.hpp"
#include "qbent/selftest.hpp"
#include "qbent/truth_table.hpp"
#include "qbent/walsh.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContract = 1; // a computed result contradicts the predicted one
constexpr int kExitUsage = 2;

using nlohmann::json;

qbent::ResiduePair parse_pair(const std::string& text) {
    int i1, i2;
    char comma;
    std::istringstream is(text);
    if (!(is >> i1 >> comma >> i2) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--pair", "expected i1,i2 with residues in {0,1,2,3}");
    try {
        return qbent::ResiduePair(i1, i2);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--pair", e.what());
    }
}

struct FunctionInput {
    int m = 0;
    std::string pair_text;
    std::string in_path;
    int max_vars = qbent::kDefaultMaxVars;

    void attach(CLI::App* cmd, bool file_allowed) {
        cmd->add_option("--m", m, "number of variables");
        cmd->add_option("--pair", pair_text, "residue pair i1,i2 (e.g. 2,3)");
        if (file_allowed)
            cmd->add_option("--in", in_path, "read the function from a truth-table file");
        cmd->add_option("--max-m", max_vars, "raise the variable-count guard")
            ->capture_default_str();
    }

    qbent::TruthTable load(std::optional<qbent::ResiduePair>* pair_out = nullptr) const {
        if (!in_path.empty()) {
            if (m != 0 || !pair_text.empty())
                throw CLI::ValidationError("--in", "give either --in or --m/--pair");
            std::ifstream is(in_path);
            if (!is)
                throw CLI::ValidationError("--in", "cannot open " + in_path);
            return qbent::TruthTable::read(is, max_vars);
        }
        if (m == 0 || pair_text.empty())
            throw CLI::ValidationError("need --m and --pair (or --in)");
        qbent::ResiduePair p = parse_pair(pair_text);
        if (pair_out)
            *pair_out = p;
        return qbent::weight_residue_function(p, m, max_vars);
    }
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

// --- table subcommand -------------------------------------------------

struct TableRange {
    int lo = 4;
    int hi = 14;
};

void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
               << (i ? std::right : std::left) << row[i];
        os << '\n';
    }
}

int run_table(const TableRange& range, const std::string& format, std::ostream& os) {
    using namespace qbent;
    if (range.lo < 2 || range.hi > 64 || range.lo > range.hi)
        throw CLI::ValidationError("--m-min/--m-max", "need 2 <= min <= max <= 64");

    std::vector<int> ms, bent_ms;
    for (int m = range.lo; m <= range.hi; ++m) {
        ms.push_back(m);
        if (m % 2 == 0 && (m % 8 == 2 || m % 8 == 6))
            bent_ms.push_back(m);
    }

    // Cross-check every printed value before emitting anything.
    for (int m : ms)
        for (int j = 0; j < 4; ++j)
            if (residue_binomial_closed(j, m) != residue_binomial_sum(j, m)) {
                std::cerr << "contract violation: closed form != direct sum at j=" << j
                          << " m=" << m << '\n';
                return kExitContract;
            }
    for (int m : bent_ms) {
        if (m > 16)
            continue; // closed forms only; direct tables get large
        for (ResiduePair p : bent_residue_pairs()) {
            uint64_t closed =
                residue_binomial_closed(p.lo, m) + residue_binomial_closed(p.hi, m);
            if (weight_residue_function(p, m).weight() != closed) {
                std::cerr << "contract violation: weight table mismatch at pair "
                          << p.to_string() << " m=" << m << '\n';
                return kExitContract;
            }
        }
    }

    auto weight_of = [](ResiduePair p, int m) {
        return residue_binomial_closed(p.lo, m) + residue_binomial_closed(p.hi, m);
    };
    auto dual_at_zero = [&](ResiduePair p, int m) {
        // F(0) = 2^m - 2 wt(f); negative sign means the dual is 1 at zero.
        return weight_of(p, m) > (uint64_t{1} << (m - 1));
    };

    if (format == "json") {
        json j;
        for (int m : ms) {
            json col;
            for (int jr = 0; jr < 4; ++jr)
                col[std::to_string(jr)] = residue_binomial_sum(jr, m);
            j["residue_sums"][std::to_string(m)] = col;
        }
        for (int m : bent_ms) {
            json wcol, dcol;
            for (ResiduePair p : bent_residue_pairs()) {
                std::string key = p.to_string();
                wcol[key] = weight_of(p, m);
                bool d0 = dual_at_zero(p, m);
                bool f0 = p.contains(0);
                dcol[key] = {{"dual_at_zero", d0 ? 1 : 0},
                             {"value_at_zero", f0 ? 1 : 0},
                             {"class", d0 == f0 ? "self-dual" : "anti-self-dual"}};
            }
            j["weights"][std::to_string(m)] = wcol;
            j["dual_at_zero"][std::to_string(m)] = dcol;
        }
        os << j.dump(2) << '\n';
        return kExitOk;
    }

    os << "sums of C(m,k) over k in a residue class mod 4\n";
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"residue \\ m"};
        std::vector<std::string> mod{"(m mod 8)"};
        for (int m : ms) {
            head.push_back(std::to_string(m));
            mod.push_back(std::to_string(m % 8));
        }
        rows.push_back(head);
        rows.push_back(mod);
        for (int jr = 0; jr < 4; ++jr) {
            std::vector<std::string> row{"k=" + std::to_string(jr)};
            for (int m : ms)
                row.push_back(std::to_string(residue_binomial_sum(jr, m)));
            rows.push_back(row);
        }
        print_aligned(os, rows);
    }

    if (bent_ms.empty()) {
        os << "\n(no m with m mod 8 in {2,6} in range; weight and dual tables skipped)\n";
        return kExitOk;
    }

    os << "\nweights of the weight-residue functions (m mod 8 in {2,6})\n";
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"pair \\ m"};
        for (int m : bent_ms)
            head.push_back(std::to_string(m));
        rows.push_back(head);
        for (ResiduePair p : bent_residue_pairs()) {
            std::vector<std::string> row{p.to_string()};
            for (int m : bent_ms)
                row.push_back(std::to_string(weight_of(p, m)));
            rows.push_back(row);
        }
        print_aligned(os, rows);
    }

    os << "\ndual value at zero / function value at zero -> class\n";
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"pair \\ m"};
        for (int m : bent_ms)
            head.push_back(std::to_string(m));
        rows.push_back(head);
        for (ResiduePair p : bent_residue_pairs()) {
            std::vector<std::string> row{p.to_string()};
            for (int m : bent_ms) {
                bool d0 = dual_at_zero(p, m);
                bool f0 = p.contains(0);
                row.push_back(std::to_string(d0) + "/" + std::to_string(f0) +
                              (d0 == f0 ? " self" : " anti"));
            }
            rows.push_back(row);
        }
        print_aligned(os, rows);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for quadratic bent functions defined by Hamming-weight residues"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    // construct
    auto* construct = app.add_subcommand(
        "construct", "write the truth table of a weight-residue function");
    FunctionInput construct_in;
    construct_in.attach(construct, false);
    construct->add_option("--out", out_path, "output file (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "full analysis: weight, spectrum class, quadratic form, MM check");
    FunctionInput analyze_in;
    analyze_in.attach(analyze, true);
    analyze->add_option("--format", format, "text or json")->capture_default_str();
    analyze->add_option("--out", out_path, "output file (default stdout)");

    // spectrum
    auto* spectrum =
        app.add_subcommand("spectrum", "Walsh-Hadamard spectrum as JSON");
    FunctionInput spectrum_in;
    spectrum_in.attach(spectrum, true);
    spectrum->add_option("--out", out_path, "output file (default stdout)");

    // classify
    auto* classify = app.add_subcommand(
        "classify", "matrix duality criterion next to the spectral class");
    FunctionInput classify_in;
    classify_in.attach(classify, true);
    classify->add_option("--format", format, "text or json")->capture_default_str();
    bool classify_dump = false;
    classify->add_flag("--dump", classify_dump, "also print Q and Q+Q^T as 0/1 rows");

    // mm-check
    auto* mm_check = app.add_subcommand(
        "mm-check", "per-split Maiorana-McFarland decomposition verdicts");
    FunctionInput mm_in;
    mm_in.attach(mm_check, true);
    std::string split_text;
    mm_check->add_option("--split", split_text,
                         "check one split given as comma-separated x variables");
    mm_check->add_option("--format", format, "text or json")->capture_default_str();

    // coset-weights
    auto* coset = app.add_subcommand(
        "coset-weights", "weight distribution of the Hadamard-code coset");
    FunctionInput coset_in;
    coset_in.attach(coset, false);
    coset->add_option("--format", format, "text or json")->capture_default_str();

    // table
    auto* table = app.add_subcommand(
        "table", "closed-form sum, weight and dual-at-zero tables over an m range");
    TableRange range;
    table->add_option("--m-min", range.lo, "first m")->capture_default_str();
    table->add_option("--m-max", range.hi, "last m")->capture_default_str();
    table->add_option("--format", format, "text or json")->capture_default_str();

    // selftest
    auto* selftest =
        app.add_subcommand("selftest", "run the built-in consistency checks (m <= 8)");
    int selftest_max_m = 8;
    uint64_t selftest_seed = 0x51e7e57;
    selftest->add_option("--max-m", selftest_max_m, "clamp for the sweeps")
        ->capture_default_str();
    selftest->add_option("--seed", selftest_seed, "seed for the randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::ofstream out_file;

        if (construct->parsed()) {
            qbent::TruthTable t = construct_in.load();
            t.write(open_out(out_file, out_path));
            return kExitOk;
        }

        if (analyze->parsed()) {
            qbent::TruthTable t = analyze_in.load();
            qbent::Report r = qbent::analyze(t);
            std::ostream& os = open_out(out_file, out_path);
            if (format == "json")
                os << qbent::to_json(r).dump(2) << '\n';
            else
                os << qbent::to_text(r);
            return r.contract_ok ? kExitOk : kExitContract;
        }

        if (spectrum->parsed()) {
            qbent::TruthTable t = spectrum_in.load();
            open_out(out_file, out_path)
                << qbent::spectrum_json(qbent::wht(t)).dump(2) << '\n';
            return kExitOk;
        }

        if (classify->parsed()) {
            qbent::TruthTable t = classify_in.load();
            qbent::Report r = qbent::analyze(t);
            if (format == "json") {
                json j;
                j["m"] = r.m;
                j["duality"] = qbent::to_string(r.duality);
                if (r.quadratic) {
                    j["involution"] = r.quadratic->involution;
                    j["alternating"] = r.quadratic->alternating;
                    j["criterion"] = r.quadratic->criterion;
                } else {
                    j["involution"] = nullptr;
                    j["alternating"] = nullptr;
                    j["criterion"] = nullptr;
                }
                j["contract_ok"] = r.contract_ok;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "spectral class: " << qbent::to_string(r.duality) << '\n';
                if (r.quadratic) {
                    std::cout << "symplectic involution: "
                              << (r.quadratic->involution ? "yes" : "no") << '\n'
                              << "alternating check: "
                              << (r.quadratic->alternating ? "yes" : "no") << '\n'
                              << "matrix criterion: "
                              << (r.quadratic->criterion ? "self- or anti-self-dual"
                                                         : "neither")
                              << '\n';
                } else {
                    std::cout << "matrix criterion: not quadratic (degree > 2)\n";
                }
                if (classify_dump && r.quadratic) {
                    qbent::QuadraticForm q =
                        qbent::QuadraticForm::from_anf(qbent::anf(t));
                    std::cout << "Q:\n"
                              << qbent::to_text(q.quad()) << "Q+Q^T:\n"
                              << qbent::to_text(q.symplectic_matrix());
                }
            }
            // The criterion must match the spectral verdict for bent quadratics.
            if (r.quadratic && r.bent) {
                bool spectral_dual = r.duality == qbent::DualityClass::SelfDual ||
                                     r.duality == qbent::DualityClass::AntiSelfDual;
                if (spectral_dual != r.quadratic->criterion) {
                    std::cerr << "contract violation: criterion disagrees with spectrum\n";
                    return kExitContract;
                }
            }
            return kExitOk;
        }

        if (mm_check->parsed()) {
            qbent::TruthTable t = mm_in.load();
            if (t.vars() % 2 != 0)
                throw CLI::ValidationError("--m", "MM checks need an even m");
            if (t.vars() > 12)
                throw CLI::ValidationError("--m", "MM split enumeration capped at m <= 12");
            std::vector<qbent::CoordinateSplit> splits;
            if (!split_text.empty()) {
                uint32_t mask = 0;
                std::istringstream is(split_text);
                std::string item;
                while (std::getline(is, item, ','))
                    mask |= uint32_t{1} << (std::stoi(item) - 1);
                splits.emplace_back(t.vars(), mask);
            } else {
                splits = qbent::all_splits(t.vars());
            }
            json verdicts = json::array();
            bool any = false;
            for (const auto& split : splits) {
                auto witness = qbent::detect_mm(t, split);
                if (format == "json") {
                    json v;
                    v["x"] = split.x_vars();
                    v["decomposable"] = witness.has_value();
                    if (witness) {
                        v["phi"] = witness->phi;
                        std::ostringstream gs;
                        witness->g.write(gs);
                        v["g"] = gs.str();
                    }
                    verdicts.push_back(v);
                } else {
                    std::cout << split.to_string() << ": "
                              << (witness ? "decomposable" : "no") << '\n';
                    if (witness) {
                        std::cout << "  phi:";
                        for (uint32_t v : witness->phi)
                            std::cout << ' ' << v;
                        std::cout << "\n  g: ";
                        witness->g.write(std::cout);
                    }
                }
                any = any || witness.has_value();
            }
            if (format == "json") {
                json j;
                j["m"] = t.vars();
                j["decomposable"] = any;
                j["splits"] = verdicts;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << (any ? "decomposable" : "no split admits a decomposition")
                          << '\n';
            }
            return kExitOk;
        }

        if (coset->parsed()) {
            if (coset_in.pair_text.empty() || coset_in.m == 0)
                throw CLI::ValidationError("coset-weights needs --m and --pair");
            qbent::ResiduePair p = parse_pair(coset_in.pair_text);
            qbent::CosetWeightDistribution d =
                qbent::coset_weight_distribution(p, coset_in.m);
            if (format == "json") {
                json j;
                j["m"] = d.m;
                j["pair"] = {p.lo, p.hi};
                json counts;
                for (const auto& [w, n] : d.counts)
                    counts[std::to_string(w)] = n;
                j["counts"] = counts;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "coset of pair " << p.to_string() << ", m=" << coset_in.m
                          << '\n';
                for (const auto& [w, n] : d.counts)
                    std::cout << "  weight " << w << ": " << n << " codewords\n";
            }
            return kExitOk;
        }

        if (table->parsed())
            return run_table(range, format, std::cout);

        if (selftest->parsed()) {
            auto results = qbent::run_selftest(selftest_max_m, selftest_seed);
            int failed = 0;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
                if (!r.pass) {
                    std::cout << " (" << r.detail << ")";
                    ++failed;
                }
                std::cout << '\n';
            }
            std::cout << "selftest: " << (results.size() - failed) << "/" << results.size()
                      << " checks passed\n";
            return failed == 0 ? kExitOk : kExitContract;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
