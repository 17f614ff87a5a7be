#include "qbent/report.hpp"

#include <bit>
#include <sstream>

namespace qbent {

namespace {

std::string linear_bits(uint64_t linear, int m) {
    std::string s(static_cast<size_t>(m), '0');
    for (int j = 0; j < m; ++j)
        if ((linear >> j) & 1)
            s[static_cast<size_t>(j)] = '1';
    return s;
}

} // namespace

Report analyze(const TruthTable& t) {
    Report r;
    r.m = t.vars();
    r.weight = t.weight();

    WalshSpectrum s = wht(t);
    r.bent = is_bent(s);
    r.duality = duality_class(t, s);

    Anf a = anf(t);
    r.degree = a.degree();
    if (r.degree.value_or(0) <= 2) {
        QuadraticForm q = QuadraticForm::from_anf(a);
        BitMatrix sym = q.symplectic_matrix();
        Report::QuadraticSummary qs;
        for (int i = 0; i < r.m; ++i)
            qs.quad_terms += std::popcount(q.quad().row(i));
        qs.linear = linear_bits(q.linear(), r.m);
        qs.constant_term = q.constant_term();
        qs.involution = sym.is_involution();
        qs.alternating = (sym * q.quad() * sym + q.quad().transposed()).is_alternating();
        qs.criterion = qs.involution && qs.alternating;
        r.quadratic = qs;
    }

    if (r.m % 2 == 0) {
        for (ResiduePair p : all_residue_pairs()) {
            if (weight_residue_function(p, r.m, kHardMaxVars) == t) {
                r.family_pair = p;
                break;
            }
        }
        if (r.family_pair && r.m >= 4)
            r.predicted = predicted_duality(*r.family_pair, r.m);

        if (r.m <= 12) {
            Report::MmSummary mm;
            mm.splits_checked = static_cast<int>(all_splits(r.m).size());
            if (auto hit = detect_mm_any_split(t)) {
                mm.decomposable = true;
                mm.split = hit->first;
            }
            r.mm = mm;
        }
    }

    if (r.predicted)
        r.contract_ok = (r.duality == *r.predicted) &&
                        (r.bent == r.family_pair->odd_difference());
    return r;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["m"] = r.m;
    j["weight"] = r.weight;
    j["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
    j["bent"] = r.bent;
    j["duality"] = to_string(r.duality);
    j["family_pair"] =
        r.family_pair ? nlohmann::json({r.family_pair->lo, r.family_pair->hi})
                      : nlohmann::json(nullptr);
    j["predicted_duality"] =
        r.predicted ? nlohmann::json(to_string(*r.predicted)) : nlohmann::json(nullptr);
    if (r.quadratic) {
        j["quadratic"] = {
            {"quad_terms", r.quadratic->quad_terms},
            {"linear", r.quadratic->linear},
            {"constant", r.quadratic->constant_term},
            {"involution", r.quadratic->involution},
            {"alternating", r.quadratic->alternating},
            {"criterion", r.quadratic->criterion},
        };
    } else {
        j["quadratic"] = nullptr;
    }
    if (r.mm) {
        nlohmann::json mm;
        mm["splits_checked"] = r.mm->splits_checked;
        mm["decomposable"] = r.mm->decomposable;
        mm["split"] = r.mm->split ? nlohmann::json(r.mm->split->x_vars())
                                  : nlohmann::json(nullptr);
        j["mm"] = mm;
    } else {
        j["mm"] = nullptr;
    }
    j["contract_ok"] = r.contract_ok;
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "m: " << r.m << '\n';
    os << "family pair: " << (r.family_pair ? r.family_pair->to_string() : "none") << '\n';
    os << "weight: " << r.weight << '\n';
    if (r.degree)
        os << "degree: " << *r.degree << '\n';
    else
        os << "degree: none (zero function)\n";
    os << "bent: " << (r.bent ? "yes" : "no") << '\n';
    os << "duality: " << to_string(r.duality);
    if (r.predicted)
        os << " (predicted: " << to_string(*r.predicted) << ")";
    os << '\n';
    if (r.quadratic) {
        os << "quadratic form: " << r.quadratic->quad_terms << " quadratic terms, linear="
           << r.quadratic->linear << ", constant=" << (r.quadratic->constant_term ? 1 : 0)
           << '\n';
        os << "matrix criterion: involution=" << (r.quadratic->involution ? "yes" : "no")
           << " alternating=" << (r.quadratic->alternating ? "yes" : "no") << " -> "
           << (r.quadratic->criterion ? "self- or anti-self-dual" : "neither") << '\n';
    } else {
        os << "quadratic form: none (degree > 2)\n";
    }
    if (r.mm) {
        if (r.mm->decomposable)
            os << "mm: decomposable at split " << r.mm->split->to_string() << " of "
               << r.mm->splits_checked << " splits\n";
        else
            os << "mm: no split of " << r.mm->splits_checked
               << " admits a decomposition\n";
    } else {
        os << "mm: not checked\n";
    }
    os << "contract: " << (r.contract_ok ? "ok" : "VIOLATED") << '\n';
    return os.str();
}

nlohmann::json spectrum_json(const WalshSpectrum& s) {
    nlohmann::json j;
    j["m"] = s.vars();
    j["values"] = s.values();
    return j;
}

} // namespace qbent
