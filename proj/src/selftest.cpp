#include "qbent/selftest.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

#include "qbent/anf.hpp"
#include "qbent/family.hpp"
#include "qbent/maiorana.hpp"
#include "qbent/quadratic.hpp"
#include "qbent/truth_table.hpp"
#include "qbent/walsh.hpp"

namespace qbent {

namespace {

// Reference transform straight from the definition, O(4^m); the butterfly
// implementation is validated against it on small m.
std::vector<int64_t> wht_reference(const TruthTable& t) {
    const uint32_t n = uint32_t{1} << t.vars();
    std::vector<int64_t> out(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
        int64_t acc = 0;
        for (uint32_t x = 0; x < n; ++x) {
            int bit = (t.get(x) ? 1 : 0) ^ (std::popcount(a & x) & 1);
            acc += bit ? -1 : 1;
        }
        out[a] = acc;
    }
    return out;
}

std::map<uint64_t, uint64_t> coset_weights_direct(const TruthTable& t) {
    const uint32_t n = uint32_t{1} << t.vars();
    std::map<uint64_t, uint64_t> counts;
    for (uint32_t a = 0; a < n; ++a) {
        for (int eps = 0; eps <= 1; ++eps) {
            uint64_t w = 0;
            for (uint32_t x = 0; x < n; ++x) {
                bool code = ((std::popcount(a & x) & 1) != 0) ^ (eps != 0);
                w += (t.get(x) != code) ? 1 : 0;
            }
            counts[w] += 1;
        }
    }
    return counts;
}

TruthTable random_table(int m, std::mt19937_64& rng) {
    std::vector<uint64_t> words(m >= 6 ? (size_t{1} << (m - 6)) : 1);
    for (auto& w : words)
        w = rng();
    return TruthTable::from_words(m, std::move(words));
}

std::vector<int> even_ms(int lo, int hi, int cap) {
    std::vector<int> out;
    for (int m = lo; m <= std::min(hi, cap); m += 2)
        out.push_back(m);
    return out;
}

struct Check {
    CheckResult result;
    explicit Check(std::string name) { result.name = std::move(name); result.pass = true; }
    void expect(bool ok, const std::string& what) {
        if (!ok && result.pass) {
            result.pass = false;
            result.detail = what;
        }
    }
};

std::string at(ResiduePair p, int m) {
    std::ostringstream os;
    os << "pair " << p.to_string() << " m=" << m;
    return os.str();
}

} // namespace

std::vector<CheckResult> run_selftest(int max_m, uint64_t seed) {
    std::vector<CheckResult> results;

    {
        Check c("closed-form residue sums equal direct sums");
        for (int m = 2; m <= std::min(32, std::max(max_m, 8)); ++m)
            for (int j = 0; j < 4; ++j)
                c.expect(residue_binomial_closed(j, m) == residue_binomial_sum(j, m),
                         "j=" + std::to_string(j) + " m=" + std::to_string(m));
        results.push_back(c.result);
    }

    {
        Check c("bent exactly for odd-difference pairs");
        for (int m : even_ms(4, 12, max_m))
            for (ResiduePair p : all_residue_pairs())
                c.expect(is_bent(wht(weight_residue_function(p, m))) == p.odd_difference(),
                         at(p, m));
        results.push_back(c.result);
    }

    {
        Check c("quadratic ANF identities");
        for (int m : even_ms(4, 10, max_m)) {
            std::vector<uint32_t> pairs, linear_and_pairs;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    pairs.push_back((uint32_t{1} << i) | (uint32_t{1} << j));
            linear_and_pairs = pairs;
            for (int i = 0; i < m; ++i)
                linear_and_pairs.push_back(uint32_t{1} << i);
            TruthTable f23 = weight_residue_function({2, 3}, m);
            TruthTable f12 = weight_residue_function({1, 2}, m);
            c.expect(anf(f23) == Anf(m, pairs), "f{2,3} m=" + std::to_string(m));
            c.expect(anf(f12) == Anf(m, linear_and_pairs), "f{1,2} m=" + std::to_string(m));
            c.expect(weight_residue_function({0, 1}, m) == f23.complemented(),
                     "f{0,1} m=" + std::to_string(m));
            c.expect(weight_residue_function({0, 3}, m) == f12.complemented(),
                     "f{0,3} m=" + std::to_string(m));
        }
        results.push_back(c.result);
    }

    {
        Check c("weights match the closed-form table");
        for (int m : {6, 10, 14}) {
            if (m > max_m)
                continue;
            for (ResiduePair p : bent_residue_pairs()) {
                uint64_t expected =
                    residue_binomial_closed(p.lo, m) + residue_binomial_closed(p.hi, m);
                c.expect(weight_residue_function(p, m).weight() == expected, at(p, m));
            }
        }
        results.push_back(c.result);
    }

    {
        Check c("spectral classification matches prediction");
        for (int m : even_ms(4, 14, max_m))
            for (ResiduePair p : bent_residue_pairs())
                c.expect(duality_class(weight_residue_function(p, m)) ==
                             predicted_duality(p, m),
                         at(p, m));
        results.push_back(c.result);
    }

    {
        Check c("matrix criterion agrees with spectra and m mod 4");
        for (int m : even_ms(4, 14, max_m)) {
            for (ResiduePair p : bent_residue_pairs()) {
                bool criterion = matrix_duality_criterion(family_form(p, m));
                bool expected = (m % 4) != 0;
                DualityClass dc = duality_class(weight_residue_function(p, m));
                c.expect(criterion == expected, at(p, m));
                c.expect((dc != DualityClass::Neither && dc != DualityClass::NotBent) ==
                             criterion,
                         at(p, m));
            }
        }
        results.push_back(c.result);
    }

    {
        Check c("dual involution and complement pairing");
        for (int m : even_ms(4, 14, max_m)) {
            for (ResiduePair p : bent_residue_pairs()) {
                TruthTable f = weight_residue_function(p, m);
                TruthTable d = dual(wht(f));
                c.expect(dual(wht(d)) == f, at(p, m));
            }
            TruthTable f23 = weight_residue_function({2, 3}, m);
            TruthTable f03 = weight_residue_function({0, 3}, m);
            c.expect((dual(wht(f23)) == weight_residue_function({0, 1}, m)) ==
                         (m % 8 == 6),
                     "f{2,3} pairing m=" + std::to_string(m));
            c.expect((dual(wht(f03)) == weight_residue_function({1, 2}, m)) ==
                         (m % 8 == 2),
                     "f{0,3} pairing m=" + std::to_string(m));
        }
        results.push_back(c.result);
    }

    {
        Check c("coset weight distributions");
        for (int m : even_ms(4, 10, max_m)) {
            const uint64_t center = uint64_t{1} << (m - 1);
            const uint64_t spread = uint64_t{1} << (m / 2 - 1);
            for (ResiduePair p : all_residue_pairs()) {
                CosetWeightDistribution d = coset_weight_distribution(p, m);
                bool two_valued = d.support() ==
                                  std::vector<uint64_t>{center - spread, center + spread};
                c.expect(two_valued == p.odd_difference(), at(p, m));
                c.expect(d.total() == (uint64_t{1} << (m + 1)), at(p, m));
                if (m <= 8)
                    c.expect(d.counts ==
                                 coset_weights_direct(weight_residue_function(p, m)),
                             "direct enumeration " + at(p, m));
            }
        }
        results.push_back(c.result);
    }

    {
        Check c("no split admits an MM decomposition");
        for (int m : even_ms(4, 6, max_m))
            for (ResiduePair p : bent_residue_pairs()) {
                TruthTable f = weight_residue_function(p, m);
                for (const CoordinateSplit& split : all_splits(m))
                    c.expect(!detect_mm(f, split), at(p, m) + " " + split.to_string());
            }
        results.push_back(c.result);
    }

    {
        Check c("affine witness identity");
        for (int m : even_ms(4, 10, max_m)) {
            AffineMmWitness w = mm_affine_witness(m);
            c.expect(w.substitution.is_invertible(), "m=" + std::to_string(m));
            TruthTable lhs = apply_affine(paired_product_function(m), w.substitution, 0,
                                          w.correction, false);
            c.expect(lhs == weight_residue_function({2, 3}, m), "m=" + std::to_string(m));
        }
        results.push_back(c.result);
    }

    {
        Check c("butterfly transform equals the defining sum");
        std::mt19937_64 rng(seed);
        auto compare = [&](const TruthTable& t, const std::string& what) {
            WalshSpectrum fast = wht(t);
            std::vector<int64_t> slow = wht_reference(t);
            bool same = true;
            for (uint32_t a = 0; a < t.size() && same; ++a)
                same = (fast[a] == slow[a]);
            c.expect(same, what);
            unsigned long long energy = 0;
            for (int32_t v : fast.values())
                energy += static_cast<unsigned long long>(int64_t{v} * v);
            c.expect(energy == (1ull << (2 * t.vars())), "Parseval " + what);
        };
        for (int m : even_ms(4, 6, max_m))
            for (ResiduePair p : all_residue_pairs())
                compare(weight_residue_function(p, m), at(p, m));
        for (int m : even_ms(4, 8, max_m))
            for (int i = 0; i < 100; ++i)
                compare(random_table(m, rng),
                        "random m=" + std::to_string(m) + " #" + std::to_string(i));
        results.push_back(c.result);
    }

    return results;
}

} // namespace qbent
