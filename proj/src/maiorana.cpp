#include "qbent/maiorana.hpp"

#include <bit>
#include <stdexcept>

namespace qbent {

namespace {

void check_even(int m, int min_m) {
    if (m < min_m || m % 2 != 0)
        throw std::invalid_argument("m must be even and at least " + std::to_string(min_m));
}

// Gathers the bits of z at the set positions of mask into a dense
// sub-index, lowest mask position first.
uint32_t compress(uint32_t z, uint32_t mask) {
    uint32_t out = 0;
    int k = 0;
    while (mask) {
        int p = std::countr_zero(mask);
        mask &= mask - 1;
        out |= ((z >> p) & 1u) << k;
        ++k;
    }
    return out;
}

// Inverse of compress: scatters the low bits of sub into mask positions.
uint32_t expand(uint32_t sub, uint32_t mask) {
    uint32_t out = 0;
    int k = 0;
    while (mask) {
        int p = std::countr_zero(mask);
        mask &= mask - 1;
        out |= ((sub >> k) & 1u) << p;
        ++k;
    }
    return out;
}

bool is_bijection(const std::vector<uint32_t>& phi) {
    std::vector<bool> seen(phi.size(), false);
    for (uint32_t v : phi) {
        if (v >= phi.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

} // namespace

CoordinateSplit::CoordinateSplit(int m_in, uint32_t x_mask_in) : m(m_in), x_mask(x_mask_in) {
    check_even(m, 2);
    if (m > 32)
        throw std::invalid_argument("CoordinateSplit: m too large");
    const uint32_t all = (uint32_t{1} << m) - 1;
    if (x_mask & ~all)
        throw std::invalid_argument("CoordinateSplit: x block uses a variable beyond x_m");
    if (std::popcount(x_mask) != m / 2)
        throw std::invalid_argument("CoordinateSplit: x block must have m/2 variables");
}

uint32_t CoordinateSplit::y_mask() const {
    return ~x_mask & ((uint32_t{1} << m) - 1);
}

static std::vector<int> mask_vars(uint32_t mask) {
    std::vector<int> vars;
    while (mask) {
        int p = std::countr_zero(mask);
        mask &= mask - 1;
        vars.push_back(p + 1);
    }
    return vars;
}

std::vector<int> CoordinateSplit::x_vars() const { return mask_vars(x_mask); }
std::vector<int> CoordinateSplit::y_vars() const { return mask_vars(y_mask()); }

std::string CoordinateSplit::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    return "x={" + join(x_vars()) + "} y={" + join(y_vars()) + "}";
}

std::vector<CoordinateSplit> all_splits(int m) {
    check_even(m, 2);
    std::vector<CoordinateSplit> splits;
    const uint32_t limit = uint32_t{1} << m;
    for (uint32_t mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == m / 2)
            splits.emplace_back(m, mask);
    return splits;
}

TruthTable mm_construct(const std::vector<uint32_t>& phi, const TruthTable& g,
                        const CoordinateSplit& split) {
    const int m = split.m;
    const int h = m / 2;
    if (g.vars() != h)
        throw std::invalid_argument("mm_construct: g must be on m/2 variables");
    if (phi.size() != (size_t{1} << h))
        throw std::invalid_argument("mm_construct: phi must have 2^{m/2} entries");
    for (uint32_t v : phi)
        if (v >= (uint32_t{1} << h))
            throw std::invalid_argument("mm_construct: phi value out of range");
    const uint32_t xm = split.x_mask;
    const uint32_t ym = split.y_mask();
    return TruthTable::from_predicate(m, [&](uint32_t z) {
        uint32_t xi = compress(z, xm);
        uint32_t yi = compress(z, ym);
        return ((std::popcount(xi & phi[yi]) & 1) != 0) ^ g.get(yi);
    });
}

std::optional<MmWitness> detect_mm(const TruthTable& t, const CoordinateSplit& split) {
    if (t.vars() != split.m)
        throw std::invalid_argument("detect_mm: split does not match the function");
    const int h = split.m / 2;
    const uint32_t xm = split.x_mask;
    const uint32_t ym = split.y_mask();
    const uint32_t ycount = uint32_t{1} << h;

    std::vector<uint32_t> phi(ycount);
    std::vector<uint64_t> gbits(ycount >= 64 ? ycount / 64 : 1, 0);

    for (uint32_t yi = 0; yi < ycount; ++yi) {
        const uint32_t base = expand(yi, ym);
        const bool c = t.get(base);

        // Candidate linear part from the unit x-assignments, then an
        // exhaustive affinity check of the restriction against it.
        uint32_t a = 0;
        for (int k = 0; k < h; ++k) {
            uint32_t unit = expand(uint32_t{1} << k, xm);
            if (t.get(base | unit) != c)
                a |= uint32_t{1} << k;
        }
        for (uint32_t xi = 0; xi < ycount; ++xi) {
            bool expect = ((std::popcount(a & xi) & 1) != 0) ^ c;
            if (t.get(base | expand(xi, xm)) != expect)
                return std::nullopt;
        }
        phi[yi] = a;
        if (c)
            gbits[yi >> 6] |= uint64_t{1} << (yi & 63);
    }

    if (!is_bijection(phi))
        return std::nullopt;
    return MmWitness{std::move(phi), TruthTable::from_words(h, std::move(gbits))};
}

std::optional<std::pair<CoordinateSplit, MmWitness>>
detect_mm_any_split(const TruthTable& t) {
    check_even(t.vars(), 2);
    if (t.vars() > 12)
        throw ResourceLimit("detect_mm_any_split: split enumeration capped at m <= 12");
    for (const CoordinateSplit& split : all_splits(t.vars()))
        if (auto witness = detect_mm(t, split))
            return std::make_pair(split, std::move(*witness));
    return std::nullopt;
}

TruthTable paired_product_function(int m, int max_vars) {
    check_even(m, 2);
    return TruthTable::from_predicate(
        m,
        [](uint32_t i) {
            // Products of adjacent bit pairs: bit 2k of (i & i>>1) is
            // x_{2k+1} x_{2k+2}.
            return (std::popcount(i & (i >> 1) & 0x55555555u) & 1) != 0;
        },
        max_vars);
}

AffineMmWitness mm_affine_witness(int m) {
    check_even(m, 4);
    if (m > 24)
        throw std::invalid_argument("mm_affine_witness: m too large for table checks");
    BitMatrix a(m, m);
    const uint64_t all = (uint64_t{1} << m) - 1;
    for (int i = 1; i <= m; ++i) {
        uint64_t row;
        if (i % 2 == 1)
            row = uint64_t{0b11} << (i - 1); // y_i = x_i + x_{i+1}
        else
            row = all & ~((uint64_t{1} << (i - 1)) - 1); // y_i = x_i + ... + x_m
        a.set_row(i - 1, row);
    }
    if (!a.is_invertible())
        throw SingularMatrix("mm_affine_witness: substitution rule gave a singular matrix");
    uint64_t correction = 0;
    for (int j = 2; j <= m; j += 2)
        correction |= uint64_t{1} << (j - 1);
    return AffineMmWitness{std::move(a), correction};
}

} // namespace qbent
