#include "rfsemi/semigroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace rfsemi {

namespace {

// Apery arrays are allocated per residue class; keep the multiplicity sane.
constexpr Int kMaxMultiplicity = 50'000'000;

// v representable as a non-negative combination of gens (bounded DP).
bool representable(Int v, const std::vector<Int>& gens) {
    if (v < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(v) + 1, 0);
    reach[0] = 1;
    for (Int x = 1; x <= v; ++x) {
        for (Int g : gens) {
            if (g <= x && reach[static_cast<std::size_t>(x - g)]) {
                reach[static_cast<std::size_t>(x)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(v)] != 0;
}

void check_width(const std::vector<Int>& gens) {
    Int m = gens.front();
    Int gmax = gens.back();
    if (m > kMaxMultiplicity)
        throw Overflow("multiplicity too large for Apery table");
    // Apery values are bounded by m * gmax; keep F + 2*gmax comfortably in range.
    if (gmax != 0 && m > (std::numeric_limits<Int>::max() / 4) / gmax)
        throw Overflow("generators too large for 64-bit arithmetic");
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> raw) {
    if (raw.empty()) throw EmptyInput();
    std::vector<Int> gens(raw.begin(), raw.end());
    for (Int g : gens)
        if (g < 1) throw Error("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw NotCofinite();

    if (gens.front() == 1) gens = {1};
    check_width(gens);

    // Minimality: drop any generator representable over the others, largest
    // first, until stable.
    bool changed = true;
    while (changed && gens.size() > 1) {
        changed = false;
        for (std::size_t i = gens.size(); i-- > 0;) {
            std::vector<Int> others;
            others.reserve(gens.size() - 1);
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (representable(gens[i], others)) {
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }

    return from_minimal_generators(gens);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::initializer_list<Int> raw) {
    return from_generators(std::span<const Int>(raw.begin(), raw.size()));
}

NumericalSemigroup NumericalSemigroup::from_minimal_generators(std::span<const Int> gens) {
    NumericalSemigroup s;
    s.gens_.assign(gens.begin(), gens.end());
    check_width(s.gens_);
    s.compute_apery();
    return s;
}

void NumericalSemigroup::compute_apery() {
    const Int m = gens_.front();
    const Int inf = std::numeric_limits<Int>::max();
    apery_.assign(static_cast<std::size_t>(m), inf);
    apery_[0] = 0;
    if (m == 1) {
        frobenius_ = -1;
        return;
    }
    // Shortest paths over residue classes mod m: relax until fixpoint.
    std::vector<Int> queue{0};
    std::vector<char> queued(static_cast<std::size_t>(m), 0);
    queued[0] = 1;
    while (!queue.empty()) {
        Int r = queue.back();
        queue.pop_back();
        queued[static_cast<std::size_t>(r)] = 0;
        Int base = apery_[static_cast<std::size_t>(r)];
        for (Int g : gens_) {
            Int nr = (r + g) % m;
            Int cand = base + g;
            if (cand < apery_[static_cast<std::size_t>(nr)]) {
                apery_[static_cast<std::size_t>(nr)] = cand;
                if (!queued[static_cast<std::size_t>(nr)]) {
                    queued[static_cast<std::size_t>(nr)] = 1;
                    queue.push_back(nr);
                }
            }
        }
    }
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
}

GapProfile NumericalSemigroup::gap_profile() const {
    GapProfile p;
    for (Int x = 0; x <= frobenius_; ++x) {
        if (contains(x))
            p.small_elements.push_back(x);
        else
            p.gaps.push_back(x);
    }
    return p;
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
    const Int m = multiplicity();
    if (m == 1) return {};
    // PF(S) = { w - m : w a <=_S-maximal element of the Apery set }.
    std::vector<Int> pf;
    for (Int r = 0; r < m; ++r) {
        Int w = apery_[static_cast<std::size_t>(r)];
        bool maximal = true;
        for (Int r2 = 0; r2 < m && maximal; ++r2) {
            if (r2 == r) continue;
            Int w2 = apery_[static_cast<std::size_t>(r2)];
            if (w2 > w && contains(w2 - w)) maximal = false;
        }
        if (maximal) pf.push_back(w - m);
    }
    std::sort(pf.begin(), pf.end());
    return pf;
}

bool NumericalSemigroup::is_symmetric() const {
    const Int f = frobenius_;
    for (Int x = 0; x <= f; ++x)
        if (!contains(x) && !contains(f - x)) return false;
    return true;
}

bool NumericalSemigroup::is_almost_symmetric() const {
    const Int f = frobenius_;
    std::vector<Int> pf = pseudo_frobenius();
    auto in_pf = [&](Int x) {
        return std::binary_search(pf.begin(), pf.end(), x);
    };
    for (Int x = 0; x <= f; ++x) {
        if (contains(x)) continue;
        if (contains(f - x)) continue;
        if (!(in_pf(x) && in_pf(f - x))) return false;
    }
    return true;
}

std::vector<Int> parse_generators(const std::string& text) {
    std::vector<Int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::size_t begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) throw Error("empty entry in generator list");
        std::size_t end = token.find_last_not_of(" \t");
        token = token.substr(begin, end - begin + 1);
        std::size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw Error("cannot parse generator '" + token + "'");
        }
        if (pos != token.size()) throw Error("cannot parse generator '" + token + "'");
        out.push_back(value);
    }
    if (out.empty()) throw EmptyInput();
    return out;
}

} // namespace rfsemi
