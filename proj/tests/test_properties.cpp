// Randomized-corpus properties. The acceptance suite runs the full-size
// corpus (10^4 semigroups); this binary keeps a faster profile for ctest
// iteration while exercising every property at least once.
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rfsemi/census.hpp"
#include "rfsemi/configenum.hpp"
#include "rfsemi/rfmatrix.hpp"

using namespace rfsemi;

namespace {

std::vector<std::vector<Int>> random_corpus(std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> edist(2, 5);
    std::uniform_int_distribution<Int> gdist(2, 40);
    std::vector<std::vector<Int>> corpus;
    while (corpus.size() < count) {
        int e = edist(rng);
        std::set<Int> gens;
        while (static_cast<int>(gens.size()) < e) gens.insert(gdist(rng));
        std::vector<Int> g(gens.begin(), gens.end());
        Int d = 0;
        for (Int x : g) d = std::gcd(d, x);
        if (d != 1) continue;
        corpus.push_back(std::move(g));
    }
    return corpus;
}

} // namespace

TEST_CASE("sieve-oracle equivalence and PF duality on a random corpus") {
    for (const auto& raw : random_corpus(300, 20240817)) {
        auto s = NumericalSemigroup::from_generators(raw);
        if (s.multiplicity() == 1) continue;
        Int bound = s.frobenius() + 2 * s.generators().back();
        auto reach = oracle::sieve(s.generators(), bound);
        for (Int x = 0; x <= bound; ++x)
            REQUIRE(s.contains(x) == (reach[static_cast<std::size_t>(x)] != 0));
        REQUIRE(s.pseudo_frobenius() == oracle::pseudo_frobenius(s.generators()));
        REQUIRE(s.pseudo_frobenius() == oracle::pf_as_maximal_gaps(s.generators()));
    }
}

TEST_CASE("closure, tail membership, symmetry-type equivalence") {
    std::mt19937_64 rng(7);
    for (const auto& raw : random_corpus(300, 99)) {
        auto s = NumericalSemigroup::from_generators(raw);
        if (s.multiplicity() == 1) continue;
        REQUIRE((s.type() == 1) == s.is_symmetric());
        if (s.is_symmetric()) REQUIRE(s.is_almost_symmetric());
        for (Int x = s.frobenius() + 1; x <= s.frobenius() + 50; ++x)
            REQUIRE(s.contains(x));
        // sampled additive closure
        auto profile = s.gap_profile();
        std::uniform_int_distribution<std::size_t> pick(0, profile.small_elements.size() - 1);
        for (int k = 0; k < 20; ++k) {
            Int a = profile.small_elements[pick(rng)];
            Int b = profile.small_elements[pick(rng)];
            REQUIRE(s.contains(a + b));
        }
    }
}

TEST_CASE("RF-matrix and classification properties on almost symmetric semigroups") {
    std::size_t as_found = 0;
    for (const auto& raw : random_corpus(600, 4242)) {
        auto s = NumericalSemigroup::from_generators(raw);
        if (s.multiplicity() == 1 || !s.is_almost_symmetric()) continue;
        ++as_found;
        const Int f_big = s.frobenius();
        auto pf = s.pseudo_frobenius();
        auto lt = lambda_table(s);
        int e = s.embedding_dimension();
        REQUIRE(static_cast<int>(lt.big_lambda.size()) == e * (e - 1));

        // Every element of PF of the form k*g_j - g_i forces k = lambda_ij.
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) {
                if (i == j) continue;
                Int gi = s.generators()[static_cast<std::size_t>(i)];
                Int gj = s.generators()[static_cast<std::size_t>(j)];
                for (Int k = 1; k * gj - gi <= f_big; ++k)
                    if (std::binary_search(pf.begin(), pf.end(), k * gj - gi))
                        REQUIRE(k == lt.at(i, j));
            }

        auto cls = classify_pf(s);
        REQUIRE(static_cast<int>(cls.good.size() + cls.bad.size()) + 1 == s.type());
        if (e == 5) {
            REQUIRE(cls.good.size() <= 40);
            REQUIRE(s.type() <= 473);
        }

        // f good iff F - f good.
        auto goods = cls.good_values();
        for (Int g : goods)
            REQUIRE(std::find(goods.begin(), goods.end(), f_big - g) != goods.end());

        std::map<std::uint64_t, std::set<Int>> bad_configs;
        for (const auto& [f, partner] : cls.couples) {
            auto a_mats = rf_matrices(s, f, 20000);
            auto b_mats = f == partner ? a_mats : rf_matrices(s, partner, 20000);
            REQUIRE(!a_mats.empty());
            for (const auto& a : a_mats) REQUIRE(rf_matrix_valid(s, a));
            for (const auto& a : a_mats)
                for (const auto& b : b_mats)
                    REQUIRE(pair_report(a, b).prop1_ok);

            bool f_bad = std::binary_search(cls.bad.begin(), cls.bad.end(), f);
            if (f_bad && e == 5) {
                ZeroConfig base = zero_configuration(a_mats.front());
                bad_configs[base.mask].insert(f);
                static const auto admissible = enumerate_configs(5);
                for (const auto& a : a_mats) {
                    ZeroConfig cfg = zero_configuration(a);
                    REQUIRE(cfg == base);
                    REQUIRE(std::binary_search(admissible.begin(), admissible.end(), cfg));
                    REQUIRE(pair_report(a, b_mats.front()).property_b_ok);
                    REQUIRE(shared_positive_rows(a).has_value());
                }
            }
        }
        for (const auto& [mask, owners] : bad_configs) REQUIRE(owners.size() <= 2);
    }
    REQUIRE(as_found > 10); // the corpus actually exercises the AS branch
}

TEST_CASE("census stream replays the battery") {
    // Small census; its internal battery must come back clean, and the
    // emitted records must agree with direct recomputation.
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "rfsemi_prop_census";
    fs::remove_all(dir);
    fs::create_directories(dir);
    CensusParams p;
    p.embdim = 5;
    p.max_gen = 25;
    p.workers = 2;
    p.output_path = (dir / "out.jsonl").string();
    p.checkpoint_path = (dir / "cp").string();
    auto summary = run_census(p);
    CHECK(summary.violations.empty());
    CHECK(summary.max_type <= 5);

    std::ifstream in(p.output_path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++n;
        auto rec = record_from_jsonl(line);
        auto s = NumericalSemigroup::from_generators(rec.gens);
        REQUIRE(s.generators() == rec.gens);
        REQUIRE(s.frobenius() == rec.frobenius);
        REQUIRE(s.pseudo_frobenius() == rec.pf);
        REQUIRE(s.is_almost_symmetric());
        REQUIRE(rec.n_bad <= 1);
        for (Int b : rec.bad_values) REQUIRE(2 * b == rec.frobenius);
    }
    CHECK(n == summary.records_emitted);
    fs::remove_all(dir);
}
