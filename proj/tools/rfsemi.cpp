#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfsemi/census.hpp"
#include "rfsemi/configenum.hpp"
#include "rfsemi/rfmatrix.hpp"
#include "rfsemi/semigroup.hpp"

namespace {

using namespace rfsemi;
using nlohmann::json;

NumericalSemigroup build(const std::string& gens_text) {
    auto raw = parse_generators(gens_text);
    return NumericalSemigroup::from_generators(raw);
}

int cmd_analyze(const std::string& gens_text, bool as_json) {
    auto s = build(gens_text);
    auto profile = s.gap_profile();
    auto pf = s.pseudo_frobenius();
    if (as_json) {
        json j;
        j["generators"] = s.generators();
        j["multiplicity"] = s.multiplicity();
        j["embedding_dimension"] = s.embedding_dimension();
        j["frobenius"] = s.frobenius();
        j["genus"] = profile.genus();
        j["n_small"] = profile.n_small();
        j["pf"] = pf;
        j["type"] = pf.size();
        j["symmetric"] = s.is_symmetric();
        j["almost_symmetric"] = s.is_almost_symmetric();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "generators:";
    for (Int g : s.generators()) std::cout << " " << g;
    std::cout << "\nmultiplicity: " << s.multiplicity()
              << "\nembedding dimension: " << s.embedding_dimension()
              << "\nfrobenius: " << s.frobenius() << "\ngenus: " << profile.genus()
              << "\nsmall elements: " << profile.n_small() << "\npf:";
    for (Int f : pf) std::cout << " " << f;
    std::cout << "\ntype: " << pf.size()
              << "\nsymmetric: " << (s.is_symmetric() ? "yes" : "no")
              << "\nalmost symmetric: " << (s.is_almost_symmetric() ? "yes" : "no")
              << "\n";
    return 0;
}

int cmd_rf(const std::string& gens_text, Int f, std::size_t cap) {
    auto s = build(gens_text);
    auto mats = rf_matrices(s, f, cap);
    bool first = true;
    for (const auto& m : mats) {
        if (!first) std::cout << "\n";
        first = false;
        for (int i = 0; i < m.order; ++i) {
            for (int j = 0; j < m.order; ++j)
                std::cout << (j ? " " : "") << m.at(i, j);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_classify(const std::string& gens_text, bool as_json) {
    auto s = build(gens_text);
    auto cls = classify_pf(s);
    const auto& gens = s.generators();
    if (as_json) {
        json j;
        j["frobenius"] = cls.frobenius;
        j["good"] = json::array();
        for (const auto& w : cls.good)
            j["good"].push_back({{"f", w.value},
                                 {"i", w.i + 1},
                                 {"j", w.j + 1},
                                 {"k", w.k},
                                 {"via_complement", w.via_complement}});
        j["bad"] = cls.bad;
        j["couples"] = json::array();
        for (const auto& [a, b] : cls.couples) j["couples"].push_back({a, b});
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (Int f : s.pseudo_frobenius()) {
        if (f == cls.frobenius) {
            std::cout << f << " frobenius\n";
            continue;
        }
        bool good = false;
        for (const auto& w : cls.good) {
            if (w.value != f) continue;
            good = true;
            std::cout << f << " good " << w.k << "*" << gens[static_cast<std::size_t>(w.j)]
                      << "-" << gens[static_cast<std::size_t>(w.i)];
            if (w.via_complement) std::cout << " (for " << cls.frobenius - f << ")";
            std::cout << "\n";
            break;
        }
        if (!good) std::cout << f << " bad\n";
    }
    return 0;
}

int cmd_configs(int order, bool count_only) {
    if (count_only) {
        std::cout << count_configs(order) << "\n";
        return 0;
    }
    for (const auto& cfg : enumerate_configs(order))
        std::cout << config_hex_id(cfg) << "\n" << config_grid(cfg) << "\n";
    return 0;
}

int report_summary(const CensusSummary& summary) {
    std::cout << summary.to_json() << "\n";
    return summary.violations.empty() ? 0 : 1;
}

// Golden replay of the worked examples; prints one PASS/FAIL line per fact.
int cmd_verify_paper() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        if (!ok) ++failures;
    };
    auto contains_matrix = [](const std::vector<RFMatrix>& mats, const RFMatrix& want) {
        for (const auto& m : mats)
            if (m.entries == want.entries) return true;
        return false;
    };

    {
        auto s = NumericalSemigroup::from_generators({5, 12, 13});
        check(s.frobenius() == 21, "frobenius(<5,12,13>) = 21");
        check(s.pseudo_frobenius() == std::vector<Int>{19, 21}, "PF(<5,12,13>) = {19, 21}");
        RFMatrix want{19, 3, {-1, 2, 0, 1, -1, 2, 4, 1, -1}};
        check(contains_matrix(rf_matrices(s, 19), want),
              "worked 3x3 matrix is an RF-matrix of 19 in <5,12,13>");
    }
    {
        auto s = NumericalSemigroup::from_generators({64, 67, 91, 138, 150});
        check(s.frobenius() == 654, "frobenius(<64,67,91,138,150>) = 654");
        check(s.pseudo_frobenius() == std::vector<Int>{209, 327, 445, 654},
              "PF(<64,67,91,138,150>) = {209, 327, 445, 654}");
        check(s.is_almost_symmetric(), "<64,67,91,138,150> is almost symmetric");
        auto cls = classify_pf(s);
        check(cls.good_values() == std::vector<Int>{209, 445} &&
                  cls.bad == std::vector<Int>{327},
              "classification: good {209, 445}, bad {327}");
        auto lt = lambda_table(s);
        check(lt.at(0, 2) == 3, "lambda(64, 91) = 3, giving 209 = 3*91 - 64");
        RFMatrix want{327, 5,
                      {-1, 0, 1, 0, 2,
                       4, -1, 0, 1, 0,
                       0, 4, -1, 0, 1,
                       3, 0, 3, -1, 0,
                       0, 3, 0, 2, -1}};
        auto mats = rf_matrices(s, 327);
        check(contains_matrix(mats, want), "worked 5x5 matrix is an RF-matrix of 327");
        auto rep = pair_report(want, want);
        check(rep.prop1_ok && rep.property_a_ok && rep.property_b_ok,
              "(A, A) for 327 satisfies properties (a) and (b)");
    }
    check(count_configs(5) == 216, "216 admissible order-5 configurations");
    {
        auto s = NumericalSemigroup::from_generators({455, 497, 574, 589, 631, 708});
        std::vector<Int> pf_want{3079, 3289, 3521, 3655, 3674, 3789, 3923,
                                 4057, 4172, 4191, 4325, 4557, 4767, 7846};
        check(s.pseudo_frobenius() == pf_want, "PF of the order-6 example (14 values)");
        check(s.type() == 14, "type 14 > 2e at e = 6");
        check(s.is_almost_symmetric(), "order-6 example is almost symmetric");

        auto matrix_for = [](Int lam) {
            RFMatrix m;
            m.order = 6;
            m.target = 3521 + 134 * lam;
            m.entries = {-1, 8 - lam, 0, 0, lam, 0,
                         0, -1, 7 - lam, 0, 0, lam,
                         9 - lam, 0, -1, lam, 0, 0,
                         0, 7 - lam, 0, -1, lam + 1, 0,
                         0, 0, 6 - lam, 0, -1, lam + 1,
                         8 - lam, 0, 0, lam + 1, 0, -1};
            return m;
        };
        bool rows_ok = true;
        for (Int lam = 0; lam <= 6; ++lam)
            if (!rf_matrix_valid(s, matrix_for(lam))) rows_ok = false;
        check(rows_ok, "printed order-6 matrices factorize their targets (lambda 0..6)");
        bool shared = true;
        ZeroConfig base = zero_configuration(matrix_for(1));
        for (Int lam = 2; lam <= 5; ++lam)
            if (zero_configuration(matrix_for(lam)) != base) shared = false;
        check(shared, "matrices for lambda 1..5 share one 0-configuration");
        // Informational: classification of the listed values (not asserted).
        auto cls = classify_pf(s);
        std::cout << "info good:";
        for (Int g : cls.good_values()) std::cout << " " << g;
        std::cout << "\ninfo bad:";
        for (Int b : cls.bad) std::cout << " " << b;
        std::cout << "\n";
    }
    {
        bool fgh_ok = true;
        for (auto [n, r] : {std::pair<Int, Int>{2, 8}, {3, 11}, {4, 14}}) {
            Int s0 = r * (3 * n + 2) + 3;
            auto s = NumericalSemigroup::from_generators(
                {s0, s0 + 3, s0 + 3 * n + 1, s0 + 3 * n + 2});
            if (s.type() != 3 * n + 2) fgh_ok = false;
        }
        check(fgh_ok, "FGH family instances have type 3n+2");
    }

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup RF-matrix toolkit"};
    app.require_subcommand(1);

    std::string gens_text;
    bool as_json = false;
    Int rf_target = 0;
    std::size_t cap = kDefaultCap;

    auto* analyze = app.add_subcommand("analyze", "semigroup invariants");
    analyze->add_option("gens", gens_text, "comma-separated generators")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* rf = app.add_subcommand("rf", "RF-matrices of a pseudo-Frobenius number");
    rf->add_option("gens", gens_text)->required();
    rf->add_option("f", rf_target, "pseudo-Frobenius number")->required();
    rf->add_option("--cap", cap, "enumeration cap");

    auto* classify = app.add_subcommand("classify", "good/bad pseudo-Frobenius split");
    classify->add_option("gens", gens_text)->required();
    classify->add_flag("--json", as_json);

    int order = 5;
    bool count_only = false;
    auto* configs = app.add_subcommand("configs", "admissible 0-configurations");
    configs->add_option("--order", order)->required();
    configs->add_flag("--count-only", count_only);

    CensusParams params;
    bool census_all = false;
    bool long_run_ack = false;
    auto* census = app.add_subcommand("census", "exhaustive semigroup census");
    census->add_option("--embdim", params.embdim)->required();
    census->add_option("--max-gen", params.max_gen)->required();
    census->add_flag("--all", census_all, "keep non-almost-symmetric semigroups too");
    census->add_flag("--almost-symmetric", "filter to almost symmetric (default)");
    census->add_option("--jobs", params.workers);
    census->add_option("--out", params.output_path);
    census->add_option("--checkpoint", params.checkpoint_path);
    census->add_option("--rf-cap", params.rf_cap);
    census->add_flag("--i-have-hours", long_run_ack,
                     "acknowledge a full-scale run (e.g. max-gen 200)");

    std::string resume_path;
    auto* resume = app.add_subcommand("resume", "continue a checkpointed census");
    resume->add_option("--checkpoint", resume_path)->required();
    int resume_jobs = 0;
    resume->add_option("--jobs", resume_jobs);

    app.add_subcommand("verify-paper", "replay the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 covers --help; everything else is usage
    }

    try {
        if (app.got_subcommand("analyze")) return cmd_analyze(gens_text, as_json);
        if (app.got_subcommand("rf")) return cmd_rf(gens_text, rf_target, cap);
        if (app.got_subcommand("classify")) return cmd_classify(gens_text, as_json);
        if (app.got_subcommand("configs")) return cmd_configs(order, count_only);
        if (app.got_subcommand("census")) {
            params.require_almost_symmetric = !census_all;
            if (params.workers < 1) params.workers = 1;
            if (params.output_path.empty()) params.output_path = "census.jsonl";
            if (params.checkpoint_path.empty())
                params.checkpoint_path = params.output_path + ".checkpoint";
            if (params.embdim == 5 && params.max_gen > 120 && !long_run_ack) {
                std::cerr << "a run this large takes hours; pass --i-have-hours\n";
                return 2;
            }
            return report_summary(run_census(params));
        }
        if (app.got_subcommand("resume")) {
            CensusParams p = checkpoint_params(resume_path);
            if (resume_jobs > 0) p.workers = resume_jobs;
            return report_summary(resume_census(p));
        }
        if (app.got_subcommand("verify-paper")) return cmd_verify_paper();
    } catch (const rfsemi::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
