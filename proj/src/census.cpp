#include "rfsemi/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rfsemi/configenum.hpp"
#include "rfsemi/rfmatrix.hpp"

namespace rfsemi {

namespace fs = std::filesystem;
using nlohmann::json;

void CensusParams::validate() const {
    if (embdim < 2 || embdim > 6) throw Error("embdim must be in [2, 6]");
    if (max_gen < embdim) throw Error("max_gen must be at least embdim");
    if (workers < 1) throw Error("workers must be positive");
    if (output_path.empty()) throw Error("output path required");
    if (checkpoint_path.empty()) throw Error("checkpoint path required");
}

std::uint64_t CensusParams::semantic_hash() const {
    // FNV-1a over the parameters that determine the record set.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (b * 8)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(embdim));
    mix(static_cast<std::uint64_t>(max_gen));
    mix(require_almost_symmetric ? 1 : 0);
    mix(static_cast<std::uint64_t>(rf_cap));
    return h;
}

std::string to_jsonl(const CensusRecord& rec) {
    json j;
    j["gens"] = rec.gens;
    j["frobenius"] = rec.frobenius;
    j["genus"] = rec.genus;
    j["type"] = rec.type;
    j["pf"] = rec.pf;
    j["almost_symmetric"] = rec.almost_symmetric;
    j["n_good"] = rec.n_good;
    j["n_bad"] = rec.n_bad;
    j["bad_values"] = rec.bad_values;
    j["bad_is_half_frobenius"] = rec.bad_is_half_frobenius;
    j["bad_config_ids"] = rec.bad_config_ids;
    return j.dump();
}

CensusRecord record_from_jsonl(const std::string& line) {
    json j = json::parse(line);
    CensusRecord r;
    r.gens = j.at("gens").get<std::vector<Int>>();
    r.frobenius = j.at("frobenius").get<Int>();
    r.genus = j.at("genus").get<Int>();
    r.type = j.at("type").get<int>();
    r.pf = j.at("pf").get<std::vector<Int>>();
    r.almost_symmetric = j.at("almost_symmetric").get<bool>();
    r.n_good = j.at("n_good").get<int>();
    r.n_bad = j.at("n_bad").get<int>();
    r.bad_values = j.at("bad_values").get<std::vector<Int>>();
    r.bad_is_half_frobenius = j.at("bad_is_half_frobenius").get<bool>();
    r.bad_config_ids = j.at("bad_config_ids").get<std::vector<std::string>>();
    return r;
}

std::string CensusSummary::to_json() const {
    json j;
    j["semigroups_seen"] = semigroups_seen;
    j["almost_symmetric_seen"] = almost_symmetric_seen;
    j["records_emitted"] = records_emitted;
    j["max_type"] = max_type;
    j["lambda_one_occurrences"] = lambda_one_occurrences;
    json hist = json::object();
    for (const auto& [t, n] : type_histogram) hist[std::to_string(t)] = n;
    j["type_histogram"] = hist;
    json viols = json::array();
    for (const auto& v : violations)
        viols.push_back({{"gens", v.gens}, {"property", v.property}});
    j["violations"] = viols;
    j["wall_time"] = wall_time;
    return j.dump();
}

namespace {

// Reachability table of a partial generator set, up to max_gen.
struct Reach {
    std::vector<char> in;
    explicit Reach(Int bound) : in(static_cast<std::size_t>(bound) + 1, 0) { in[0] = 1; }
    Reach extend(Int g) const {
        Reach r = *this;
        for (std::size_t x = static_cast<std::size_t>(g); x < r.in.size(); ++x)
            if (r.in[x - static_cast<std::size_t>(g)]) r.in[x] = 1;
        return r;
    }
    bool contains(Int x) const { return in[static_cast<std::size_t>(x)] != 0; }
};

// A later generator can never make an earlier one redundant (any combination
// involving a larger generator exceeds it), so minimality of the full tuple
// is exactly "each g_d is not reachable from its prefix".
void complete_tuple(std::vector<Int>& tuple, const Reach& reach, int embdim, Int max_gen,
                    Int running_gcd,
                    const std::function<void(std::span<const Int>)>& visit) {
    if (static_cast<int>(tuple.size()) == embdim) {
        if (running_gcd == 1) visit(tuple);
        return;
    }
    int remaining = embdim - static_cast<int>(tuple.size());
    for (Int g = tuple.back() + 1; g + remaining - 1 <= max_gen; ++g) {
        if (reach.contains(g)) continue;
        tuple.push_back(g);
        complete_tuple(tuple, reach.extend(g), embdim, max_gen,
                       std::gcd(running_gcd, g), visit);
        tuple.pop_back();
    }
}

struct Prefix {
    Int g1;
    Int g2;
    bool operator<(const Prefix& o) const {
        return g1 != o.g1 ? g1 < o.g1 : g2 < o.g2;
    }
};

std::vector<Prefix> partition_prefixes(int embdim, Int max_gen) {
    std::vector<Prefix> out;
    for (Int g1 = embdim; g1 + embdim - 1 <= max_gen; ++g1)
        for (Int g2 = g1 + 1; g2 + embdim - 2 <= max_gen; ++g2)
            if (g2 % g1 != 0) out.push_back({g1, g2});
    return out;
}

void enumerate_partition(const Prefix& p, int embdim, Int max_gen,
                         const std::function<void(std::span<const Int>)>& visit) {
    std::vector<Int> tuple{p.g1, p.g2};
    Reach reach = Reach(max_gen).extend(p.g1).extend(p.g2);
    complete_tuple(tuple, reach, embdim, max_gen, std::gcd(p.g1, p.g2), visit);
}

std::string prefix_shard_name(const Prefix& p) {
    return "p_" + std::to_string(p.g1) + "_" + std::to_string(p.g2) + ".jsonl";
}

void write_rename(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

struct PartitionResult {
    std::uint64_t seen = 0;
    std::uint64_t as_seen = 0;
    std::uint64_t lambda_ones = 0;
    std::vector<CensusRecord> records;
    std::vector<Violation> violations;
};

void add_violation(PartitionResult& res, std::span<const Int> gens, std::string prop) {
    res.violations.push_back({{gens.begin(), gens.end()}, std::move(prop)});
}

// Classification, RF-matrix checks and the property battery for one semigroup.
void process_tuple(std::span<const Int> gens, const CensusParams& params,
                   PartitionResult& res) {
    ++res.seen;
    auto s = NumericalSemigroup::from_minimal_generators(gens);
    const bool as = s.is_almost_symmetric();
    if (as) ++res.as_seen;
    if (params.require_almost_symmetric && !as) return;

    CensusRecord rec;
    rec.gens.assign(gens.begin(), gens.end());
    rec.frobenius = s.frobenius();
    rec.genus = s.gap_profile().genus();
    rec.pf = s.pseudo_frobenius();
    rec.type = static_cast<int>(rec.pf.size());
    rec.almost_symmetric = as;

    const int e = s.embedding_dimension();
    if (e == 3 && rec.type > 2)
        add_violation(res, gens, "type_le_2_at_e3");

    if (as) {
        PFClassification cls = classify_pf(s);
        rec.n_good = static_cast<int>(cls.good.size());
        rec.n_bad = static_cast<int>(cls.bad.size());
        rec.bad_values = cls.bad;
        for (Int b : cls.bad)
            if (2 * b != rec.frobenius) rec.bad_is_half_frobenius = false;

        if (rec.n_good + rec.n_bad + 1 != rec.type)
            add_violation(res, gens, "type_decomposition");
        if (e == 4 && rec.type > 3)
            add_violation(res, gens, "type_le_3_at_e4_as");
        if (e == 5) {
            if (rec.type > 473) add_violation(res, gens, "type_le_473");
            if (rec.n_good > 40) add_violation(res, gens, "good_le_40");
            // lambda_ij = 1 is unexpected in this regime; counted, not asserted.
            auto lt = lambda_table(s);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    if (i != j && lt.at(i, j) == 1) ++res.lambda_ones;
        }

        constexpr std::size_t kSampleLimit = 64;
        auto matrices_for = [&](Int f) {
            try {
                return rf_matrices(s, f, params.rf_cap);
            } catch (const CapExceeded&) {
                add_violation(res, gens, "rf_cap_exceeded_sampled");
                return rf_matrices_sample(s, f, kSampleLimit);
            }
        };

        // Proposition 1 across each couple (bounded pair sampling).
        for (const auto& [f, partner] : cls.couples) {
            auto as_list = matrices_for(f);
            auto bs_list = f == partner ? as_list : matrices_for(partner);
            std::size_t na = std::min<std::size_t>(as_list.size(), kSampleLimit);
            std::size_t nb = std::min<std::size_t>(bs_list.size(), kSampleLimit);
            for (std::size_t x = 0; x < na; ++x)
                for (std::size_t y = 0; y < nb; ++y)
                    if (!pair_report(as_list[x], bs_list[y]).prop1_ok) {
                        add_violation(res, gens, "prop1_product_zero");
                        x = na;
                        break;
                    }
        }

        // Bad pseudo-Frobenius structure (e = 5 only; the paper's properties
        // (a)/(b) are specific to that order).
        std::map<std::uint64_t, std::set<Int>> config_owners;
        for (Int b : cls.bad) {
            auto mats = matrices_for(b);
            if (mats.empty()) {
                add_violation(res, gens, "bad_pf_without_rf_matrix");
                continue;
            }
            ZeroConfig cfg = zero_configuration(mats.front());
            rec.bad_config_ids.push_back(config_hex_id(cfg));
            if (e != 5) continue;
            config_owners[cfg.mask].insert(b);
            auto partner_mats = 2 * b == rec.frobenius ? mats : matrices_for(rec.frobenius - b);
            bool shared = true, prop_b = true, prop_a = true, rows_ok = true;
            for (const auto& m : mats) {
                if (zero_configuration(m) != cfg) shared = false;
                auto rep = pair_report(m, partner_mats.front());
                if (!rep.property_b_ok) prop_b = false;
                if (!rep.property_a_ok) prop_a = false;
                if (!shared_positive_rows(m)) rows_ok = false;
            }
            if (!shared) add_violation(res, gens, "bad_pf_config_not_shared");
            if (!prop_b) add_violation(res, gens, "bad_pf_property_b");
            if (!prop_a) add_violation(res, gens, "bad_pf_property_a");
            if (!rows_ok) add_violation(res, gens, "bad_pf_rows_witness");
        }
        for (const auto& [mask, owners] : config_owners)
            if (owners.size() >= 3)
                add_violation(res, gens, "config_shared_by_3_bad_pf");
    }

    res.records.push_back(std::move(rec));
}

// Checkpoint file layout (flat text, write-renamed):
//   rfsemi-census-checkpoint v1
//   params embdim <e> max_gen <G> as <0|1> rf_cap <c> out <path> hash <h>
//   done <g1> <g2> seen <n> as_seen <m> records <k>
//   viol <g1,g2,...> <property>
struct Checkpoint {
    CensusParams params;
    std::uint64_t hash = 0;
    std::map<Prefix, std::array<std::uint64_t, 4>> done; // seen, as_seen, records, lambda1
    std::vector<Violation> violations;
};

std::string checkpoint_text(const Checkpoint& cp) {
    std::ostringstream out;
    out << "rfsemi-census-checkpoint v1\n";
    out << "params embdim " << cp.params.embdim << " max_gen " << cp.params.max_gen
        << " as " << (cp.params.require_almost_symmetric ? 1 : 0) << " rf_cap "
        << cp.params.rf_cap << " out " << cp.params.output_path << " hash "
        << cp.hash << "\n";
    for (const auto& [p, counts] : cp.done)
        out << "done " << p.g1 << " " << p.g2 << " seen " << counts[0] << " as_seen "
            << counts[1] << " records " << counts[2] << " lambda1 " << counts[3] << "\n";
    for (const auto& v : cp.violations) {
        out << "viol ";
        for (std::size_t i = 0; i < v.gens.size(); ++i)
            out << (i ? "," : "") << v.gens[i];
        out << " " << v.property << "\n";
    }
    return out.str();
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CheckpointMismatch("checkpoint not found: " + path);
    Checkpoint cp;
    std::string line;
    if (!std::getline(in, line) || line != "rfsemi-census-checkpoint v1")
        throw CheckpointMismatch("unrecognized checkpoint header");
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "params") {
            std::string key;
            while (ls >> key) {
                if (key == "embdim") ls >> cp.params.embdim;
                else if (key == "max_gen") ls >> cp.params.max_gen;
                else if (key == "as") { int v; ls >> v; cp.params.require_almost_symmetric = v != 0; }
                else if (key == "rf_cap") ls >> cp.params.rf_cap;
                else if (key == "out") ls >> cp.params.output_path;
                else if (key == "hash") ls >> cp.hash;
            }
        } else if (tag == "done") {
            Prefix p{};
            std::array<std::uint64_t, 4> c{};
            std::string key;
            ls >> p.g1 >> p.g2 >> key >> c[0] >> key >> c[1] >> key >> c[2];
            ls >> key >> c[3]; // absent in older checkpoints
            cp.done[p] = c;
        } else if (tag == "viol") {
            std::string gens_text, prop;
            ls >> gens_text >> prop;
            Violation v;
            std::istringstream gs(gens_text);
            std::string tok;
            while (std::getline(gs, tok, ',')) v.gens.push_back(std::stoll(tok));
            v.property = prop;
            cp.violations.push_back(std::move(v));
        }
    }
    return cp;
}

fs::path shard_dir(const CensusParams& params) {
    return fs::path(params.checkpoint_path + ".shards");
}

CensusSummary run_impl(const CensusParams& params, bool resuming) {
    params.validate();
    auto start = std::chrono::steady_clock::now();

    Checkpoint cp;
    cp.params = params;
    cp.hash = params.semantic_hash();
    if (resuming) {
        Checkpoint prev = load_checkpoint(params.checkpoint_path);
        if (prev.hash != params.semantic_hash())
            throw CheckpointMismatch("checkpoint was written for different parameters");
        cp.done = std::move(prev.done);
        cp.violations = std::move(prev.violations);
    }

    fs::create_directories(shard_dir(params));
    std::vector<Prefix> prefixes = partition_prefixes(params.embdim, params.max_gen);
    std::vector<Prefix> todo;
    for (const auto& p : prefixes)
        if (!cp.done.count(p)) todo.push_back(p);

    std::mutex coord;
    std::atomic<std::size_t> next{0};
    std::exception_ptr worker_error;

    auto worker = [&] {
        try {
            while (true) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= todo.size()) return;
                const Prefix& p = todo[idx];
                PartitionResult res;
                enumerate_partition(p, params.embdim, params.max_gen,
                                    [&](std::span<const Int> gens) {
                                        process_tuple(gens, params, res);
                                    });
                std::string shard;
                for (const auto& rec : res.records) shard += to_jsonl(rec) + "\n";
                write_rename(shard_dir(params) / prefix_shard_name(p), shard);
                std::lock_guard lock(coord);
                cp.done[p] = {res.seen, res.as_seen, res.records.size(), res.lambda_ones};
                for (auto& v : res.violations) cp.violations.push_back(std::move(v));
                write_rename(params.checkpoint_path, checkpoint_text(cp));
            }
        } catch (...) {
            std::lock_guard lock(coord);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    int n_workers = std::min<int>(params.workers, std::max<std::size_t>(todo.size(), 1));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);

    // Merge shards in lex prefix order; records within a shard are already
    // lex-ordered, so the final file is sorted by generator tuple.
    CensusSummary summary;
    {
        std::ofstream out(params.output_path, std::ios::trunc);
        if (!out) throw IoError("cannot write " + params.output_path);
        for (const auto& p : prefixes) {
            auto it = cp.done.find(p);
            if (it == cp.done.end()) continue;
            summary.semigroups_seen += it->second[0];
            summary.almost_symmetric_seen += it->second[1];
            summary.lambda_one_occurrences += it->second[3];
            std::ifstream shard(shard_dir(params) / prefix_shard_name(p));
            if (!shard) throw IoError("missing shard for completed partition");
            std::string line;
            while (std::getline(shard, line)) {
                if (line.empty()) continue;
                CensusRecord rec = record_from_jsonl(line);
                ++summary.records_emitted;
                summary.max_type = std::max(summary.max_type, rec.type);
                ++summary.type_histogram[rec.type];
                out << line << "\n";
            }
        }
    }
    summary.violations = cp.violations;

    std::error_code ec;
    fs::remove_all(shard_dir(params), ec);
    fs::remove(params.checkpoint_path, ec);

    summary.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

} // namespace

void enumerate_minimal_tuples(int embdim, Int max_gen,
                              const std::function<void(std::span<const Int>)>& visit) {
    if (embdim < 1) throw Error("embdim must be positive");
    if (embdim == 1) {
        // Only <1> = N qualifies (gcd 1 with a single generator).
        std::vector<Int> one{1};
        if (max_gen >= 1) visit(one);
        return;
    }
    for (const auto& p : partition_prefixes(embdim, max_gen))
        enumerate_partition(p, embdim, max_gen, visit);
}

CensusSummary run_census(const CensusParams& params) { return run_impl(params, false); }

CensusSummary resume_census(const CensusParams& params) { return run_impl(params, true); }

CensusParams checkpoint_params(const std::string& checkpoint_path) {
    Checkpoint cp = load_checkpoint(checkpoint_path);
    cp.params.checkpoint_path = checkpoint_path;
    if (cp.params.workers < 1) cp.params.workers = 1;
    return cp.params;
}

} // namespace rfsemi
