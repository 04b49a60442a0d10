#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rfsemi/semigroup.hpp"

namespace rfsemi {

struct CensusParams {
    int embdim = 5;
    Int max_gen = 0;
    bool require_almost_symmetric = true;
    int workers = 1;
    std::size_t rf_cap = kDefaultCapForCensus;
    std::string output_path;
    std::string checkpoint_path;

    static constexpr std::size_t kDefaultCapForCensus = 1'000'000;

    void validate() const; // throws Error on bad fields
    std::uint64_t semantic_hash() const;
};

struct CensusRecord {
    std::vector<Int> gens;
    Int frobenius = 0;
    Int genus = 0;
    int type = 0;
    std::vector<Int> pf;
    bool almost_symmetric = false;
    int n_good = 0;
    int n_bad = 0;
    std::vector<Int> bad_values;
    bool bad_is_half_frobenius = true; // vacuously true with no bad values
    std::vector<std::string> bad_config_ids;
};

std::string to_jsonl(const CensusRecord& rec);
CensusRecord record_from_jsonl(const std::string& line);

struct Violation {
    std::vector<Int> gens;
    std::string property;
};

struct CensusSummary {
    std::uint64_t semigroups_seen = 0;      // minimal tuples visited
    std::uint64_t almost_symmetric_seen = 0;
    std::uint64_t records_emitted = 0;
    int max_type = 0;
    std::map<int, std::uint64_t> type_histogram; // over emitted records
    std::uint64_t lambda_one_occurrences = 0;    // lambda_ij = 1 sightings, e=5 AS
    std::vector<Violation> violations;
    double wall_time = 0.0;

    std::string to_json() const;
};

/// Visits every strictly increasing tuple g_1 < ... < g_embdim <= max_gen
/// that is the minimal generating set of its semigroup (gcd 1, no generator
/// representable over the others), in lexicographic order.
void enumerate_minimal_tuples(int embdim, Int max_gen,
                              const std::function<void(std::span<const Int>)>& visit);

/// Exhaustive census over all minimal tuples within the bound. Emits one
/// JSONL record per retained semigroup, runs the property battery, and
/// checkpoints after each completed (g1,g2) partition.
CensusSummary run_census(const CensusParams& params);

/// Continues an interrupted census from its checkpoint. Throws
/// CheckpointMismatch when the checkpoint is absent or was written for
/// different parameters.
CensusSummary resume_census(const CensusParams& params);

/// Reads the parameters recorded in a checkpoint file (for the CLI resume
/// command). Throws CheckpointMismatch / IoError.
CensusParams checkpoint_params(const std::string& checkpoint_path);

} // namespace rfsemi
