#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permlat/json_io.hpp"
#include "permlat/lattice.hpp"
#include "permlat/perm.hpp"
#include "permlat/taulat.hpp"

namespace permlat {

struct ExperimentConfig {
    int n = 0;
    std::string tau_text;
    long box = 10;
    long samples = 1000;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::orbit;

    Permutation tau() const;  // parsed against n
    void validate() const;    // throws std::invalid_argument
};

struct SampleRecord {
    long sample_index = 0;
    std::vector<std::vector<Int>> generators;
    int tau_order = 0;
    bool full_rank = false;
    std::optional<bool> wr;                     // present iff full_rank
    std::optional<std::vector<Int>> minima_sq;  // present iff wr computed
    std::optional<Int> det_sq;                  // present iff full_rank
};

struct RankCensusResult {
    ExperimentConfig cfg;
    std::vector<SampleRecord> records;
    std::map<int, long> order_histogram;
    int max_order = 0;
    int o_generic = 0;
    long generic_attained = 0;  // samples with tau_order == o_generic
    long full_rank_count = 0;
};

struct WrCensusResult {
    ExperimentConfig cfg;
    std::vector<SampleRecord> records;
    long full_rank_count = 0;
    long discarded_count = 0;  // samples that never reached full rank
    long wr_count = 0;
    long wr_reverified_count = 0;
};

// tau-orders of orbit lattices of seeded box vectors; mode must be `orbit`
RankCensusResult rank_census(const ExperimentConfig& cfg);

// well-roundedness frequency among full-rank tau-invariant samples; every
// WR-flagged sample is re-verified through the independent box enumeration
WrCensusResult wr_census(const ExperimentConfig& cfg);

// ceil(n / o_generic) - 1: the number of forced norm-coincidence equations;
// zero exactly for n-cycles
int wr_equation_count(const Permutation& tau);

// CSV with the fixed header
//   sample_index,tau_order,full_rank,wr,minima_sq,det_sq,generators
// minima_sq entries joined with '|'; generators as "(a b c);(d e f)".
// Identical configs produce byte-identical output.
std::string records_to_csv(const std::vector<SampleRecord>& records);

Json rank_census_summary(const RankCensusResult& result);
Json wr_census_summary(const WrCensusResult& result);

}  // namespace permlat
