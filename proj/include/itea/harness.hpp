#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "itea/algorithms.hpp"
#include "itea/problems.hpp"
#include "itea/run_record.hpp"

namespace itea {

struct RunDigest {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    bool success = false;
    std::uint64_t runtime = 0;
};

struct CampaignSummary {
    std::uint64_t runs = 0;
    std::uint64_t success_count = 0;
    // Statistics cover successful runs only.
    double mean_runtime = 0.0;
    double stddev_runtime = 0.0; // sample, divisor success_count - 1
    bool stddev_defined = false; // false when fewer than 2 successes
    bool degraded = false;       // true when any run failed
    std::vector<RunDigest> per_run;
};

struct CampaignConfig {
    Hyperparameters hp;
    std::string function;
    std::size_t n = 0;
    std::uint64_t runs = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
};

// Executes `runs` independent runs; run i gets seed derive_seed(master, i),
// so results never depend on scheduling. jobs > 1 fans runs out across
// threads with aggregation identical to sequential execution.
CampaignSummary campaign(const Hyperparameters& hp, const Problem& problem,
                         std::uint64_t runs, std::uint64_t budget,
                         std::uint64_t master_seed, int jobs = 1);

struct StaticSearchResult {
    BitVector center;
    std::vector<TraceRow> trace;
    // Exact rate estimate of iteration t at p_hat[t-1], regardless of
    // trace subsampling.
    std::vector<double> p_hat;
};

// Rate adaptation with the center frozen at a fixed-weight sample; the
// center update is disabled, only the rate moves.
StaticSearchResult static_search(const Hyperparameters& hp, const Problem& problem,
                                 std::size_t initial_weight, std::uint64_t iterations,
                                 std::uint64_t seed, std::uint64_t trace_every = 1);

// 10^4 n for onemax, 10^2 n^2 for leadingones.
std::uint64_t default_budget(const Problem& problem);

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);
void write_runs_csv(std::ostream& os, const CampaignSummary& summary);
void write_summary_json(std::ostream& os, const CampaignConfig& config,
                        const CampaignSummary& summary);
void write_run_json(std::ostream& os, const RunRecord& record);
void write_static_json(std::ostream& os, const CampaignConfig& config,
                       std::size_t initial_weight, std::uint64_t iterations,
                       const StaticSearchResult& result);

} // namespace itea
