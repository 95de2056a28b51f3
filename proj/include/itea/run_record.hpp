#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace itea {

// Everything needed to reproduce a single run.
struct RunMetadata {
    std::string algorithm;
    std::string function;
    std::size_t n = 0;
    long lambda = 1;
    long mu = 1;
    double p0 = 0.0;
    double alpha = 0.0;
    double p_min = 0.0;
    double p_max = 1.0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    // Strength bounds of the self-adjusting baseline; zero when unused.
    double strength_min = 0.0;
    double strength_max = 0.0;
};

struct TraceRow {
    std::uint64_t iteration = 0;
    std::uint64_t evaluations = 0;
    double best_fitness = 0.0;
    double p = 0.0;
    double theta = 0.0;
};

struct RunRecord {
    RunMetadata metadata;
    bool success = false;
    // Evaluations consumed when the optimum was first evaluated; equals
    // total evaluations for unsuccessful runs.
    std::uint64_t runtime = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t iterations = 0;
    std::vector<TraceRow> trace;
};

} // namespace itea
