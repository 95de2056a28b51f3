#include "itea/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include <json.hpp>

#include "itea/model.hpp"
#include "itea/rng.hpp"

namespace itea {

CampaignSummary campaign(const Hyperparameters& hp, const Problem& problem,
                         std::uint64_t runs, std::uint64_t budget,
                         std::uint64_t master_seed, int jobs) {
    hp.validate(problem.n);
    if (runs < 1)
        throw std::invalid_argument("runs must be at least 1");

    std::vector<RunRecord> records(runs);
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= runs) break;
            records[i] = run(hp, problem, budget, derive_seed(master_seed, i));
        }
    };
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }

    CampaignSummary s;
    s.runs = runs;
    s.per_run.reserve(runs);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < runs; ++i) {
        const RunRecord& r = records[i];
        s.per_run.push_back({i, r.metadata.seed, r.success, r.runtime});
        if (r.success) {
            ++s.success_count;
            sum += static_cast<double>(r.runtime);
        } else {
            s.degraded = true;
        }
    }
    if (s.success_count > 0)
        s.mean_runtime = sum / static_cast<double>(s.success_count);
    if (s.success_count > 1) {
        double ss = 0.0;
        for (const RunDigest& d : s.per_run) {
            if (!d.success) continue;
            const double dev = static_cast<double>(d.runtime) - s.mean_runtime;
            ss += dev * dev;
        }
        s.stddev_runtime = std::sqrt(ss / static_cast<double>(s.success_count - 1));
        s.stddev_defined = true;
    }
    return s;
}

namespace {

double trace_theta(double p) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    return std::log(p / (1.0 - p));
}

TraceRow static_row(const AlgorithmState& st, double best) {
    TraceRow row;
    row.iteration = st.iteration;
    row.evaluations = st.evaluations;
    row.best_fitness = best;
    row.p = st.rate.p;
    row.theta = trace_theta(st.rate.p);
    return row;
}

} // namespace

StaticSearchResult static_search(const Hyperparameters& hp, const Problem& problem,
                                 std::size_t initial_weight, std::uint64_t iterations,
                                 std::uint64_t seed, std::uint64_t trace_every) {
    Hyperparameters frozen = hp;
    frozen.center_update_enabled = false;
    frozen.validate(problem.n);
    if (initial_weight > problem.n)
        throw std::invalid_argument("initial weight must not exceed n");
    if (trace_every < 1) trace_every = 1;

    Rng rng(seed);
    CountingEvaluator counter(problem);
    const FitnessFn f = [&counter](const BitVector& x) { return counter(x); };

    AlgorithmState st;
    st.center = sample_fixed_weight(problem.n, initial_weight, rng);
    st.f_center = f(st.center);
    st.rate.p = frozen.p0;
    st.rate.p_min = frozen.p_min;
    st.rate.p_max = frozen.p_max;
    st.evaluations = 1;

    StaticSearchResult out;
    out.center = st.center;
    out.p_hat.reserve(iterations);
    out.trace.push_back(static_row(st, counter.best()));
    for (std::uint64_t t = 0; t < iterations; ++t) {
        st = step_it_ea(st, frozen, f, rng);
        out.p_hat.push_back(st.p_hat);
        if (st.iteration % trace_every == 0)
            out.trace.push_back(static_row(st, counter.best()));
    }
    if (out.trace.back().iteration != st.iteration)
        out.trace.push_back(static_row(st, counter.best()));
    return out;
}

std::uint64_t default_budget(const Problem& problem) {
    const std::uint64_t n = problem.n;
    if (problem.name == "leadingones")
        return 100 * n * n;
    return 10000 * n;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    os << "iteration,evaluations,best_fitness,p,theta\n";
    for (const TraceRow& r : rows)
        os << r.iteration << ',' << r.evaluations << ',' << fmt(r.best_fitness)
           << ',' << fmt(r.p) << ',' << fmt(r.theta) << '\n';
}

void write_runs_csv(std::ostream& os, const CampaignSummary& summary) {
    os << "run,seed,success,runtime\n";
    for (const RunDigest& d : summary.per_run)
        os << d.index << ',' << d.seed << ',' << (d.success ? 1 : 0) << ','
           << d.runtime << '\n';
}

void write_summary_json(std::ostream& os, const CampaignConfig& config,
                        const CampaignSummary& summary) {
    nlohmann::ordered_json j;
    j["algorithm"] = variant_name(config.hp.variant);
    j["function"] = config.function;
    j["n"] = config.n;
    j["lambda"] = config.hp.lambda;
    j["mu"] = config.hp.mu;
    j["alpha"] = config.hp.alpha;
    j["p0"] = config.hp.p0;
    j["p_min"] = config.hp.p_min;
    j["p_max"] = config.hp.p_max;
    j["runs"] = summary.runs;
    j["success_count"] = summary.success_count;
    j["mean_runtime"] = summary.mean_runtime;
    j["stddev_runtime"] = summary.stddev_runtime;
    j["seed"] = config.seed;
    os << j.dump(2) << '\n';
}

void write_run_json(std::ostream& os, const RunRecord& record) {
    const RunMetadata& m = record.metadata;
    nlohmann::ordered_json j;
    j["algorithm"] = m.algorithm;
    j["function"] = m.function;
    j["n"] = m.n;
    j["lambda"] = m.lambda;
    j["mu"] = m.mu;
    j["alpha"] = m.alpha;
    j["p0"] = m.p0;
    j["p_min"] = m.p_min;
    j["p_max"] = m.p_max;
    j["budget"] = m.budget;
    j["seed"] = m.seed;
    if (m.algorithm == "two_rate") {
        j["strength_min"] = m.strength_min;
        j["strength_max"] = m.strength_max;
    }
    j["success"] = record.success;
    j["runtime"] = record.runtime;
    j["evaluations"] = record.evaluations;
    j["iterations"] = record.iterations;
    os << j.dump(2) << '\n';
}

void write_static_json(std::ostream& os, const CampaignConfig& config,
                       std::size_t initial_weight, std::uint64_t iterations,
                       const StaticSearchResult& result) {
    nlohmann::ordered_json j;
    j["function"] = config.function;
    j["n"] = config.n;
    j["initial_weight"] = initial_weight;
    j["iterations"] = iterations;
    j["lambda"] = config.hp.lambda;
    j["mu"] = config.hp.mu;
    j["alpha"] = config.hp.alpha;
    j["p0"] = config.hp.p0;
    j["p_min"] = config.hp.p_min;
    j["p_max"] = config.hp.p_max;
    j["seed"] = config.seed;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const TraceRow& r : result.trace) {
        nlohmann::ordered_json row;
        row["iteration"] = r.iteration;
        row["evaluations"] = r.evaluations;
        row["best_fitness"] = r.best_fitness;
        row["p"] = r.p;
        row["theta"] = r.theta;
        rows.push_back(std::move(row));
    }
    j["trace"] = std::move(rows);
    os << j.dump(2) << '\n';
}

} // namespace itea
