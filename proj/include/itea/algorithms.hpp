#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itea/bitvec.hpp"
#include "itea/model.hpp"
#include "itea/problems.hpp"
#include "itea/rng.hpp"
#include "itea/run_record.hpp"

namespace itea {

enum class Variant { it, it1, eit, neit, opl, two_rate };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
const std::vector<std::string>& variant_names();

struct Hyperparameters {
    long lambda = 1;
    long mu = 1;
    double p0 = 0.0;
    double alpha = 0.0;
    double p_min = 0.0;
    double p_max = 1.0;
    Variant variant = Variant::eit;
    // false freezes the center so only the rate adapts (static search).
    bool center_update_enabled = true;

    // Throws std::invalid_argument on any violated invariant. n is needed
    // for the strength clamp of the self-adjusting baseline.
    void validate(std::size_t n) const;
};

struct AlgorithmState {
    BitVector center;
    double f_center = 0.0;
    RateState rate;
    // Mutation strength r of the two_rate baseline; rate.p mirrors r/n.
    double strength = 0.0;
    // Exact rate estimate from the most recent step, as a double.
    double p_hat = 0.0;
    std::uint64_t iteration = 0;
    std::uint64_t evaluations = 0;
};

// Strength clamp bounds of the two_rate baseline.
inline constexpr double two_rate_strength_min = 0.5;
inline double two_rate_strength_max(std::size_t n) { return static_cast<double>(n) / 4.0; }

// Pure decision rule for the next strength, exposed for direct testing.
double two_rate_next_strength(double r, bool best_in_high_half, bool use_winner,
                              bool double_on_random, double r_lo, double r_hi);

using FitnessFn = std::function<double(const BitVector&)>;

// Uniform random center, one evaluation, rate at p0.
AlgorithmState init_state(std::size_t n, const Hyperparameters& hp,
                          const FitnessFn& f, Rng& rng);

// One iteration of the selected variant. Every fitness call is counted in
// the returned state's evaluations.
AlgorithmState step(const AlgorithmState& state, const Hyperparameters& hp,
                    const FitnessFn& f, Rng& rng);

AlgorithmState step_it_ea(const AlgorithmState& state, const Hyperparameters& hp,
                          const FitnessFn& f, Rng& rng);
AlgorithmState step_opl_ea(const AlgorithmState& state, const Hyperparameters& hp,
                           const FitnessFn& f, Rng& rng);
AlgorithmState step_two_rate_ea(const AlgorithmState& state, const Hyperparameters& hp,
                                const FitnessFn& f, Rng& rng);

struct TraceOptions {
    // Record a trace row every this many iterations; 0 disables tracing.
    std::uint64_t every = 0;
};

// Fitness wrapper that counts evaluations and watches for the optimum.
class CountingEvaluator {
public:
    explicit CountingEvaluator(const Problem& problem);
    double operator()(const BitVector& x);
    std::uint64_t evaluations() const { return count_; }
    double best() const { return best_; }
    bool optimum_hit() const { return hit_at_ != 0; }
    std::uint64_t optimum_hit_at() const { return hit_at_; }

private:
    const Problem* problem_;
    std::uint64_t count_ = 0;
    double best_;
    std::uint64_t hit_at_ = 0;
};

// Runs until the problem's max_value is first evaluated or the budget is
// spent. A step begun within budget always completes its population, so
// total evaluations may overshoot by at most one population.
RunRecord run(const Hyperparameters& hp, const Problem& problem,
              std::uint64_t budget, std::uint64_t seed,
              const TraceOptions& trace = {});

} // namespace itea
