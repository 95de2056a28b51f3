#include "itea/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "itea/selection.hpp"
#include "itea/update.hpp"

namespace itea {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::it: return "it";
        case Variant::it1: return "it1";
        case Variant::eit: return "eit";
        case Variant::neit: return "neit";
        case Variant::opl: return "opl";
        case Variant::two_rate: return "two_rate";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (Variant v : {Variant::it, Variant::it1, Variant::eit, Variant::neit,
                      Variant::opl, Variant::two_rate})
        if (name == variant_name(v)) return v;
    return std::nullopt;
}

const std::vector<std::string>& variant_names() {
    static const std::vector<std::string> names = {"it", "it1", "eit",
                                                   "neit", "opl", "two_rate"};
    return names;
}

void Hyperparameters::validate(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    if (lambda < 1)
        throw std::invalid_argument("lambda must be at least 1");
    if (mu < 1 || mu > lambda)
        throw std::invalid_argument("mu must satisfy 1 <= mu <= lambda");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    if (!(0.0 <= p_min && p_min <= p_max && p_max <= 1.0))
        throw std::invalid_argument("rate bounds must satisfy 0 <= p_min <= p_max <= 1");
    if (!(p_min <= p0 && p0 <= p_max))
        throw std::invalid_argument("p0 must lie in [p_min, p_max]");
    if (variant == Variant::two_rate) {
        if (lambda % 2 != 0)
            throw std::invalid_argument("two_rate requires an even lambda");
        if (n < 2)
            throw std::invalid_argument("two_rate requires n >= 2");
    }
}

double two_rate_next_strength(double r, bool best_in_high_half, bool use_winner,
                              bool double_on_random, double r_lo, double r_hi) {
    const bool doubling = use_winner ? best_in_high_half : double_on_random;
    const double next = doubling ? 2.0 * r : 0.5 * r;
    return std::min(r_hi, std::max(r_lo, next));
}

AlgorithmState init_state(std::size_t n, const Hyperparameters& hp,
                          const FitnessFn& f, Rng& rng) {
    AlgorithmState st;
    st.center = sample_uniform(n, rng);
    st.f_center = f(st.center);
    st.rate.p = hp.p0;
    st.rate.p_min = hp.p_min;
    st.rate.p_max = hp.p_max;
    if (hp.variant == Variant::two_rate) {
        st.strength = std::min(two_rate_strength_max(n),
                               std::max(two_rate_strength_min,
                                        hp.p0 * static_cast<double>(n)));
        st.rate.p = st.strength / static_cast<double>(n);
    }
    st.evaluations = 1;
    return st;
}

AlgorithmState step_it_ea(const AlgorithmState& state, const Hyperparameters& hp,
                          const FitnessFn& f, Rng& rng) {
    const std::size_t n = state.center.size();
    const SelectionScheme scheme{hp.lambda, hp.mu};

    std::vector<BitVector> masks;
    masks.reserve(static_cast<std::size_t>(hp.lambda));
    for (long k = 0; k < hp.lambda; ++k)
        masks.push_back(sample_mask(n, state.rate.p, rng));

    AlgorithmState next = state;
    SampledGeneration gen = make_generation(state.center, std::move(masks), f, scheme);
    next.evaluations += static_cast<std::uint64_t>(hp.lambda);

    if (hp.center_update_enabled) {
        switch (hp.variant) {
            case Variant::it:
                next.center = ml_update(gen, scheme, state.rate.p, rng);
                next.f_center = f(next.center);
                next.evaluations += 1;
                break;
            case Variant::it1:
                next.center = local_ml_update(gen, scheme, state.center,
                                              state.rate.p, rng);
                next.f_center = f(next.center);
                next.evaluations += 1;
                break;
            case Variant::eit: {
                const std::size_t best = gen.ranked.sigma[0];
                if (gen.fitness[best] >= state.f_center) {
                    next.center = gen.offspring[best];
                    next.f_center = gen.fitness[best];
                }
                break;
            }
            case Variant::neit: {
                const std::size_t best = gen.ranked.sigma[0];
                next.center = gen.offspring[best];
                next.f_center = gen.fitness[best];
                break;
            }
            default:
                throw std::logic_error("variant not handled by step_it_ea");
        }
    }

    next.p_hat = boost::rational_cast<double>(igo_estimate(gen, scheme, n));
    next.rate.p = igo_update(state.rate, next.p_hat, hp.alpha);
    next.iteration = state.iteration + 1;
    return next;
}

AlgorithmState step_opl_ea(const AlgorithmState& state, const Hyperparameters& hp,
                           const FitnessFn& f, Rng& rng) {
    const std::size_t n = state.center.size();
    const SelectionScheme scheme{hp.lambda, hp.mu};

    std::vector<BitVector> masks;
    masks.reserve(static_cast<std::size_t>(hp.lambda));
    for (long k = 0; k < hp.lambda; ++k)
        masks.push_back(sample_mask(n, state.rate.p, rng));

    AlgorithmState next = state;
    SampledGeneration gen = make_generation(state.center, std::move(masks), f, scheme);
    next.evaluations += static_cast<std::uint64_t>(hp.lambda);

    const std::size_t best = gen.ranked.sigma[0];
    if (gen.fitness[best] >= state.f_center) {
        next.center = gen.offspring[best];
        next.f_center = gen.fitness[best];
    }
    next.iteration = state.iteration + 1;
    return next;
}

AlgorithmState step_two_rate_ea(const AlgorithmState& state, const Hyperparameters& hp,
                                const FitnessFn& f, Rng& rng) {
    const std::size_t n = state.center.size();
    const SelectionScheme scheme{hp.lambda, hp.mu};
    const std::size_t half = static_cast<std::size_t>(hp.lambda) / 2;
    const double p_low = state.strength / (2.0 * static_cast<double>(n));
    const double p_high = 2.0 * state.strength / static_cast<double>(n);

    std::vector<BitVector> masks;
    masks.reserve(static_cast<std::size_t>(hp.lambda));
    for (std::size_t k = 0; k < static_cast<std::size_t>(hp.lambda); ++k)
        masks.push_back(sample_mask(n, k < half ? p_low : p_high, rng));

    AlgorithmState next = state;
    SampledGeneration gen = make_generation(state.center, std::move(masks), f, scheme);
    next.evaluations += static_cast<std::uint64_t>(hp.lambda);

    const std::size_t best = gen.ranked.sigma[0];
    if (gen.fitness[best] >= state.f_center) {
        next.center = gen.offspring[best];
        next.f_center = gen.fitness[best];
    }

    const bool use_winner = rng.coin();
    const bool double_on_random = use_winner ? false : rng.coin();
    next.strength = two_rate_next_strength(state.strength, best >= half, use_winner,
                                           double_on_random, two_rate_strength_min,
                                           two_rate_strength_max(n));
    next.rate.p = next.strength / static_cast<double>(n);
    next.iteration = state.iteration + 1;
    return next;
}

AlgorithmState step(const AlgorithmState& state, const Hyperparameters& hp,
                    const FitnessFn& f, Rng& rng) {
    switch (hp.variant) {
        case Variant::opl:
            return step_opl_ea(state, hp, f, rng);
        case Variant::two_rate:
            return step_two_rate_ea(state, hp, f, rng);
        default:
            return step_it_ea(state, hp, f, rng);
    }
}

CountingEvaluator::CountingEvaluator(const Problem& problem)
    : problem_(&problem), best_(-std::numeric_limits<double>::infinity()) {}

double CountingEvaluator::operator()(const BitVector& x) {
    ++count_;
    const double v = problem_->eval(x);
    if (v > best_) best_ = v;
    if (hit_at_ == 0 && v >= problem_->max_value) hit_at_ = count_;
    return v;
}

namespace {

double trace_theta(double p) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    return std::log(p / (1.0 - p));
}

TraceRow make_row(const AlgorithmState& st, const CountingEvaluator& counter) {
    TraceRow row;
    row.iteration = st.iteration;
    row.evaluations = st.evaluations;
    row.best_fitness = counter.best();
    row.p = st.rate.p;
    row.theta = trace_theta(st.rate.p);
    return row;
}

} // namespace

RunRecord run(const Hyperparameters& hp, const Problem& problem,
              std::uint64_t budget, std::uint64_t seed,
              const TraceOptions& trace) {
    hp.validate(problem.n);
    if (budget < 1)
        throw std::invalid_argument("budget must be at least 1");

    Rng rng(seed);
    CountingEvaluator counter(problem);
    const FitnessFn f = [&counter](const BitVector& x) { return counter(x); };

    AlgorithmState st = init_state(problem.n, hp, f, rng);

    RunRecord rec;
    rec.metadata.algorithm = variant_name(hp.variant);
    rec.metadata.function = problem.name;
    rec.metadata.n = problem.n;
    rec.metadata.lambda = hp.lambda;
    rec.metadata.mu = hp.mu;
    rec.metadata.p0 = hp.p0;
    rec.metadata.alpha = hp.alpha;
    rec.metadata.p_min = hp.p_min;
    rec.metadata.p_max = hp.p_max;
    rec.metadata.budget = budget;
    rec.metadata.seed = seed;
    if (hp.variant == Variant::two_rate) {
        rec.metadata.strength_min = two_rate_strength_min;
        rec.metadata.strength_max = two_rate_strength_max(problem.n);
    }

    if (trace.every > 0)
        rec.trace.push_back(make_row(st, counter));

    while (!counter.optimum_hit() && st.evaluations < budget) {
        st = step(st, hp, f, rng);
        if (trace.every > 0 && st.iteration % trace.every == 0)
            rec.trace.push_back(make_row(st, counter));
    }
    if (trace.every > 0 && rec.trace.back().iteration != st.iteration)
        rec.trace.push_back(make_row(st, counter));

    // A hit inside a population that overshot the budget does not count.
    rec.success = counter.optimum_hit() && counter.optimum_hit_at() <= budget;
    rec.runtime = rec.success ? counter.optimum_hit_at() : st.evaluations;
    rec.evaluations = st.evaluations;
    rec.iterations = st.iteration;
    return rec;
}

} // namespace itea
