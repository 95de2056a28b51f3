#include "itea/update.hpp"

#include <stdexcept>

namespace itea {

SampledGeneration make_generation(const BitVector& center,
                                  std::vector<BitVector> masks,
                                  const std::function<double(const BitVector&)>& eval,
                                  const SelectionScheme& scheme) {
    SampledGeneration gen;
    gen.masks = std::move(masks);
    gen.offspring.reserve(gen.masks.size());
    gen.fitness.reserve(gen.masks.size());
    for (const BitVector& u : gen.masks) {
        gen.offspring.push_back(center ^ u);
        gen.fitness.push_back(eval(gen.offspring.back()));
    }
    gen.ranked = rank(gen.fitness, scheme);
    return gen;
}

Rational igo_estimate(const SampledGeneration& gen,
                      const SelectionScheme& scheme,
                      std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    long long s1 = 0;
    for (std::size_t k : gen.ranked.k1)
        s1 += static_cast<long long>(gen.masks[k].hamming_weight());
    const long long nn = static_cast<long long>(n);
    if (gen.ranked.k2.empty())
        return Rational(s1, scheme.mu * nn);
    long long s2 = 0;
    for (std::size_t k : gen.ranked.k2)
        s2 += static_cast<long long>(gen.masks[k].hamming_weight());
    return Rational(gen.ranked.c_den * s1 + gen.ranked.c_num * s2,
                    scheme.mu * nn * gen.ranked.c_den);
}

double igo_update(const RateState& state, double p_hat, double alpha) {
    return clamp_rate(state, state.p + alpha * (p_hat - state.p));
}

namespace {

int sign_of(long long v) { return (v > 0) - (v < 0); }

// Per-bit set counts over an index set, word-parallel.
void accumulate_bit_counts(const std::vector<BitVector>& vecs,
                           const std::vector<std::size_t>& indices,
                           std::vector<long long>& counts) {
    for (std::size_t k : indices) {
        const BitVector& v = vecs[k];
        for (std::size_t i = 0; i < v.size(); ++i)
            counts[i] += v.get(i);
    }
}

} // namespace

BitVector ml_update(const SampledGeneration& gen,
                    const SelectionScheme& scheme,
                    double p,
                    Rng& rng) {
    const std::size_t n = gen.offspring.empty() ? 0 : gen.offspring[0].size();
    BitVector x(n);
    // Direction of the likelihood gradient in each bit flips with the
    // sign of 1 - 2p; at p == 1/2 the likelihood is flat.
    const int tilt = (p < 0.5) ? 1 : (p > 0.5 ? -1 : 0);

    std::vector<long long> s1(n, 0), s2(n, 0);
    accumulate_bit_counts(gen.offspring, gen.ranked.k1, s1);
    accumulate_bit_counts(gen.offspring, gen.ranked.k2, s2);

    const long long mu = scheme.mu;
    const long long m2 = static_cast<long long>(gen.ranked.k2.size());
    const long long c_num = gen.ranked.c_num;
    for (std::size_t i = 0; i < n; ++i) {
        // Sign of (weighted ones fraction) - 1/2, cross-multiplied so the
        // comparison stays in integers.
        const long long margin = gen.ranked.k2.empty()
                                     ? 2 * s1[i] - mu
                                     : 2 * (m2 * s1[i] + c_num * s2[i]) - mu * m2;
        const int d = sign_of(margin) * tilt;
        if (d > 0)
            x.set(i, true);
        else if (d == 0)
            x.set(i, rng.coin());
    }
    return x;
}

BitVector local_ml_update(const SampledGeneration& gen,
                          const SelectionScheme& scheme,
                          const BitVector& center,
                          double p,
                          Rng& rng) {
    const std::size_t n = center.size();
    if (p == 0.5 || n == 0)
        return center;

    // N[i] / denom = weighted fraction of masks with bit i set.
    std::vector<long long> a1(n, 0), a2(n, 0);
    accumulate_bit_counts(gen.masks, gen.ranked.k1, a1);
    accumulate_bit_counts(gen.masks, gen.ranked.k2, a2);

    const long long c_num = gen.ranked.c_num;
    const long long c_den = gen.ranked.k2.empty() ? 1 : gen.ranked.c_den;
    const long long denom = scheme.mu * c_den;

    std::vector<long long> score(n);
    for (std::size_t i = 0; i < n; ++i)
        score[i] = c_den * a1[i] + c_num * a2[i];

    // For p < 1/2 a flip pays off only where the weighted fraction
    // exceeds 1/2, and the largest fraction pays most; mirrored for
    // p > 1/2.
    const bool want_max = p < 0.5;
    long long best = score[0];
    for (std::size_t i = 1; i < n; ++i)
        if (want_max ? score[i] > best : score[i] < best) best = score[i];

    const bool profitable = want_max ? (2 * best > denom) : (2 * best < denom);
    if (!profitable)
        return center;

    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (score[i] == best) ++count;
    std::uint64_t pick = rng.below(count);
    BitVector x = center;
    for (std::size_t i = 0; i < n; ++i) {
        if (score[i] != best) continue;
        if (pick == 0) {
            x.flip(i);
            break;
        }
        --pick;
    }
    return x;
}

BitVector elitist_replacement(const BitVector& center,
                              double center_fitness,
                              const SampledGeneration& gen) {
    const std::size_t best = gen.ranked.sigma[0];
    return gen.fitness[best] >= center_fitness ? gen.offspring[best] : center;
}

BitVector comma_replacement(const SampledGeneration& gen) {
    return gen.offspring[gen.ranked.sigma[0]];
}

} // namespace itea
