#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "itea/bitvec.hpp"
#include "itea/model.hpp"
#include "itea/rng.hpp"
#include "itea/selection.hpp"

namespace itea {

// One generation's worth of sampled material, ranked and ready for the
// update rules. masks[k] xor center == offspring[k] for all k.
struct SampledGeneration {
    std::vector<BitVector> masks;
    std::vector<BitVector> offspring;
    std::vector<double> fitness;
    RankedPopulation ranked;
};

// Builds offspring from center and masks, evaluates, ranks.
SampledGeneration make_generation(const BitVector& center,
                                  std::vector<BitVector> masks,
                                  const std::function<double(const BitVector&)>& eval,
                                  const SelectionScheme& scheme);

// Weighted mean mask weight over n: (1/lambda) sum_k W_k |u_k| / n,
// computed exactly. Always in [0, 1].
Rational igo_estimate(const SampledGeneration& gen,
                      const SelectionScheme& scheme,
                      std::size_t n);

// Relaxed rate step p + alpha (p_hat - p), clamped to the state's bounds.
double igo_update(const RateState& state, double p_hat, double alpha);

// Maximum-likelihood center: per bit, the weighted-majority offspring
// value when p < 1/2, its complement when p > 1/2, and a fresh coin on
// exact ties or when p == 1/2. All comparisons are exact.
BitVector ml_update(const SampledGeneration& gen,
                    const SelectionScheme& scheme,
                    double p,
                    Rng& rng);

// Restricted variant: moves the center by at most one bit. Flips the
// (uniformly chosen) best single bit only when that strictly improves
// the weighted likelihood; otherwise keeps the center.
BitVector local_ml_update(const SampledGeneration& gen,
                          const SelectionScheme& scheme,
                          const BitVector& center,
                          double p,
                          Rng& rng);

// Plus selection against the incumbent; offspring wins ties.
BitVector elitist_replacement(const BitVector& center,
                              double center_fitness,
                              const SampledGeneration& gen);

// Comma selection: best offspring, unconditionally.
BitVector comma_replacement(const SampledGeneration& gen);

} // namespace itea
