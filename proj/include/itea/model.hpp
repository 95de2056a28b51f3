#pragma once

#include <cstddef>

#include "itea/bitvec.hpp"
#include "itea/rng.hpp"

namespace itea {

// Natural parameter of the Bernoulli rate. Throws unless 0 < p < 1.
double logit(double p);

// Inverse of logit; well defined for all finite theta and +-infinity.
double expit(double theta);

// Mutation-rate state carried by the algorithms. p stays inside
// [p_min, p_max] at all times.
struct RateState {
    double p = 0.0;
    double p_min = 0.0;
    double p_max = 1.0;
};

double clamp_rate(const RateState& state, double p_new);

// Standard bit mutation mask: every bit set independently with
// probability p. Consumes exactly n draws from the stream regardless
// of p, which keeps seeded runs comparable across rates.
BitVector sample_mask(std::size_t n, double p, Rng& rng);

} // namespace itea
