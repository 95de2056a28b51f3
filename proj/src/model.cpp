#include "itea/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itea {

double logit(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("logit requires 0 < p < 1");
    return std::log(p / (1.0 - p));
}

double expit(double theta) {
    return 1.0 / (1.0 + std::exp(-theta));
}

double clamp_rate(const RateState& state, double p_new) {
    return std::min(state.p_max, std::max(state.p_min, p_new));
}

BitVector sample_mask(std::size_t n, double p, Rng& rng) {
    BitVector u(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next_double() < p) u.set(i, true);
    return u;
}

} // namespace itea
