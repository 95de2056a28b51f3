#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "itea/bitvec.hpp"

namespace itea {

// Weights and selection thresholds are exact rationals; every identity
// about them (e.g. the weight sum equals lambda) holds with no rounding.
using Rational = boost::rational<long long>;

struct SelectionScheme {
    long lambda = 1;
    long mu = 1;

    Rational truncation_quantile() const { return Rational(mu, lambda); }

    // Throws std::invalid_argument unless 1 <= mu <= lambda.
    void validate() const;
};

// Result of ranking one population by fitness, descending.
struct RankedPopulation {
    // sigma[j] = original index of the j-th best individual. Stable: ties
    // keep their sampling order.
    std::vector<std::size_t> sigma;
    // Per original index: number of strictly better individuals, and
    // number of better-or-equal individuals.
    std::vector<std::size_t> rank_strict;
    std::vector<std::size_t> rank_weak;
    // Original indices of the strictly-better-than-cutoff group and of the
    // tied group straddling the cutoff (empty when the cutoff is clean).
    std::vector<std::size_t> k1;
    std::vector<std::size_t> k2;
    // Fractional weight of the straddling group, as c_num/c_den; both are
    // zero when k2 is empty.
    long long c_num = 0;
    long long c_den = 0;

    Rational tie_coefficient() const {
        return k2.empty() ? Rational(0) : Rational(c_num, c_den);
    }
};

RankedPopulation rank(std::span<const double> fitness, const SelectionScheme& scheme);

// Selection weight of each individual; depends on fitness only through
// the ranking. Sums to lambda exactly.
std::vector<Rational> selection_weights(const RankedPopulation& ranked,
                                        const SelectionScheme& scheme);

// Distribution-level selection weight of a single mask under standard bit
// mutation with rate p and truncation quantile mu/lambda, evaluated by
// enumerating all 2^n masks. Intended as a ground-truth check for the
// rank-based weights; enforces n <= 20.
double exact_weight_oracle(const BitVector& u,
                           const std::function<double(const BitVector&)>& g,
                           double p,
                           const SelectionScheme& scheme);

} // namespace itea
