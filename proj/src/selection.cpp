#include "itea/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace itea {

void SelectionScheme::validate() const {
    if (lambda < 1)
        throw std::invalid_argument("lambda must be at least 1");
    if (mu < 1 || mu > lambda)
        throw std::invalid_argument("mu must satisfy 1 <= mu <= lambda");
}

RankedPopulation rank(std::span<const double> fitness, const SelectionScheme& scheme) {
    scheme.validate();
    const std::size_t lambda = static_cast<std::size_t>(scheme.lambda);
    if (fitness.size() != lambda)
        throw std::invalid_argument("fitness vector size must equal lambda");
    const std::size_t mu = static_cast<std::size_t>(scheme.mu);

    RankedPopulation out;
    out.sigma.resize(lambda);
    std::iota(out.sigma.begin(), out.sigma.end(), std::size_t{0});
    std::stable_sort(out.sigma.begin(), out.sigma.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });

    out.rank_strict.resize(lambda);
    out.rank_weak.resize(lambda);
    std::size_t start = 0;
    while (start < lambda) {
        std::size_t end = start + 1;
        while (end < lambda && fitness[out.sigma[end]] == fitness[out.sigma[start]])
            ++end;
        for (std::size_t j = start; j < end; ++j) {
            out.rank_strict[out.sigma[j]] = start;
            out.rank_weak[out.sigma[j]] = end;
        }
        // The tied class containing the cutoff position straddles it only
        // when it extends past mu.
        if (start < mu && end > mu) {
            out.k2.assign(out.sigma.begin() + static_cast<std::ptrdiff_t>(start),
                          out.sigma.begin() + static_cast<std::ptrdiff_t>(end));
            out.c_num = static_cast<long long>(mu - start);
            out.c_den = static_cast<long long>(end - start);
        }
        start = end;
    }

    const std::size_t k1_count = out.k2.empty() ? mu : mu - static_cast<std::size_t>(out.c_num);
    out.k1.assign(out.sigma.begin(), out.sigma.begin() + static_cast<std::ptrdiff_t>(k1_count));
    return out;
}

std::vector<Rational> selection_weights(const RankedPopulation& ranked,
                                        const SelectionScheme& scheme) {
    std::vector<Rational> w(static_cast<std::size_t>(scheme.lambda), Rational(0));
    const Rational full(scheme.lambda, scheme.mu);
    for (std::size_t k : ranked.k1)
        w[k] = full;
    if (!ranked.k2.empty()) {
        const Rational tied = ranked.tie_coefficient() * full;
        for (std::size_t k : ranked.k2)
            w[k] = tied;
    }
    return w;
}

double exact_weight_oracle(const BitVector& u,
                           const std::function<double(const BitVector&)>& g,
                           double p,
                           const SelectionScheme& scheme) {
    scheme.validate();
    const std::size_t n = u.size();
    if (n > 20)
        throw std::invalid_argument("oracle enumeration limited to n <= 20");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("p must lie in [0, 1]");

    // Mask mass by weight under rate p.
    std::vector<double> mass_by_weight(n + 1);
    for (std::size_t w = 0; w <= n; ++w)
        mass_by_weight[w] = std::pow(p, static_cast<double>(w)) *
                            std::pow(1.0 - p, static_cast<double>(n - w));

    const double gu = g(u);
    double q_strict = 0.0; // mass strictly better than u
    double q_weak = 0.0;   // mass better or equal
    BitVector v(n);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        for (std::size_t i = 0; i < n; ++i)
            v.set(i, (code >> i) & 1u);
        const double gv = g(v);
        const double mass = mass_by_weight[v.hamming_weight()];
        if (gv > gu) q_strict += mass;
        if (gv >= gu) q_weak += mass;
    }

    const double q0 = static_cast<double>(scheme.mu) / static_cast<double>(scheme.lambda);
    return (std::min(q0, q_weak) - std::min(q0, q_strict)) / (q0 * (q_weak - q_strict));
}

} // namespace itea
