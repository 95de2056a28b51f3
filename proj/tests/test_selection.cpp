#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "itea/problems.hpp"
#include "itea/rng.hpp"
#include "itea/selection.hpp"

using namespace itea;

TEST_CASE("scheme validation") {
    CHECK_THROWS_AS((SelectionScheme{0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SelectionScheme{4, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((SelectionScheme{4, 5}.validate()), std::invalid_argument);
    CHECK_NOTHROW((SelectionScheme{4, 4}.validate()));
    CHECK(SelectionScheme{8, 2}.truncation_quantile() == Rational(1, 4));
}

TEST_CASE("rank with a tie class straddling the cutoff") {
    const std::vector<double> f = {3, 2, 2, 1};
    const RankedPopulation r = rank(f, SelectionScheme{4, 2});
    CHECK(r.sigma == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(r.rank_strict == std::vector<std::size_t>{0, 1, 1, 3});
    CHECK(r.rank_weak == std::vector<std::size_t>{1, 3, 3, 4});
    CHECK(r.k1 == std::vector<std::size_t>{0});
    CHECK(r.k2 == std::vector<std::size_t>{1, 2});
    CHECK(r.c_num == 1);
    CHECK(r.c_den == 2);
    CHECK(r.tie_coefficient() == Rational(1, 2));
}

TEST_CASE("rank with all fitnesses equal") {
    const std::vector<double> f = {5, 5, 5, 5};
    const RankedPopulation r = rank(f, SelectionScheme{4, 2});
    CHECK(r.k1.empty());
    CHECK(r.k2 == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(r.c_num == 2);
    CHECK(r.c_den == 4);
    CHECK(r.tie_coefficient() == Rational(1, 2));

    // mu = lambda leaves nothing below the cutoff
    const RankedPopulation full = rank(f, SelectionScheme{4, 4});
    CHECK(full.k2.empty());
    CHECK(full.k1.size() == 4);
}

TEST_CASE("rank with a clean cutoff") {
    const std::vector<double> f = {4, 3, 2, 1};
    const RankedPopulation r = rank(f, SelectionScheme{4, 2});
    CHECK(r.k1 == std::vector<std::size_t>{0, 1});
    CHECK(r.k2.empty());
    CHECK(r.c_num == 0);
    CHECK(r.c_den == 0);
    CHECK(r.tie_coefficient() == Rational(0));
}

TEST_CASE("rank is stable within tie classes") {
    const std::vector<double> f = {1, 7, 7, 7, 0};
    const RankedPopulation r = rank(f, SelectionScheme{5, 2});
    CHECK(r.sigma == std::vector<std::size_t>{1, 2, 3, 0, 4});
    CHECK(r.k2 == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("selection weight examples") {
    const SelectionScheme s{4, 2};
    CHECK(selection_weights(rank(std::vector<double>{3, 2, 2, 1}, s), s) ==
          std::vector<Rational>{Rational(2), Rational(1), Rational(1), Rational(0)});
    CHECK(selection_weights(rank(std::vector<double>{5, 5, 5, 5}, s), s) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(selection_weights(rank(std::vector<double>{4, 3, 2, 1}, s), s) ==
          std::vector<Rational>{Rational(2), Rational(2), Rational(0), Rational(0)});
}

TEST_CASE("weights sum to lambda exactly") {
    Rng rng(555);
    for (int trial = 0; trial < 2000; ++trial) {
        const long lambda = 1 + long(rng.below(64));
        const long mu = 1 + long(rng.below(std::uint64_t(lambda)));
        std::vector<double> f(static_cast<std::size_t>(lambda));
        for (double& v : f)
            v = double(rng.below(5)); // few levels, so ties are common
        const SelectionScheme s{lambda, mu};
        const auto w = selection_weights(rank(f, s), s);
        const Rational sum = std::accumulate(w.begin(), w.end(), Rational(0));
        REQUIRE(sum == Rational(lambda));
    }
}

TEST_CASE("weights are invariant under monotone fitness transforms") {
    Rng rng(556);
    for (int trial = 0; trial < 300; ++trial) {
        const long lambda = 2 + long(rng.below(20));
        const long mu = 1 + long(rng.below(std::uint64_t(lambda)));
        std::vector<double> f(static_cast<std::size_t>(lambda)), g(f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            f[k] = double(rng.below(6)) - 2.0;
            g[k] = 3.0 * f[k] * f[k] * f[k] + 7.0; // strictly increasing in f
        }
        const SelectionScheme s{lambda, mu};
        CHECK(selection_weights(rank(f, s), s) == selection_weights(rank(g, s), s));
    }
}

TEST_CASE("oracle on the two-bit enumeration") {
    // center 00 translates the fitness to plain mask weight
    const auto g = [](const BitVector& v) { return double(one_max(v)); };
    const SelectionScheme s{2, 1}; // q0 = 1/2
    CHECK(exact_weight_oracle(BitVector::from_string("11"), g, 0.5, s) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(exact_weight_oracle(BitVector::from_string("00"), g, 0.5, s) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(exact_weight_oracle(BitVector::from_string("01"), g, 0.5, s) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(exact_weight_oracle(BitVector::from_string("10"), g, 0.5, s) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("oracle weights average to one under the mask distribution") {
    const auto g = [](const BitVector& v) {
        // a deliberately lumpy function with ties
        return double((one_max(v) * 2) % 5);
    };
    for (double p : {0.2, 0.5}) {
        for (const SelectionScheme s : {SelectionScheme{4, 1}, SelectionScheme{5, 3}}) {
            const std::size_t n = 4;
            double mean = 0.0;
            BitVector v(n);
            for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
                for (std::size_t i = 0; i < n; ++i)
                    v.set(i, (code >> i) & 1u);
                const double mass = std::pow(p, double(v.hamming_weight())) *
                                    std::pow(1.0 - p, double(n - v.hamming_weight()));
                mean += mass * exact_weight_oracle(v, g, p, s);
            }
            CHECK(mean == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("oracle rejects wide inputs") {
    const auto g = [](const BitVector& v) { return double(one_max(v)); };
    CHECK_THROWS_AS(exact_weight_oracle(BitVector(21), g, 0.3, SelectionScheme{2, 1}),
                    std::invalid_argument);
}
