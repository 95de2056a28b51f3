#include <doctest.h>

#include <stdexcept>

#include "itea/problems.hpp"
#include "itea/rng.hpp"

using namespace itea;

TEST_CASE("one_max values") {
    CHECK(one_max(BitVector::from_string("1111")) == 4);
    CHECK(one_max(BitVector::from_string("0000")) == 0);
    CHECK(one_max(BitVector::from_string("1010")) == 2);
}

TEST_CASE("leading_ones values") {
    CHECK(leading_ones(BitVector::from_string("1101")) == 2);
    CHECK(leading_ones(BitVector::from_string("0111")) == 0);
    CHECK(leading_ones(BitVector::from_string("1111")) == 4);
    CHECK(leading_ones(BitVector::from_string(std::string(64, '1') + "011")) == 64);
    CHECK(leading_ones(BitVector::from_string(std::string(70, '1'))) == 70);
}

TEST_CASE("one_max permutation invariance, leading_ones sensitivity") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        BitVector x = sample_uniform(40, rng);
        BitVector y = x;
        // swap two positions
        const std::size_t i = rng.below(40), j = rng.below(40);
        const bool bi = y.get(i), bj = y.get(j);
        y.set(i, bj);
        y.set(j, bi);
        CHECK(one_max(x) == one_max(y));
    }
    CHECK(leading_ones(BitVector::from_string("110")) !=
          leading_ones(BitVector::from_string("011")));
}

TEST_CASE("both functions peak uniquely at all-ones") {
    const std::size_t n = 10;
    BitVector v(n);
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        for (std::size_t i = 0; i < n; ++i)
            v.set(i, (code >> i) & 1u);
        const bool all_ones = v.hamming_weight() == n;
        CHECK((one_max(v) == long(n)) == all_ones);
        CHECK((leading_ones(v) == long(n)) == all_ones);
        CHECK(one_max(v) <= long(n));
        CHECK(leading_ones(v) <= long(n));
    }
}

TEST_CASE("problem registry") {
    const Problem om = make_problem("onemax", 32);
    CHECK(om.max_value == 32.0);
    CHECK(om.eval(BitVector::from_string(std::string(32, '1'))) == 32.0);

    const Problem lo = make_problem("leadingones", 8);
    CHECK(lo.max_value == 8.0);
    CHECK(lo.eval(BitVector::from_string("10111111")) == 1.0);

    CHECK(problem_names() == std::vector<std::string>{"onemax", "leadingones"});
    CHECK_THROWS_AS(make_problem("jump", 8), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("onemax", 0), std::invalid_argument);
}
