#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "itea/bitvec.hpp"

namespace itea {

long one_max(const BitVector& x);

long leading_ones(const BitVector& x);

struct Problem {
    std::string name;
    std::size_t n = 0;
    double max_value = 0.0;
    std::function<double(const BitVector&)> eval;
};

// Known names: "onemax", "leadingones". Throws std::invalid_argument
// otherwise or when n == 0.
Problem make_problem(const std::string& name, std::size_t n);

const std::vector<std::string>& problem_names();

} // namespace itea
