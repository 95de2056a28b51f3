#include "itea/problems.hpp"

#include <bit>
#include <stdexcept>

namespace itea {

long one_max(const BitVector& x) {
    return static_cast<long>(x.hamming_weight());
}

long leading_ones(const BitVector& x) {
    std::size_t count = 0;
    for (std::uint64_t w : x.words()) {
        const int ones = std::countr_one(w);
        count += static_cast<std::size_t>(ones);
        if (ones < 64) break;
    }
    if (count > x.size()) count = x.size();
    return static_cast<long>(count);
}

Problem make_problem(const std::string& name, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("problem size must be positive");
    Problem p;
    p.name = name;
    p.n = n;
    p.max_value = static_cast<double>(n);
    if (name == "onemax")
        p.eval = [](const BitVector& x) { return static_cast<double>(one_max(x)); };
    else if (name == "leadingones")
        p.eval = [](const BitVector& x) { return static_cast<double>(leading_ones(x)); };
    else
        throw std::invalid_argument("unknown problem: " + name);
    return p;
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {"onemax", "leadingones"};
    return names;
}

} // namespace itea
