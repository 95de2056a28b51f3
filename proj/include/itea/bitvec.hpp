#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "itea/rng.hpp"

namespace itea {

// Fixed-length bit vector, packed 64 bits per word, little-endian within
// each word (bit i of the vector lives at word i/64, bit i%64).
// Invariant: bits past the logical length are always zero, so equality
// and popcounts can work on whole words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    // Parses a string of '0'/'1', index 0 first. Throws on other characters.
    static BitVector from_string(std::string_view s);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        assert(i < n_);
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    void flip(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t hamming_weight() const;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    // Lexicographic by bit index; sizes must match.
    bool operator<(const BitVector& other) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;

    friend BitVector sample_uniform(std::size_t n, Rng& rng);
    friend BitVector operator^(const BitVector& a, const BitVector& b);
};

// Throws std::invalid_argument when sizes differ.
BitVector operator^(const BitVector& a, const BitVector& b);

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

// Each bit independently uniform.
BitVector sample_uniform(std::size_t n, Rng& rng);

// Uniform over vectors of exactly weight w. Throws when w > n.
BitVector sample_fixed_weight(std::size_t n, std::size_t w, Rng& rng);

} // namespace itea
