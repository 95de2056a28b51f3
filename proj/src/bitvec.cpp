#include "itea/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace itea {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

std::size_t BitVector::hamming_weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool BitVector::operator<(const BitVector& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("bit vector lengths differ");
    for (std::size_t i = 0; i < n_; ++i) {
        const bool a = get(i), b = other.get(i);
        if (a != b) return b;
    }
    return false;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("bit vector lengths differ");
    BitVector out(a.n_);
    for (std::size_t j = 0; j < a.words_.size(); ++j)
        out.words_[j] = a.words_[j] ^ b.words_[j];
    return out;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
    return (a ^ b).hamming_weight();
}

BitVector sample_uniform(std::size_t n, Rng& rng) {
    BitVector v(n);
    for (std::uint64_t& w : v.words_)
        w = rng.next_u64();
    if (n % 64 != 0 && !v.words_.empty())
        v.words_.back() &= ~std::uint64_t{0} >> (64 - n % 64);
    return v;
}

BitVector sample_fixed_weight(std::size_t n, std::size_t w, Rng& rng) {
    if (w > n)
        throw std::invalid_argument("weight exceeds length");
    // Partial Fisher-Yates over bit positions; the first w slots land
    // uniformly on a w-subset.
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[i] = static_cast<std::uint32_t>(i);
    BitVector v(n);
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pos[i], pos[j]);
        v.set(pos[i], true);
    }
    return v;
}

} // namespace itea
