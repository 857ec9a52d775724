#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace vlcsec {

using Rng = std::mt19937_64;

// Seed for an independent stream identified by (master, keys...). Results
// depend only on the key tuple, never on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(master),
                                     static_cast<std::uint32_t>(master >> 32)};
    for (auto k : keys) {
        words.push_back(static_cast<std::uint32_t>(k));
        words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

template <class Container>
const auto& pick_uniform(const Container& c, Rng& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, c.size() - 1);
    return c[dist(rng)];
}

} // namespace vlcsec
