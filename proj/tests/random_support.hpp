#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xover/genome.hpp"

namespace xover::testing {

inline Genome random_genome(std::mt19937_64& rng, std::size_t length, std::size_t alphabet_size = 2)
{
    std::uniform_int_distribution<int> symbol(0, static_cast<int>(alphabet_size) - 1);
    std::vector<std::uint8_t> symbols(length);
    for (auto& s : symbols) {
        s = static_cast<std::uint8_t>(symbol(rng));
    }
    return Genome(std::move(symbols));
}

/// A population of `min_size`..`max_size` random draws (duplicates collapse).
inline Population random_population(std::mt19937_64& rng, std::size_t length, std::size_t min_size,
                                    std::size_t max_size, std::size_t alphabet_size = 2)
{
    std::uniform_int_distribution<std::size_t> size(min_size, max_size);
    Population p;
    const std::size_t draws = size(rng);
    for (std::size_t i = 0; i < draws; ++i) {
        p.insert(random_genome(rng, length, alphabet_size));
    }
    return p;
}

inline std::size_t random_in(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace xover::testing
