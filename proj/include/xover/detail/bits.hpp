#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

// Position p (1-based) of a length-l string maps to bit p-1 of a 64-bit word.
namespace xover::detail {

inline constexpr std::size_t kMaxMaskLength = 64;

constexpr std::uint64_t low_bits(std::size_t count) noexcept
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

constexpr std::uint64_t position_bit(std::size_t position) noexcept
{
    return std::uint64_t{1} << (position - 1);
}

/// Number of maximal runs of set bits.
constexpr std::size_t run_count(std::uint64_t mask) noexcept
{
    return static_cast<std::size_t>(std::popcount(mask & ~(mask << 1)));
}

/// Adjacent differing pairs in the first `length` bits of an inheritance word.
constexpr std::size_t word_alternations(std::uint64_t word, std::size_t length) noexcept
{
    if (length < 2) {
        return 0;
    }
    return static_cast<std::size_t>(std::popcount((word ^ (word >> 1)) & low_bits(length - 1)));
}

/// Minimum number of label switches of any word that puts label `a` on every
/// bit of `forced_a` and label `b` on every bit of `forced_b`. Free positions
/// copy their neighbour, so only the order of forced labels matters.
constexpr std::size_t forced_alternations(std::uint64_t forced_a, std::uint64_t forced_b) noexcept
{
    std::uint64_t forced = forced_a | forced_b;
    std::size_t switches = 0;
    int previous = -1;
    while (forced != 0) {
        const int bit = std::countr_zero(forced);
        const int label = static_cast<int>((forced_a >> bit) & 1U);
        if (previous >= 0 && label != previous) {
            ++switches;
        }
        previous = label;
        forced &= forced - 1;
    }
    return switches;
}

} // namespace xover::detail
