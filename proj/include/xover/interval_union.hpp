#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xover {

/// Closed interval [first, last] of 1-based positions.
struct Interval {
    std::size_t first;
    std::size_t last;

    auto operator<=>(const Interval&) const = default;
};

/// A non-empty subset of [1, length] held in canonical form: its maximal runs,
/// sorted, pairwise separated by at least one missing position. Lengths up to
/// 64 are supported; the set is stored as a bitmask (bit p-1 <-> position p).
class IntervalUnion {
public:
    static IntervalUnion from_mask(std::uint64_t mask, std::size_t length);
    static IntervalUnion from_intervals(std::span<const Interval> intervals, std::size_t length);
    /// Parses the debug form "[i,j]+[i,j]+...". Overlapping or adjacent
    /// intervals are merged.
    static IntervalUnion parse(std::string_view text, std::size_t length);

    [[nodiscard]] std::uint64_t mask() const noexcept { return mask_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::vector<Interval> components() const;
    [[nodiscard]] std::size_t component_count() const noexcept;
    [[nodiscard]] std::size_t cardinality() const noexcept;
    [[nodiscard]] bool contains(std::size_t position) const noexcept;
    [[nodiscard]] bool is_subset_of(const IntervalUnion& other) const noexcept;
    [[nodiscard]] bool is_full() const noexcept;

    /// "[1,3]+[5,5]"
    [[nodiscard]] std::string to_string() const;

    auto operator<=>(const IntervalUnion&) const = default;

private:
    IntervalUnion(std::uint64_t mask, std::size_t length)
        : mask_(mask)
        , length_(length)
    { }

    std::uint64_t mask_;
    std::size_t length_;
};

/// Canonical decomposition of a set of positions into maximal runs.
IntervalUnion canonicalize(std::span<const std::size_t> positions, std::size_t length);

/// Minimum number of a/b switches over all words that put `a` on every
/// position of A \ B and `b` on every position of B \ A.
std::size_t alternating_number(const IntervalUnion& a, const IntervalUnion& b);

} // namespace xover
