#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "xover/interval_union.hpp"

namespace xover {

/// All non-empty subsets of [1, length] with at most `max_components` maximal
/// runs, ordered by inclusion. Immutable after construction.
///
/// Elements are indexed 0..size()-1 in order of increasing cardinality, so
/// every element appears after all of its subsets.
class ScnPoset {
public:
    static constexpr std::uint32_t npos = ~std::uint32_t{0};

    ScnPoset(std::size_t length, std::size_t max_components);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::size_t max_components() const noexcept { return max_components_; }
    [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }

    [[nodiscard]] std::span<const std::uint64_t> masks() const noexcept { return masks_; }
    [[nodiscard]] std::uint64_t mask(std::size_t index) const { return masks_.at(index); }
    [[nodiscard]] IntervalUnion element(std::size_t index) const;

    [[nodiscard]] std::optional<std::size_t> index_of(std::uint64_t mask) const;
    [[nodiscard]] std::optional<std::size_t> index_of(const IntervalUnion& element) const;
    [[nodiscard]] std::size_t full_index() const noexcept { return full_index_; }

    /// Inclusion order.
    [[nodiscard]] bool less_equal(std::size_t lhs, std::size_t rhs) const;

    /// Index of lhs ∪ rhs when the union is an element and the pair's
    /// alternating number is at most max_components(); npos otherwise.
    /// Memoized in a flat table for small posets.
    [[nodiscard]] std::uint32_t crossover_join(std::size_t lhs, std::size_t rhs) const;

    /// Closed-form element count: sum_{j=1..n} C(length + 1, 2j).
    static std::size_t expected_size(std::size_t length, std::size_t max_components);

private:
    [[nodiscard]] std::uint32_t compute_join(std::size_t lhs, std::size_t rhs) const;
    [[nodiscard]] std::uint32_t lookup(std::uint64_t mask) const;

    std::size_t length_;
    std::size_t max_components_;
    std::vector<std::uint64_t> masks_;
    std::size_t full_index_ = 0;
    // Dense index for short lengths, hash map otherwise.
    std::vector<std::uint32_t> dense_index_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_index_;
    std::vector<std::uint32_t> join_table_;
};

/// Shared, cached poset for (length, n). Requires 1 <= n <= length.
std::shared_ptr<const ScnPoset> enumerate_scn(std::size_t length, std::size_t n);

} // namespace xover
