#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xover/genome.hpp"

namespace xover {

/// Cut points k_1 <= ... <= k_n in [0, length]. Segment (k_i, k_{i+1}] of the
/// first child comes from the first parent when i is even, with implicit
/// k_0 = 0 and k_{n+1} = length. Repeated cuts are allowed.
class CutVector {
public:
    explicit CutVector(std::vector<std::size_t> cuts);

    [[nodiscard]] const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }
    [[nodiscard]] std::size_t size() const noexcept { return cuts_.size(); }

    /// Throws std::invalid_argument if any cut exceeds `length`.
    void validate(std::size_t length) const;

private:
    std::vector<std::size_t> cuts_;
};

/// Which parent each position is inherited from: `a` = first, `b` = second.
/// Bit p-1 of `from_second` is set when position p carries `b`.
class InheritanceMask {
public:
    InheritanceMask(std::size_t length, std::uint64_t from_second);

    static InheritanceMask parse(std::string_view word);
    static InheritanceMask from_cuts(const CutVector& cuts, std::size_t length);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::uint64_t from_second() const noexcept { return from_second_; }
    [[nodiscard]] std::size_t alternations() const noexcept;
    [[nodiscard]] std::string word() const;

    auto operator<=>(const InheritanceMask&) const = default;

private:
    std::size_t length_;
    std::uint64_t from_second_;
};

/// Child that copies `first` where the mask says `a` and `second` where it says `b`.
Genome recombine(const Genome& first, const Genome& second, const InheritanceMask& mask);

/// One n-points crossover: returns both children.
std::pair<Genome, Genome> crossover_apply(const Genome& x, const Genome& y, const CutVector& cuts);

/// Every word over {a, b} of length `length` with at most `n` alternations,
/// in increasing order of `from_second`. Requires 1 <= n <= length - 1.
std::vector<InheritanceMask> enumerate_masks(std::size_t length, std::size_t n);

/// Number of words enumerate_masks returns: 2 * sum_{j <= n} C(length - 1, j).
std::size_t mask_count(std::size_t length, std::size_t n);

/// True iff one n-points crossover maps the parent pair (x, y) to (x2, y2),
/// in either child order.
bool individuals_related(const Genome& x, const Genome& y, const Genome& x2, const Genome& y2,
                         std::size_t n);

/// Every genome producible by one n-points crossover of two (not necessarily
/// distinct) members of `population`. Contains `population`.
Population offspring_pool(const Population& population, std::size_t n);

/// True iff every member of `target` is in offspring_pool(source, n).
bool populations_related(const Population& source, const Population& target, std::size_t n);

/// Throws unless 1 <= n <= length - 1.
void require_crossover_points(std::size_t length, std::size_t n);

} // namespace xover
