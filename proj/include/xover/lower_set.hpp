#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xover/genome.hpp"
#include "xover/scn_poset.hpp"

namespace xover {

/// A downward-closed subset of an SC_n poset, stored as a membership table
/// over the poset's element indices.
class LowerSet {
public:
    /// The empty lower set.
    explicit LowerSet(std::shared_ptr<const ScnPoset> poset);

    static LowerSet full(std::shared_ptr<const ScnPoset> poset);
    /// Smallest lower set containing every generator. Each generator must be
    /// a poset element index.
    static LowerSet down_closure(std::shared_ptr<const ScnPoset> poset, std::span<const std::size_t> generators);
    /// Every poset element contained in at least one of `masks` (arbitrary
    /// position sets, not necessarily poset elements).
    static LowerSet below_masks(std::shared_ptr<const ScnPoset> poset, std::span<const std::uint64_t> masks);
    /// Throws std::invalid_argument unless `members` is downward closed.
    static LowerSet from_members(std::shared_ptr<const ScnPoset> poset, std::span<const std::size_t> members);

    [[nodiscard]] const ScnPoset& poset() const noexcept { return *poset_; }
    [[nodiscard]] const std::shared_ptr<const ScnPoset>& poset_ptr() const noexcept { return poset_; }

    [[nodiscard]] bool contains(std::size_t index) const { return member_.at(index) != 0; }
    [[nodiscard]] bool contains(const IntervalUnion& element) const;
    [[nodiscard]] bool contains_full() const { return contains(poset_->full_index()); }
    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] bool empty() const noexcept { return count_ == 0; }
    /// Member indices in increasing order.
    [[nodiscard]] std::vector<std::size_t> members() const;

    /// One interval union per line, "[i,j]+[i,j]".
    [[nodiscard]] std::string dump() const;

    /// Adds the element and every poset element below it. Indices that were
    /// not already members are appended to `added` when it is non-null.
    void insert(std::size_t index, std::vector<std::size_t>* added = nullptr);

    bool operator==(const LowerSet& other) const;

private:
    std::shared_ptr<const ScnPoset> poset_;
    std::vector<std::uint8_t> member_;
    std::size_t count_ = 0;
};

/// r_x(P): poset elements A such that some member of P agrees with x on all of A.
LowerSet represent(const Genome& x, const Population& population, std::shared_ptr<const ScnPoset> poset);
LowerSet represent(const Genome& x, const Population& population, std::size_t n);

/// Poset indices of every B1 ∪ B2 in the poset with B1, B2 members of `lower`
/// and alternating number <= n, in increasing order. For n >= 2 this set need
/// not be downward closed.
std::vector<std::size_t> mu_image(const LowerSet& lower);

/// One application of the crossover operator on lower sets: the downward
/// closure of mu_image(lower). Contains `lower`.
LowerSet mu_step(const LowerSet& lower);

struct Saturation {
    /// Smallest k with [1, length] in mu^k(U), if it ever appears.
    std::optional<std::size_t> first_full;
    LowerSet fixed_point;
    /// Smallest t with mu^t(U) = mu^{t+1}(U).
    std::size_t iterations = 0;
};

Saturation mu_saturate(const LowerSet& lower);

/// Smallest k with [1, length] in mu^k(U), stopping as soon as it appears;
/// nullopt when the fixed point does not contain it. `iterations`, if given,
/// receives the number of mu applications performed.
std::optional<std::size_t> mu_steps_to_full(const LowerSet& lower, std::size_t* iterations = nullptr);

} // namespace xover
