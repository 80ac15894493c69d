#include "xover/scn_poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "xover/detail/bits.hpp"

namespace xover {

namespace {

constexpr std::size_t kDenseIndexMaxLength = 20;
constexpr std::size_t kJoinTableMaxEntries = std::size_t{1} << 22;

// Appends every mask whose runs start at or after `from` (0-based bit), given
// `mask` so far, with at most `remaining` further runs.
void collect_runs(std::size_t length, std::size_t from, std::size_t remaining, std::uint64_t mask,
                  std::vector<std::uint64_t>& out)
{
    if (mask != 0) {
        out.push_back(mask);
    }
    if (remaining == 0) {
        return;
    }
    for (std::size_t first = from; first < length; ++first) {
        for (std::size_t last = first; last < length; ++last) {
            const std::uint64_t run = detail::low_bits(last + 1) & ~detail::low_bits(first);
            // Leave a gap of at least one position before the next run.
            collect_runs(length, last + 2, remaining - 1, mask | run, out);
        }
    }
}

} // namespace

ScnPoset::ScnPoset(std::size_t length, std::size_t max_components)
    : length_(length)
    , max_components_(max_components)
{
    if (length == 0 || length > detail::kMaxMaskLength) {
        throw std::invalid_argument("poset length must be in [1, 64]");
    }
    if (max_components < 1 || max_components > length) {
        throw std::invalid_argument("number of components must be in [1, length]");
    }
    collect_runs(length, 0, max_components, 0, masks_);
    std::ranges::sort(masks_, [](std::uint64_t a, std::uint64_t b) {
        const auto pa = std::popcount(a);
        const auto pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    if (masks_.size() >= npos) {
        throw std::invalid_argument("poset too large");
    }
    if (length <= kDenseIndexMaxLength) {
        dense_index_.assign(std::size_t{1} << length, npos);
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            dense_index_[masks_[i]] = static_cast<std::uint32_t>(i);
        }
    } else {
        sparse_index_.reserve(masks_.size());
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            sparse_index_.emplace(masks_[i], static_cast<std::uint32_t>(i));
        }
    }
    full_index_ = lookup(detail::low_bits(length));

    const std::size_t n = masks_.size();
    if (n * n <= kJoinTableMaxEntries) {
        join_table_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const auto join = compute_join(i, j);
                join_table_[i * n + j] = join;
                join_table_[j * n + i] = join;
            }
        }
    }
}

IntervalUnion ScnPoset::element(std::size_t index) const
{
    return IntervalUnion::from_mask(mask(index), length_);
}

std::uint32_t ScnPoset::lookup(std::uint64_t mask) const
{
    if (!dense_index_.empty()) {
        return mask < dense_index_.size() ? dense_index_[mask] : npos;
    }
    const auto it = sparse_index_.find(mask);
    return it == sparse_index_.end() ? npos : it->second;
}

std::optional<std::size_t> ScnPoset::index_of(std::uint64_t mask) const
{
    const auto index = lookup(mask);
    if (index == npos) {
        return std::nullopt;
    }
    return index;
}

std::optional<std::size_t> ScnPoset::index_of(const IntervalUnion& element) const
{
    if (element.length() != length_) {
        throw std::invalid_argument("interval union length does not match the poset");
    }
    return index_of(element.mask());
}

bool ScnPoset::less_equal(std::size_t lhs, std::size_t rhs) const
{
    return (mask(lhs) & ~mask(rhs)) == 0;
}

std::uint32_t ScnPoset::compute_join(std::size_t lhs, std::size_t rhs) const
{
    const std::uint64_t a = masks_[lhs];
    const std::uint64_t b = masks_[rhs];
    const std::uint64_t joined = a | b;
    if (detail::run_count(joined) > max_components_) {
        return npos;
    }
    if (detail::forced_alternations(a & ~b, b & ~a) > max_components_) {
        return npos;
    }
    return lookup(joined);
}

std::uint32_t ScnPoset::crossover_join(std::size_t lhs, std::size_t rhs) const
{
    if (!join_table_.empty()) {
        return join_table_[lhs * masks_.size() + rhs];
    }
    return compute_join(lhs, rhs);
}

std::size_t ScnPoset::expected_size(std::size_t length, std::size_t max_components)
{
    // C(length + 1, k) computed incrementally for k = 0..2n.
    std::size_t total = 0;
    std::size_t binomial = 1;
    for (std::size_t k = 1; k <= 2 * max_components && k <= length + 1; ++k) {
        binomial = binomial * (length + 2 - k) / k;
        if (k % 2 == 0) {
            total += binomial;
        }
    }
    return total;
}

std::shared_ptr<const ScnPoset> enumerate_scn(std::size_t length, std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const ScnPoset>> cache;

    const std::scoped_lock lock(mutex);
    auto& slot = cache[{length, n}];
    if (!slot) {
        slot = std::make_shared<const ScnPoset>(length, n);
    }
    return slot;
}

} // namespace xover
