#include "xover/interval_union.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include "xover/detail/bits.hpp"

namespace xover {

namespace {

void require_length(std::size_t length)
{
    if (length == 0 || length > detail::kMaxMaskLength) {
        throw std::invalid_argument("interval unions support lengths in [1, 64]");
    }
}

std::size_t parse_position(std::string_view text)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed interval bound '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

IntervalUnion IntervalUnion::from_mask(std::uint64_t mask, std::size_t length)
{
    require_length(length);
    if (mask == 0) {
        throw std::invalid_argument("interval union must not be empty");
    }
    if ((mask & ~detail::low_bits(length)) != 0) {
        throw std::invalid_argument("position out of range");
    }
    return {mask, length};
}

IntervalUnion IntervalUnion::from_intervals(std::span<const Interval> intervals, std::size_t length)
{
    require_length(length);
    std::uint64_t mask = 0;
    for (const auto& iv : intervals) {
        if (iv.first < 1 || iv.first > iv.last || iv.last > length) {
            throw std::invalid_argument("invalid interval");
        }
        mask |= detail::low_bits(iv.last) & ~detail::low_bits(iv.first - 1);
    }
    return from_mask(mask, length);
}

IntervalUnion IntervalUnion::parse(std::string_view text, std::size_t length)
{
    std::vector<Interval> intervals;
    while (!text.empty()) {
        const auto close = text.find(']');
        if (text.front() != '[' || close == std::string_view::npos) {
            throw std::invalid_argument("malformed interval union");
        }
        const auto body = text.substr(1, close - 1);
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("malformed interval union");
        }
        intervals.push_back({parse_position(body.substr(0, comma)), parse_position(body.substr(comma + 1))});
        text.remove_prefix(close + 1);
        if (!text.empty()) {
            if (text.front() != '+') {
                throw std::invalid_argument("malformed interval union");
            }
            text.remove_prefix(1);
        }
    }
    return from_intervals(intervals, length);
}

std::vector<Interval> IntervalUnion::components() const
{
    std::vector<Interval> out;
    std::uint64_t rest = mask_;
    while (rest != 0) {
        const auto start = static_cast<std::size_t>(std::countr_zero(rest));
        const auto run = static_cast<std::size_t>(std::countr_one(rest >> start));
        out.push_back({start + 1, start + run});
        rest &= ~(detail::low_bits(start + run));
    }
    return out;
}

std::size_t IntervalUnion::component_count() const noexcept
{
    return detail::run_count(mask_);
}

std::size_t IntervalUnion::cardinality() const noexcept
{
    return static_cast<std::size_t>(std::popcount(mask_));
}

bool IntervalUnion::contains(std::size_t position) const noexcept
{
    return position >= 1 && position <= length_ && ((mask_ >> (position - 1)) & 1U);
}

bool IntervalUnion::is_subset_of(const IntervalUnion& other) const noexcept
{
    return (mask_ & ~other.mask_) == 0;
}

bool IntervalUnion::is_full() const noexcept
{
    return mask_ == detail::low_bits(length_);
}

std::string IntervalUnion::to_string() const
{
    std::string out;
    for (const auto& iv : components()) {
        if (!out.empty()) {
            out += '+';
        }
        out += '[' + std::to_string(iv.first) + ',' + std::to_string(iv.last) + ']';
    }
    return out;
}

IntervalUnion canonicalize(std::span<const std::size_t> positions, std::size_t length)
{
    require_length(length);
    if (positions.empty()) {
        throw std::invalid_argument("cannot canonicalize an empty position set");
    }
    std::uint64_t mask = 0;
    for (auto p : positions) {
        if (p < 1 || p > length) {
            throw std::invalid_argument("position out of range");
        }
        mask |= detail::position_bit(p);
    }
    return IntervalUnion::from_mask(mask, length);
}

std::size_t alternating_number(const IntervalUnion& a, const IntervalUnion& b)
{
    if (a.length() != b.length()) {
        throw std::invalid_argument("interval unions over different lengths");
    }
    return detail::forced_alternations(a.mask() & ~b.mask(), b.mask() & ~a.mask());
}

} // namespace xover
