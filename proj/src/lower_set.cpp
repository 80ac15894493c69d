#include "xover/lower_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "xover/detail/bits.hpp"

namespace xover {

namespace {

void require_poset(const std::shared_ptr<const ScnPoset>& poset)
{
    if (!poset) {
        throw std::invalid_argument("lower set needs a poset");
    }
}

// Semi-naive iteration: a pair whose members were both present one step ago
// cannot contribute anything new.
class MuIteration {
public:
    explicit MuIteration(const LowerSet& start)
        : current_(start)
        , order_(start.members())
    { }

    bool step()
    {
        const ScnPoset& poset = current_.poset();
        const std::size_t fresh_end = order_.size();
        std::vector<std::size_t> added;
        if (poset.max_components() == 1) {
            interval_step(added);
            fresh_begin_ = fresh_end;
            order_.insert(order_.end(), added.begin(), added.end());
            return !added.empty();
        }
        for (std::size_t j = fresh_begin_; j < fresh_end; ++j) {
            for (std::size_t i = 0; i <= j; ++i) {
                const auto join = poset.crossover_join(order_[i], order_[j]);
                if (join != ScnPoset::npos && !current_.contains(join)) {
                    current_.insert(join, &added);
                }
            }
        }
        fresh_begin_ = fresh_end;
        order_.insert(order_.end(), added.begin(), added.end());
        return !added.empty();
    }

    [[nodiscard]] const LowerSet& current() const noexcept { return current_; }

private:
    // With one component, two intervals join iff they overlap or touch, and
    // enlarging either one keeps that true and only enlarges the union. The
    // down-closed step is therefore generated by joins of maximal members, of
    // which there are at most `length`.
    void interval_step(std::vector<std::size_t>& added)
    {
        const ScnPoset& poset = current_.poset();
        const std::size_t length = poset.length();
        // reach[a]: largest b with [a, b] a member, 0 if none (1-based).
        std::vector<std::size_t> reach(length + 2, 0);
        for (auto index : order_) {
            const std::uint64_t mask = poset.mask(index);
            const auto first = static_cast<std::size_t>(std::countr_zero(mask)) + 1;
            const auto last = static_cast<std::size_t>(std::bit_width(mask));
            reach[first] = std::max(reach[first], last);
        }
        std::vector<std::pair<std::size_t, std::size_t>> maximal;
        std::size_t covered_to = 0;
        for (std::size_t a = 1; a <= length; ++a) {
            if (reach[a] > covered_to) {
                maximal.emplace_back(a, reach[a]);
                covered_to = reach[a];
            }
        }
        std::vector<std::size_t> joins;
        for (std::size_t i = 0; i < maximal.size(); ++i) {
            for (std::size_t j = i + 1; j < maximal.size() && maximal[j].first <= maximal[i].second + 1; ++j) {
                const std::uint64_t mask =
                    detail::low_bits(maximal[j].second) & ~detail::low_bits(maximal[i].first - 1);
                joins.push_back(*poset.index_of(mask));
            }
        }
        for (auto join : joins) {
            current_.insert(join, &added);
        }
    }

    LowerSet current_;
    std::vector<std::size_t> order_;
    std::size_t fresh_begin_ = 0;
};

} // namespace

LowerSet::LowerSet(std::shared_ptr<const ScnPoset> poset)
    : poset_(std::move(poset))
{
    require_poset(poset_);
    member_.assign(poset_->size(), 0);
}

LowerSet LowerSet::full(std::shared_ptr<const ScnPoset> poset)
{
    LowerSet out(std::move(poset));
    std::ranges::fill(out.member_, 1);
    out.count_ = out.member_.size();
    return out;
}

LowerSet LowerSet::down_closure(std::shared_ptr<const ScnPoset> poset, std::span<const std::size_t> generators)
{
    LowerSet out(std::move(poset));
    for (auto g : generators) {
        if (g >= out.member_.size()) {
            throw std::out_of_range("generator is not a poset element");
        }
        out.insert(g);
    }
    return out;
}

LowerSet LowerSet::below_masks(std::shared_ptr<const ScnPoset> poset, std::span<const std::uint64_t> masks)
{
    LowerSet out(std::move(poset));
    const auto elements = out.poset_->masks();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto a = elements[i];
        if (std::ranges::any_of(masks, [a](std::uint64_t m) { return (a & ~m) == 0; })) {
            out.member_[i] = 1;
            ++out.count_;
        }
    }
    return out;
}

LowerSet LowerSet::from_members(std::shared_ptr<const ScnPoset> poset, std::span<const std::size_t> members)
{
    LowerSet out(std::move(poset));
    for (auto m : members) {
        if (m >= out.member_.size()) {
            throw std::out_of_range("member is not a poset element");
        }
        if (!out.member_[m]) {
            out.member_[m] = 1;
            ++out.count_;
        }
    }
    // Any B ⊂ A inside SC_n is reachable from A by removing one position at a
    // time without leaving SC_n, so checking immediate predecessors suffices.
    const ScnPoset& p = *out.poset_;
    for (auto m : members) {
        std::uint64_t rest = p.mask(m);
        for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
            const std::uint64_t below = rest & ~(bits & -bits);
            if (below == 0) {
                continue;
            }
            const auto index = p.index_of(below);
            if (index && !out.member_[*index]) {
                throw std::invalid_argument("set is not downward closed: missing " +
                                            p.element(*index).to_string() + " below " +
                                            p.element(m).to_string());
            }
        }
    }
    return out;
}

bool LowerSet::contains(const IntervalUnion& element) const
{
    const auto index = poset_->index_of(element);
    return index && member_[*index] != 0;
}

std::vector<std::size_t> LowerSet::members() const
{
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::string LowerSet::dump() const
{
    std::string out;
    for (auto i : members()) {
        out += poset_->element(i).to_string();
        out += '\n';
    }
    return out;
}

void LowerSet::insert(std::size_t index, std::vector<std::size_t>* added)
{
    if (member_.at(index)) {
        return;
    }
    member_[index] = 1;
    ++count_;
    if (added != nullptr) {
        added->push_back(index);
    }
    const std::uint64_t mask = poset_->mask(index);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const std::uint64_t below = mask & ~(bits & -bits);
        if (below == 0 || detail::run_count(below) > poset_->max_components()) {
            continue;
        }
        if (const auto sub = poset_->index_of(below)) {
            insert(*sub, added);
        }
    }
}

bool LowerSet::operator==(const LowerSet& other) const
{
    return poset_->length() == other.poset_->length() &&
           poset_->max_components() == other.poset_->max_components() && member_ == other.member_;
}

LowerSet represent(const Genome& x, const Population& population, std::shared_ptr<const ScnPoset> poset)
{
    require_poset(poset);
    require_non_empty(population, "population");
    if (x.length() != population.length() || x.length() != poset->length()) {
        throw std::invalid_argument("genome length mismatch");
    }
    std::vector<std::uint64_t> agreements;
    agreements.reserve(population.size());
    for (const auto& y : population) {
        agreements.push_back(x.agreement_mask(y));
    }
    return LowerSet::below_masks(std::move(poset), agreements);
}

LowerSet represent(const Genome& x, const Population& population, std::size_t n)
{
    return represent(x, population, enumerate_scn(x.length(), n));
}

std::vector<std::size_t> mu_image(const LowerSet& lower)
{
    const ScnPoset& poset = lower.poset();
    const auto members = lower.members();
    std::vector<std::uint8_t> hit(poset.size(), 0);
    for (std::size_t j = 0; j < members.size(); ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            const auto join = poset.crossover_join(members[i], members[j]);
            if (join != ScnPoset::npos) {
                hit[join] = 1;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hit.size(); ++i) {
        if (hit[i]) {
            out.push_back(i);
        }
    }
    return out;
}

LowerSet mu_step(const LowerSet& lower)
{
    MuIteration iteration(lower);
    iteration.step();
    return iteration.current();
}

Saturation mu_saturate(const LowerSet& lower)
{
    MuIteration iteration(lower);
    std::optional<std::size_t> first_full;
    std::size_t steps = 0;
    while (true) {
        if (!first_full && iteration.current().contains_full()) {
            first_full = steps;
        }
        if (!iteration.step()) {
            break;
        }
        ++steps;
    }
    return {first_full, iteration.current(), steps};
}

std::optional<std::size_t> mu_steps_to_full(const LowerSet& lower, std::size_t* iterations)
{
    if (iterations != nullptr) {
        *iterations = 0;
    }
    // Joins never cover a position that no member covers.
    std::uint64_t covered = 0;
    const ScnPoset& poset = lower.poset();
    for (auto i : lower.members()) {
        covered |= poset.mask(i);
    }
    if (covered != detail::low_bits(poset.length())) {
        return std::nullopt;
    }

    MuIteration iteration(lower);
    for (std::size_t steps = 0;; ++steps) {
        if (iteration.current().contains_full()) {
            return steps;
        }
        if (!iteration.step()) {
            return std::nullopt;
        }
        if (iterations != nullptr) {
            ++*iterations;
        }
    }
}

} // namespace xover
