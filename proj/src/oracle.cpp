#include "xover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "xover/crossover.hpp"
#include "xover/detail/bits.hpp"

namespace xover {

std::string_view to_string(Semantics semantics) noexcept
{
    return semantics == Semantics::closure ? "closure" : "containment";
}

Semantics parse_semantics(std::string_view text)
{
    if (text == "closure") {
        return Semantics::closure;
    }
    if (text == "containment") {
        return Semantics::containment;
    }
    throw std::invalid_argument("semantics must be 'closure' or 'containment'");
}

} // namespace xover

namespace xover::oracle {

namespace {

// Genomes packed with a fixed number of bits per position, so recombination is
// two bit operations and the visited set is a flat table.
class PackedSequence {
public:
    PackedSequence(const Population& start, std::size_t n, const Alphabet& alphabet)
        : length_(start.length())
        , width_(static_cast<std::size_t>(std::bit_width(alphabet.size() - 1)))
        , seen_(std::size_t{1} << (length_ * width_), false)
    {
        for (const auto& mask : enumerate_masks(length_, n)) {
            std::uint64_t expanded = 0;
            for (std::size_t i = 0; i < length_; ++i) {
                if ((mask.from_second() >> i) & 1U) {
                    expanded |= detail::low_bits(width_) << (i * width_);
                }
            }
            masks_.push_back(expanded);
        }
        for (const auto& g : start) {
            add(encode(g));
        }
        stage_ends_.push_back(codes_.size());
    }

    /// Computes the next stage; returns false when it equals the current one.
    bool advance()
    {
        const std::size_t fresh_begin = stage_ends_.size() >= 2 ? stage_ends_[stage_ends_.size() - 2] : 0;
        const std::size_t fresh_end = stage_ends_.back();
        // Pairs with both members older than the last stage were already expanded.
        for (std::size_t j = fresh_begin; j < fresh_end; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                expand_pair(codes_[i], codes_[j]);
            }
        }
        if (codes_.size() == fresh_end) {
            return false;
        }
        stage_ends_.push_back(codes_.size());
        return true;
    }

    [[nodiscard]] bool contains(std::uint64_t code) const { return seen_[code]; }
    [[nodiscard]] std::size_t stage_count() const noexcept { return stage_ends_.size(); }

    [[nodiscard]] std::uint64_t encode(const Genome& g) const
    {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < length_; ++i) {
            code |= std::uint64_t{g.symbols()[i]} << (i * width_);
        }
        return code;
    }

    [[nodiscard]] Genome decode(std::uint64_t code) const
    {
        std::vector<std::uint8_t> symbols(length_);
        for (std::size_t i = 0; i < length_; ++i) {
            symbols[i] = static_cast<std::uint8_t>((code >> (i * width_)) & detail::low_bits(width_));
        }
        return Genome(std::move(symbols));
    }

    [[nodiscard]] Population stage(std::size_t index) const
    {
        std::vector<std::uint64_t> codes(codes_.begin(), codes_.begin() + static_cast<std::ptrdiff_t>(stage_ends_.at(index)));
        Population out;
        for (auto c : codes) {
            out.insert(decode(c));
        }
        return out;
    }

private:
    void add(std::uint64_t code)
    {
        if (!seen_[code]) {
            seen_[code] = true;
            codes_.push_back(code);
        }
    }

    void expand_pair(std::uint64_t x, std::uint64_t y)
    {
        for (auto m : masks_) {
            add((x & ~m) | (y & m));
        }
    }

    std::size_t length_;
    std::size_t width_;
    std::vector<std::uint64_t> masks_;
    std::vector<bool> seen_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::size_t> stage_ends_;
};

void require_inputs(const Population& source, const Population& target)
{
    require_non_empty(source, "source population");
    require_non_empty(target, "target population");
    require_same_length({&source, &target});
}

} // namespace

void require_oracle_size(std::size_t alphabet_size, std::size_t length)
{
    std::size_t universe = 1;
    for (std::size_t i = 0; i < length; ++i) {
        universe *= alphabet_size;
        if (universe > kMaxUniverse) {
            throw std::invalid_argument("oracle limited to universes of at most 65536 genomes");
        }
    }
}

std::optional<std::size_t> ReachabilitySequence::first_stage_containing(const Genome& genome) const
{
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i].contains(genome)) {
            return i;
        }
    }
    return std::nullopt;
}

ReachabilitySequence s_sequence(const Population& population, std::size_t n, const Alphabet& alphabet)
{
    require_non_empty(population, "population");
    require_oracle_size(alphabet.size(), population.length());
    require_crossover_points(population.length(), n);

    PackedSequence packed(population, n, alphabet);
    while (packed.advance()) {
    }
    ReachabilitySequence sequence;
    for (std::size_t i = 0; i < packed.stage_count(); ++i) {
        sequence.stages.push_back(packed.stage(i));
    }
    sequence.fixed_point_index = packed.stage_count() - 1;
    return sequence;
}

std::optional<std::size_t> oracle_min_generations(const Population& source, const Population& target,
                                                  std::size_t n, Semantics semantics,
                                                  const Alphabet& alphabet)
{
    require_inputs(source, target);
    require_oracle_size(alphabet.size(), source.length());
    require_crossover_points(source.length(), n);

    if (semantics == Semantics::closure && target.is_subset_of(source)) {
        return target == source ? 0 : 1;
    }

    PackedSequence packed(source, n, alphabet);
    std::vector<std::uint64_t> wanted;
    for (const auto& g : target) {
        wanted.push_back(packed.encode(g));
    }
    for (std::size_t generation = 0;; ++generation) {
        if (std::ranges::all_of(wanted, [&](auto c) { return packed.contains(c); })) {
            return generation;
        }
        if (!packed.advance()) {
            return std::nullopt;
        }
    }
}

DistanceValue oracle_directed_distance(const Population& source, const Population& target, std::size_t n,
                                       const KStarPolicy& policy, Semantics semantics, const Alphabet& alphabet)
{
    const auto generations = oracle_min_generations(source, target, n, semantics, alphabet);
    const std::size_t kstar = resolve_kstar(source.length(), n, policy);
    if (!generations || *generations >= kstar) {
        return DistanceValue::unreachable(kstar);
    }
    return DistanceValue::finite(*generations, kstar);
}

bool oracle_closure_member(const Population& source, const Population& target, std::size_t k, std::size_t n,
                           const Alphabet& alphabet)
{
    require_inputs(source, target);
    if (k == 0) {
        return source == target;
    }
    const auto generations = oracle_min_generations(source, target, n, Semantics::closure, alphabet);
    return generations.has_value() && *generations <= k;
}

PopulationFamily::PopulationFamily(std::size_t alphabet_size, std::size_t length)
    : alphabet_size_(alphabet_size)
    , length_(length)
    , universe_size_(1)
{
    for (std::size_t i = 0; i < length; ++i) {
        universe_size_ *= alphabet_size;
        if (universe_size_ > 16) {
            throw std::invalid_argument("population families need a universe of at most 16 genomes");
        }
    }
    bits_.assign(std::size_t{1} << universe_size_, false);
}

bool PopulationFamily::empty() const
{
    return std::ranges::none_of(bits_, [](bool b) { return b; });
}

bool PopulationFamily::is_subset_of(const PopulationFamily& other) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) {
            return false;
        }
    }
    return true;
}

PopulationFamily PopulationFamily::united(const PopulationFamily& other) const
{
    PopulationFamily out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (other.bits_[i]) {
            out.bits_[i] = true;
        }
    }
    return out;
}

FamilyClosure::FamilyClosure(std::size_t alphabet_size, std::size_t length, std::size_t n)
    : alphabet_size_(alphabet_size)
    , length_(length)
{
    require_crossover_points(length, n);
    const PopulationFamily probe(alphabet_size, length);
    const std::size_t size = probe.universe_size();

    for (std::size_t index = 0; index < size; ++index) {
        std::vector<std::uint8_t> symbols(length);
        std::size_t rest = index;
        for (std::size_t i = length; i-- > 0;) {
            symbols[i] = static_cast<std::uint8_t>(rest % alphabet_size);
            rest /= alphabet_size;
        }
        universe_.emplace_back(std::move(symbols));
    }

    std::vector<std::uint32_t> pair_children(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
            const auto pool = offspring_pool(Population{universe_[i], universe_[j]}, n);
            const auto bits = from_population(pool);
            pair_children[i * size + j] = bits;
            pair_children[j * size + i] = bits;
        }
    }

    pool_.assign(std::size_t{1} << size, 0);
    for (std::uint32_t p = 0; p < pool_.size(); ++p) {
        std::uint32_t bits = p;
        for (std::size_t i = 0; i < size; ++i) {
            if (!((p >> i) & 1U)) {
                continue;
            }
            for (std::size_t j = i; j < size; ++j) {
                if ((p >> j) & 1U) {
                    bits |= pair_children[i * size + j];
                }
            }
        }
        pool_[p] = bits;
    }
}

PopulationFamily FamilyClosure::empty_family() const
{
    return PopulationFamily(alphabet_size_, length_);
}

PopulationFamily FamilyClosure::singleton(std::uint32_t population) const
{
    auto family = empty_family();
    family.insert(population);
    return family;
}

PopulationFamily FamilyClosure::apply(const PopulationFamily& family) const
{
    auto out = empty_family();
    std::vector<bool> done(pool_.size(), false);
    for (std::uint32_t p = 0; p < pool_.size(); ++p) {
        if (!family.bits_[p] || done[pool_[p]]) {
            continue;
        }
        done[pool_[p]] = true;
        // Every subset of the pool, the empty population included.
        const std::uint32_t pool = pool_[p];
        for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
            out.bits_[sub] = true;
            if (sub == 0) {
                break;
            }
        }
    }
    return out;
}

PopulationFamily FamilyClosure::iterate(const PopulationFamily& family, std::size_t k) const
{
    auto current = family;
    for (std::size_t i = 0; i < k; ++i) {
        current = apply(current);
    }
    return current;
}

Population FamilyClosure::to_population(std::uint32_t population) const
{
    Population out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
        if ((population >> i) & 1U) {
            out.insert(universe_[i]);
        }
    }
    return out;
}

std::uint32_t FamilyClosure::from_population(const Population& population) const
{
    std::uint32_t bits = 0;
    for (const auto& g : population) {
        const auto it = std::ranges::find(universe_, g);
        if (it == universe_.end()) {
            throw std::invalid_argument("genome outside the family universe");
        }
        bits |= std::uint32_t{1} << static_cast<std::size_t>(it - universe_.begin());
    }
    return bits;
}

} // namespace xover::oracle
