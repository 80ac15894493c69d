#include "xover/crossover.hpp"

#include <algorithm>
#include <stdexcept>

#include "xover/detail/bits.hpp"

namespace xover {

namespace {

void require_same_genome_length(const Genome& a, const Genome& b)
{
    if (a.length() != b.length()) {
        throw std::invalid_argument("genome length mismatch");
    }
}

// Appends every word whose switch points (gaps after position p, 1 <= p < length)
// are drawn from [next_gap, length) with at most `remaining` more switches.
void collect_masks(std::size_t length, std::size_t next_gap, std::size_t remaining, std::uint64_t word,
                   bool current_is_b, std::vector<std::uint64_t>& out)
{
    out.push_back(word);
    if (remaining == 0) {
        return;
    }
    for (std::size_t gap = next_gap; gap < length; ++gap) {
        // Positions gap+1..length flip to the other label.
        const std::uint64_t tail = detail::low_bits(length) & ~detail::low_bits(gap);
        const std::uint64_t flipped = current_is_b ? (word & ~tail) : (word | tail);
        collect_masks(length, gap + 1, remaining - 1, flipped, !current_is_b, out);
    }
}

} // namespace

void require_crossover_points(std::size_t length, std::size_t n)
{
    if (n < 1 || n + 1 > length) {
        throw std::invalid_argument("number of crossover points must be in [1, length - 1]");
    }
}

CutVector::CutVector(std::vector<std::size_t> cuts)
    : cuts_(std::move(cuts))
{
    if (!std::ranges::is_sorted(cuts_)) {
        throw std::invalid_argument("crossover cuts must be non-decreasing");
    }
}

void CutVector::validate(std::size_t length) const
{
    if (!cuts_.empty() && cuts_.back() > length) {
        throw std::invalid_argument("crossover cut out of range");
    }
}

InheritanceMask::InheritanceMask(std::size_t length, std::uint64_t from_second)
    : length_(length)
    , from_second_(from_second)
{
    if (length == 0 || length > detail::kMaxMaskLength) {
        throw std::invalid_argument("inheritance mask length must be in [1, 64]");
    }
    if ((from_second & ~detail::low_bits(length)) != 0) {
        throw std::invalid_argument("inheritance mask has bits beyond its length");
    }
}

InheritanceMask InheritanceMask::parse(std::string_view word)
{
    if (word.empty() || word.size() > detail::kMaxMaskLength) {
        throw std::invalid_argument("inheritance word length must be in [1, 64]");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 'b') {
            bits |= std::uint64_t{1} << i;
        } else if (word[i] != 'a') {
            throw std::invalid_argument("inheritance word must use only 'a' and 'b'");
        }
    }
    return {word.size(), bits};
}

InheritanceMask InheritanceMask::from_cuts(const CutVector& cuts, std::size_t length)
{
    cuts.validate(length);
    std::uint64_t bits = 0;
    std::size_t start = 0;
    for (std::size_t segment = 0; segment <= cuts.size(); ++segment) {
        const std::size_t stop = segment < cuts.size() ? cuts.cuts()[segment] : length;
        if (segment % 2 == 1) {
            bits |= detail::low_bits(stop) & ~detail::low_bits(start);
        }
        start = stop;
    }
    return {length, bits};
}

std::size_t InheritanceMask::alternations() const noexcept
{
    return detail::word_alternations(from_second_, length_);
}

std::string InheritanceMask::word() const
{
    std::string out(length_, 'a');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((from_second_ >> i) & 1U) {
            out[i] = 'b';
        }
    }
    return out;
}

Genome recombine(const Genome& first, const Genome& second, const InheritanceMask& mask)
{
    require_same_genome_length(first, second);
    if (mask.length() != first.length()) {
        throw std::invalid_argument("inheritance mask length mismatch");
    }
    std::vector<std::uint8_t> child(first.symbols().begin(), first.symbols().end());
    const auto other = second.symbols();
    for (std::size_t i = 0; i < child.size(); ++i) {
        if ((mask.from_second() >> i) & 1U) {
            child[i] = other[i];
        }
    }
    return Genome(std::move(child));
}

std::pair<Genome, Genome> crossover_apply(const Genome& x, const Genome& y, const CutVector& cuts)
{
    require_same_genome_length(x, y);
    cuts.validate(x.length());

    std::vector<std::uint8_t> first(x.length());
    std::vector<std::uint8_t> second(x.length());
    std::size_t start = 0;
    for (std::size_t segment = 0; segment <= cuts.size(); ++segment) {
        const std::size_t stop = segment < cuts.size() ? cuts.cuts()[segment] : x.length();
        const bool keep = segment % 2 == 0;
        for (std::size_t i = start; i < stop; ++i) {
            first[i] = keep ? x.symbols()[i] : y.symbols()[i];
            second[i] = keep ? y.symbols()[i] : x.symbols()[i];
        }
        start = stop;
    }
    return {Genome(std::move(first)), Genome(std::move(second))};
}

std::vector<InheritanceMask> enumerate_masks(std::size_t length, std::size_t n)
{
    require_crossover_points(length, n);
    if (length > detail::kMaxMaskLength) {
        throw std::invalid_argument("mask enumeration supports lengths up to 64");
    }
    std::vector<std::uint64_t> words;
    words.reserve(mask_count(length, n));
    collect_masks(length, 1, n, 0, false, words);
    collect_masks(length, 1, n, detail::low_bits(length), true, words);
    std::ranges::sort(words);

    std::vector<InheritanceMask> masks;
    masks.reserve(words.size());
    for (auto w : words) {
        masks.emplace_back(length, w);
    }
    return masks;
}

std::size_t mask_count(std::size_t length, std::size_t n)
{
    require_crossover_points(length, n);
    std::size_t total = 0;
    std::size_t binomial = 1; // C(length - 1, j)
    for (std::size_t j = 0; j <= n; ++j) {
        total += binomial;
        binomial = binomial * (length - 1 - j) / (j + 1);
    }
    return 2 * total;
}

bool individuals_related(const Genome& x, const Genome& y, const Genome& x2, const Genome& y2,
                         std::size_t n)
{
    require_same_genome_length(x, y);
    require_same_genome_length(x, x2);
    require_same_genome_length(x, y2);
    require_crossover_points(x.length(), n);

    // Scan the forced labels: positions where only one parent choice reproduces
    // (x2, y2). The child order (x2, y2) vs (y2, x2) complements the word and
    // keeps its alternation count.
    std::size_t switches = 0;
    int previous = -1;
    for (std::size_t i = 0; i < x.length(); ++i) {
        const auto xs = x.symbols()[i];
        const auto ys = y.symbols()[i];
        const bool keep = x2.symbols()[i] == xs && y2.symbols()[i] == ys;
        const bool swap = x2.symbols()[i] == ys && y2.symbols()[i] == xs;
        if (!keep && !swap) {
            return false;
        }
        if (keep && swap) {
            continue;
        }
        const int label = keep ? 0 : 1;
        if (previous >= 0 && label != previous) {
            ++switches;
        }
        previous = label;
    }
    return switches <= n;
}

Population offspring_pool(const Population& population, std::size_t n)
{
    require_non_empty(population, "population");
    const auto masks = enumerate_masks(population.length(), n);
    const std::vector<Genome> members(population.begin(), population.end());

    // The mask set is closed under complement, so unordered pairs suffice.
    Population pool = population;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            for (const auto& mask : masks) {
                pool.insert(recombine(members[i], members[j], mask));
            }
        }
    }
    return pool;
}

bool populations_related(const Population& source, const Population& target, std::size_t n)
{
    require_non_empty(source, "source population");
    require_same_length({&source, &target});
    return target.is_subset_of(offspring_pool(source, n));
}

} // namespace xover
