#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xover {

/// Ordered set of distinct single-character symbols. Genomes store indices
/// into this list.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);

    /// The alphabet {0, 1} used by every experiment.
    static const Alphabet& binary();

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] std::string_view symbols() const noexcept { return symbols_; }
    [[nodiscard]] char symbol(std::uint8_t index) const;
    [[nodiscard]] std::uint8_t index_of(char symbol) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::string symbols_;
};

/// A fixed-length string over an alphabet, stored as symbol indices.
/// Positions are 1-based in the public interface.
class Genome {
public:
    Genome() = default;
    explicit Genome(std::vector<std::uint8_t> symbols);
    Genome(std::vector<std::uint8_t> symbols, const Alphabet& alphabet);

    static Genome parse(std::string_view text, const Alphabet& alphabet = Alphabet::binary());

    [[nodiscard]] std::string to_string(const Alphabet& alphabet = Alphabet::binary()) const;

    [[nodiscard]] std::size_t length() const noexcept { return symbols_.size(); }
    [[nodiscard]] std::uint8_t at(std::size_t position) const;
    [[nodiscard]] std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

    /// Bit p-1 is set when this genome and `other` agree at position p.
    /// Requires length() <= 64.
    [[nodiscard]] std::uint64_t agreement_mask(const Genome& other) const;

    auto operator<=>(const Genome&) const = default;

private:
    std::vector<std::uint8_t> symbols_;
};

/// A duplicate-free set of equal-length genomes.
class Population {
public:
    using const_iterator = std::set<Genome>::const_iterator;

    Population() = default;
    Population(std::initializer_list<Genome> members);
    template <typename Range>
    static Population from_range(const Range& range)
    {
        Population result;
        for (const auto& genome : range) {
            result.insert(genome);
        }
        return result;
    }

    /// Convenience for tests and examples: {"010", "101"}.
    static Population parse(std::initializer_list<std::string_view> texts,
                            const Alphabet& alphabet = Alphabet::binary());

    /// Inserts `genome`; returns false if it was already present.
    bool insert(Genome genome);
    bool erase(const Genome& genome) { return members_.erase(genome) > 0; }

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    /// Common genome length, 0 for an empty population.
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] bool contains(const Genome& genome) const { return members_.contains(genome); }
    [[nodiscard]] bool is_subset_of(const Population& other) const;

    [[nodiscard]] const_iterator begin() const noexcept { return members_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return members_.end(); }

    [[nodiscard]] std::vector<std::string> to_strings(const Alphabet& alphabet = Alphabet::binary()) const;

    bool operator==(const Population& other) const { return members_ == other.members_; }

private:
    std::set<Genome> members_;
    std::size_t length_ = 0;
};

Population unite(const Population& lhs, const Population& rhs);

/// Throws std::invalid_argument when any two non-empty populations disagree on length.
void require_same_length(std::initializer_list<const Population*> populations);
void require_non_empty(const Population& population, std::string_view what);

} // namespace xover
