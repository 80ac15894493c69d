#pragma once

// Brute-force reference semantics in genome space. Everything here works on
// explicit sets of genomes and is limited to universes of at most 65536 strings.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "xover/distance.hpp"
#include "xover/genome.hpp"
#include "xover/semantics.hpp"

namespace xover::oracle {

inline constexpr std::size_t kMaxUniverse = 65536;

/// Throws std::invalid_argument when alphabet_size^length exceeds kMaxUniverse.
void require_oracle_size(std::size_t alphabet_size, std::size_t length);

/// S_0 = P, S_{i+1} = offspring pool of S_i, stopped at the first repeat.
struct ReachabilitySequence {
    std::vector<Population> stages;
    /// Smallest t with S_t = S_{t+1}; stages.size() == t + 1.
    std::size_t fixed_point_index = 0;

    [[nodiscard]] const Population& fixed_point() const { return stages.back(); }
    /// First stage index containing `genome`, if any.
    [[nodiscard]] std::optional<std::size_t> first_stage_containing(const Genome& genome) const;
};

ReachabilitySequence s_sequence(const Population& population, std::size_t n,
                                const Alphabet& alphabet = Alphabet::binary());

/// Minimum generations to obtain `target` from `source`; nullopt when `target`
/// is not contained in the saturated reachable set.
std::optional<std::size_t> oracle_min_generations(const Population& source, const Population& target,
                                                  std::size_t n, Semantics semantics,
                                                  const Alphabet& alphabet = Alphabet::binary());

/// oracle_min_generations reported under a k* policy, with the same cap rule
/// as the fast engine: Unreachable when unreachable or when the count >= k*.
DistanceValue oracle_directed_distance(const Population& source, const Population& target, std::size_t n,
                                       const KStarPolicy& policy, Semantics semantics,
                                       const Alphabet& alphabet = Alphabet::binary());

/// Whether `target` lies in the k-th iterated crossover closure of {source}.
bool oracle_closure_member(const Population& source, const Population& target, std::size_t k,
                           std::size_t n, const Alphabet& alphabet = Alphabet::binary());

/// Families of populations over a tiny universe (at most 16 genomes), used to
/// check the closure axioms and chain characterisation directly.
/// Population p is the bitmask over universe indices; a family is a bitset
/// over all 2^|universe| populations.
class PopulationFamily {
public:
    PopulationFamily(std::size_t alphabet_size, std::size_t length);

    [[nodiscard]] std::size_t universe_size() const noexcept { return universe_size_; }
    [[nodiscard]] std::size_t population_count() const noexcept { return bits_.size(); }

    void insert(std::uint32_t population) { bits_.at(population) = true; }
    [[nodiscard]] bool contains(std::uint32_t population) const { return bits_.at(population); }
    [[nodiscard]] bool empty() const;
    [[nodiscard]] bool is_subset_of(const PopulationFamily& other) const;
    [[nodiscard]] PopulationFamily united(const PopulationFamily& other) const;

    bool operator==(const PopulationFamily&) const = default;

private:
    std::size_t alphabet_size_;
    std::size_t length_;
    std::size_t universe_size_;
    std::vector<bool> bits_;

    friend class FamilyClosure;
};

/// The crossover closure on families: cl(A) = union over P in A of every
/// population P' with P Pxo_n P', i.e. every subset of the offspring pool of P.
class FamilyClosure {
public:
    FamilyClosure(std::size_t alphabet_size, std::size_t length, std::size_t n);

    [[nodiscard]] PopulationFamily empty_family() const;
    [[nodiscard]] PopulationFamily singleton(std::uint32_t population) const;
    [[nodiscard]] PopulationFamily apply(const PopulationFamily& family) const;
    /// cl applied k times; k = 0 returns `family`.
    [[nodiscard]] PopulationFamily iterate(const PopulationFamily& family, std::size_t k) const;

    [[nodiscard]] Population to_population(std::uint32_t population) const;
    [[nodiscard]] std::uint32_t from_population(const Population& population) const;

private:
    std::size_t alphabet_size_;
    std::size_t length_;
    std::vector<Genome> universe_;
    /// pool_[p]: offspring pool of population p as a population bitmask.
    std::vector<std::uint32_t> pool_;
};

} // namespace xover::oracle
