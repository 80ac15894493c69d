#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "xover/distance.hpp"
#include "xover/genome.hpp"
#include "xover/semantics.hpp"

namespace xover {

/// Distance-to-target distribution over all genomes of a given length.
struct ExperimentConfig {
    std::size_t length = 8;
    std::vector<std::size_t> n_values{1, 2, 3, 4, 5, 6, 7};
    std::size_t samples_per_individual = 100;
    std::size_t random_pop_size = 4;
    /// Empty means the all-last-symbol genome (11111111 for the defaults).
    std::optional<Genome> target;
    std::uint64_t seed = 1;
    KStarPolicy kstar = KStarPolicy::log_default();
    Semantics semantics = Semantics::containment;
    /// 0 = one worker per hardware thread.
    std::size_t threads = 0;

    [[nodiscard]] Genome resolved_target() const;
    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

/// Genome number `index` of the universe, in lexicographic order of symbol
/// indices (position 1 most significant).
Genome genome_at(std::size_t index, std::size_t length, std::size_t alphabet_size);
std::size_t universe_size(std::size_t length, std::size_t alphabet_size);

/// Per-sample generation counts before k* is applied; nullopt = unreachable.
/// outcomes[individual * samples + sample].
struct RawOutcomes {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::vector<std::optional<std::uint8_t>> outcomes;
};

/// Draws the random populations and computes every per-sample outcome for one
/// crossover count. Sample s of individual i uses the same random population
/// for every n.
RawOutcomes sample_outcomes(const ExperimentConfig& config, std::size_t n);

struct DistributionResult {
    std::size_t n = 0;
    std::size_t kstar = 0;
    /// Mean distance per genome, indexed like genome_at.
    std::vector<double> per_individual;
    /// Fraction of samples that were unreachable (or capped), per genome.
    std::vector<double> unreachable_fraction;
    double average = 0.0;
    double variance = 0.0;
};

/// Applies k* to raw outcomes: unreachable and capped values count as k*.
DistributionResult apply_kstar(const RawOutcomes& raw, std::size_t kstar);

/// One result per entry of config.n_values.
std::vector<DistributionResult> run_distribution(const ExperimentConfig& config);

struct Summary {
    double average = 0.0;
    double variance = 0.0;
};

/// Mean and population variance (divide by N). Empty input gives {0, 0}.
Summary summarize(const std::vector<double>& values);

struct HistogramBin {
    double center = 0.0;
    std::size_t count = 0;
};

/// Bins [k w, (k+1) w) anchored at 0, covering the smallest to the largest
/// non-empty bin (empty bins in between included).
std::vector<HistogramBin> histogram(const std::vector<double>& values, double bin_width);

} // namespace xover
