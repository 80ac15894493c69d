#include "xover/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "xover/crossover.hpp"

namespace xover {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream per (individual, sample), so any partition of the work
// across threads draws the same populations.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t individual, std::uint64_t sample) noexcept
{
    return splitmix64(splitmix64(splitmix64(seed) ^ individual) ^ (sample + 0x632be59bd9b4e019ULL));
}

std::size_t worker_count(std::size_t requested, std::size_t jobs)
{
    std::size_t workers = requested;
    if (workers == 0) {
        workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    return std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, jobs));
}

} // namespace

Genome ExperimentConfig::resolved_target() const
{
    if (target) {
        return *target;
    }
    return Genome(std::vector<std::uint8_t>(length, 1));
}

void ExperimentConfig::validate() const
{
    if (length < 2 || length > 16) {
        throw std::invalid_argument("experiment length must be in [2, 16]");
    }
    if (n_values.empty()) {
        throw std::invalid_argument("experiment needs at least one crossover count");
    }
    for (auto n : n_values) {
        require_crossover_points(length, n);
    }
    if (samples_per_individual == 0) {
        throw std::invalid_argument("experiment needs at least one sample per individual");
    }
    if (target && target->length() != length) {
        throw std::invalid_argument("target length does not match experiment length");
    }
    if (target) {
        for (auto s : target->symbols()) {
            if (s > 1) {
                throw std::invalid_argument("experiment target must be binary");
            }
        }
    }
}

std::size_t universe_size(std::size_t length, std::size_t alphabet_size)
{
    std::size_t size = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (size > std::numeric_limits<std::size_t>::max() / alphabet_size) {
            throw std::overflow_error("universe too large");
        }
        size *= alphabet_size;
    }
    return size;
}

Genome genome_at(std::size_t index, std::size_t length, std::size_t alphabet_size)
{
    std::vector<std::uint8_t> symbols(length);
    for (std::size_t i = length; i-- > 0;) {
        symbols[i] = static_cast<std::uint8_t>(index % alphabet_size);
        index /= alphabet_size;
    }
    return Genome(std::move(symbols));
}

RawOutcomes sample_outcomes(const ExperimentConfig& config, std::size_t n)
{
    config.validate();
    require_crossover_points(config.length, n);

    const std::size_t individuals = universe_size(config.length, 2);
    const std::size_t samples = config.samples_per_individual;
    const Population target{config.resolved_target()};
    const auto uncapped = KStarPolicy::fixed(std::numeric_limits<std::size_t>::max());

    RawOutcomes raw;
    raw.n = n;
    raw.samples = samples;
    raw.outcomes.resize(individuals * samples);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t individual = begin; individual < end; ++individual) {
            const Genome x = genome_at(individual, config.length, 2);
            for (std::size_t sample = 0; sample < samples; ++sample) {
                std::mt19937_64 rng(stream_seed(config.seed, individual, sample));
                std::uniform_int_distribution<int> bit(0, 1);
                Population population{x};
                for (std::size_t m = 0; m < config.random_pop_size; ++m) {
                    std::vector<std::uint8_t> symbols(config.length);
                    for (auto& s : symbols) {
                        s = static_cast<std::uint8_t>(bit(rng));
                    }
                    population.insert(Genome(std::move(symbols)));
                }
                const auto d = directed_distance(population, target, n, uncapped, config.semantics);
                auto& slot = raw.outcomes[individual * samples + sample];
                if (d.is_finite()) {
                    slot = static_cast<std::uint8_t>(std::min<std::size_t>(d.generations(), 255));
                }
            }
        }
    };

    const std::size_t workers = worker_count(config.threads, individuals);
    if (workers == 1) {
        work(0, individuals);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (individuals + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(individuals, w * chunk);
            const std::size_t end = std::min(individuals, begin + chunk);
            pool.emplace_back(work, begin, end);
        }
    }
    return raw;
}

DistributionResult apply_kstar(const RawOutcomes& raw, std::size_t kstar)
{
    if (raw.samples == 0 || raw.outcomes.size() % raw.samples != 0) {
        throw std::invalid_argument("malformed raw outcomes");
    }
    const std::size_t individuals = raw.outcomes.size() / raw.samples;
    DistributionResult result;
    result.n = raw.n;
    result.kstar = kstar;
    result.per_individual.resize(individuals);
    result.unreachable_fraction.resize(individuals);
    for (std::size_t i = 0; i < individuals; ++i) {
        std::size_t total = 0;
        std::size_t unreachable = 0;
        for (std::size_t s = 0; s < raw.samples; ++s) {
            const auto& outcome = raw.outcomes[i * raw.samples + s];
            if (outcome && *outcome < kstar) {
                total += *outcome;
            } else {
                total += kstar;
                ++unreachable;
            }
        }
        result.per_individual[i] = static_cast<double>(total) / static_cast<double>(raw.samples);
        result.unreachable_fraction[i] = static_cast<double>(unreachable) / static_cast<double>(raw.samples);
    }
    const auto summary = summarize(result.per_individual);
    result.average = summary.average;
    result.variance = summary.variance;
    return result;
}

std::vector<DistributionResult> run_distribution(const ExperimentConfig& config)
{
    config.validate();
    std::vector<DistributionResult> results;
    for (auto n : config.n_values) {
        const auto raw = sample_outcomes(config, n);
        results.push_back(apply_kstar(raw, resolve_kstar(config.length, n, config.kstar)));
    }
    return results;
}

Summary summarize(const std::vector<double>& values)
{
    if (values.empty()) {
        return {};
    }
    double sum = 0.0;
    for (auto v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    double squares = 0.0;
    for (auto v : values) {
        squares += (v - mean) * (v - mean);
    }
    return {mean, squares / static_cast<double>(values.size())};
}

std::vector<HistogramBin> histogram(const std::vector<double>& values, double bin_width)
{
    if (!(bin_width > 0.0)) {
        throw std::invalid_argument("bin width must be positive");
    }
    if (values.empty()) {
        return {};
    }
    // Values sitting on a bin edge up to rounding belong to the upper bin.
    constexpr double kEdgeSlack = 1e-9;
    std::vector<long long> keys;
    keys.reserve(values.size());
    for (auto v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("histogram values must be finite and non-negative");
        }
        keys.push_back(static_cast<long long>(std::floor(v / bin_width + kEdgeSlack)));
    }
    const auto [lo, hi] = std::ranges::minmax(keys);
    std::vector<HistogramBin> bins(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < bins.size(); ++i) {
        bins[i].center = (static_cast<double>(lo + static_cast<long long>(i)) + 0.5) * bin_width;
    }
    for (auto k : keys) {
        ++bins[static_cast<std::size_t>(k - lo)].count;
    }
    return bins;
}

} // namespace xover
