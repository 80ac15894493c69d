#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "xover/experiment.hpp"
#include "xover/gaussian_fit.hpp"

namespace xover {

inline constexpr double kHistogramBinWidth = 0.05;

/// Histogram of one distribution plus its Gaussian fits, with and without the
/// target genome's own value.
struct DistributionFit {
    std::size_t n = 0;
    std::vector<HistogramBin> bins;
    std::optional<GaussianFit> fit;
    std::optional<GaussianFit> fit_without_target;
    std::string failure;
};

DistributionFit fit_distribution(const DistributionResult& result, const ExperimentConfig& config,
                                 double bin_width = kHistogramBinWidth);

/// genome,n,mean_distance,samples,unreachable_fraction
std::string results_csv(const std::vector<DistributionResult>& results, const ExperimentConfig& config);
/// n,average,variance,kstar,semantics,seed
std::string summary_csv(const std::vector<DistributionResult>& results, const ExperimentConfig& config);
/// n,bin_center,count,fit_value, fit parameters as leading '#' comment lines.
std::string histogram_csv(const std::vector<DistributionFit>& fits);

/// Writes results.csv, summary.csv and histogram.csv into `directory`, each
/// atomically. Returns the written paths.
std::vector<std::filesystem::path> write_experiment_outputs(const std::filesystem::path& directory,
                                                            const std::vector<DistributionResult>& results,
                                                            const ExperimentConfig& config);

} // namespace xover
