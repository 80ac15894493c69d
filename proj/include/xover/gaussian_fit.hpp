#pragma once

#include <cstddef>
#include <span>

#include "xover/experiment.hpp"

namespace xover {

/// a * exp(-(x - center)^2 / (2 sigma^2)) fitted to histogram counts.
struct GaussianFit {
    double amplitude = 0.0;
    double center = 0.0;
    double sigma = 1.0;
    double bin_width = 0.0;
    /// Sum of squared residuals at the solution.
    double residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;

    [[nodiscard]] double peak() const noexcept { return amplitude; }
    [[nodiscard]] double operator()(double x) const noexcept;
};

/// Levenberg-Marquardt least squares over every bin between the first and last
/// non-empty one. Starts from a = max count, center = weighted mean, sigma =
/// weighted standard deviation; stops when the relative change of the residual
/// drops below 1e-9 or after 500 iterations.
/// Throws std::invalid_argument with fewer than 3 non-empty bins.
GaussianFit fit_gaussian(std::span<const HistogramBin> bins);
/// The same fit on arbitrary (center, height) points, for heights that are not counts.
GaussianFit fit_gaussian(std::span<const double> centers, std::span<const double> heights);

} // namespace xover
