#include "xover/gaussian_fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ranges>
#include <stdexcept>
#include <vector>

namespace xover {

namespace {

constexpr std::size_t kMaxIterations = 500;
constexpr double kRelativeTolerance = 1e-9;

double model(const Eigen::Vector3d& p, double x)
{
    const double z = (x - p(1)) / p(2);
    return p(0) * std::exp(-0.5 * z * z);
}

double squared_error(const Eigen::Vector3d& p, const Eigen::VectorXd& xs, const Eigen::VectorXd& ys)
{
    double sum = 0.0;
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const double r = ys(i) - model(p, xs(i));
        sum += r * r;
    }
    return sum;
}

} // namespace

double GaussianFit::operator()(double x) const noexcept
{
    const double z = (x - center) / sigma;
    return amplitude * std::exp(-0.5 * z * z);
}

GaussianFit fit_gaussian(std::span<const double> centers, std::span<const double> heights)
{
    if (centers.size() != heights.size()) {
        throw std::invalid_argument("Gaussian fit needs one height per center");
    }
    const auto positive = [](double h) { return h > 0.0; };
    if (std::ranges::count_if(heights, positive) < 3) {
        throw std::invalid_argument("Gaussian fit needs at least 3 non-empty bins");
    }
    const auto begin = static_cast<std::size_t>(std::ranges::find_if(heights, positive) - heights.begin());
    const auto end = heights.size() -
                     static_cast<std::size_t>(std::ranges::find_if(heights | std::views::reverse, positive) -
                                              std::ranges::rbegin(heights));

    const auto m = static_cast<Eigen::Index>(end - begin);
    Eigen::VectorXd xs(m);
    Eigen::VectorXd ys(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        xs(i) = centers[begin + static_cast<std::size_t>(i)];
        ys(i) = heights[begin + static_cast<std::size_t>(i)];
    }

    const double total = ys.sum();
    const double mean = xs.dot(ys) / total;
    const double spread = std::sqrt(((xs.array() - mean).square() * ys.array()).sum() / total);
    const double width = m >= 2 ? (xs(m - 1) - xs(0)) / static_cast<double>(m - 1) : 0.0;

    Eigen::Vector3d p(ys.maxCoeff(), mean, spread > 0.0 ? spread : std::max(width, 1e-3));
    double error = squared_error(p, xs, ys);
    double lambda = 1e-3;

    GaussianFit fit;
    fit.bin_width = width;
    const double scale = ys.squaredNorm();

    std::size_t iteration = 0;
    while (iteration < kMaxIterations) {
        ++iteration;
        Eigen::MatrixXd jacobian(m, 3);
        Eigen::VectorXd residuals(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double d = xs(i) - p(1);
            const double e = std::exp(-0.5 * d * d / (p(2) * p(2)));
            jacobian(i, 0) = e;
            jacobian(i, 1) = p(0) * e * d / (p(2) * p(2));
            jacobian(i, 2) = p(0) * e * d * d / (p(2) * p(2) * p(2));
            residuals(i) = ys(i) - p(0) * e;
        }
        const Eigen::Matrix3d normal = jacobian.transpose() * jacobian;
        const Eigen::Vector3d gradient = jacobian.transpose() * residuals;

        bool accepted = false;
        double next_error = error;
        Eigen::Vector3d next = p;
        for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
            Eigen::Matrix3d damped = normal;
            damped.diagonal() += lambda * normal.diagonal().cwiseMax(1e-12);
            next = p + damped.ldlt().solve(gradient);
            next_error = next(2) != 0.0 ? squared_error(next, xs, ys) : error;
            if (std::isfinite(next_error) && next_error <= error) {
                accepted = true;
                lambda = std::max(lambda / 10.0, 1e-12);
            } else {
                lambda *= 10.0;
            }
        }
        if (!accepted) {
            fit.converged = true;
            break;
        }
        const double change = error - next_error;
        p = next;
        error = next_error;
        if (change <= kRelativeTolerance * std::max(error, 1e-300) || error <= 1e-24 * scale) {
            fit.converged = true;
            break;
        }
    }

    fit.amplitude = p(0);
    fit.center = p(1);
    fit.sigma = std::abs(p(2));
    fit.residual = error;
    fit.iterations = iteration;
    return fit;
}

GaussianFit fit_gaussian(std::span<const HistogramBin> bins)
{
    std::vector<double> centers;
    std::vector<double> heights;
    for (const auto& b : bins) {
        centers.push_back(b.center);
        heights.push_back(static_cast<double>(b.count));
    }
    return fit_gaussian(centers, heights);
}

} // namespace xover
