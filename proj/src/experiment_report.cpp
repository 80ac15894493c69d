#include "xover/experiment_report.hpp"

#include <stdexcept>

#include "xover/csv.hpp"

namespace xover {

namespace {

std::string describe(const GaussianFit& fit)
{
    return "amplitude=" + csv::format_double(fit.amplitude) + " center=" + csv::format_double(fit.center) +
           " sigma=" + csv::format_double(fit.sigma) + " residual=" + csv::format_double(fit.residual) +
           " iterations=" + std::to_string(fit.iterations) + " converged=" + (fit.converged ? "true" : "false");
}

} // namespace

DistributionFit fit_distribution(const DistributionResult& result, const ExperimentConfig& config, double bin_width)
{
    DistributionFit out;
    out.n = result.n;
    out.bins = histogram(result.per_individual, bin_width);

    std::vector<double> without_target;
    const Genome target = config.resolved_target();
    for (std::size_t i = 0; i < result.per_individual.size(); ++i) {
        if (genome_at(i, config.length, 2) != target) {
            without_target.push_back(result.per_individual[i]);
        }
    }
    try {
        out.fit = fit_gaussian(out.bins);
    } catch (const std::invalid_argument& e) {
        out.failure = e.what();
    }
    try {
        out.fit_without_target = fit_gaussian(histogram(without_target, bin_width));
    } catch (const std::invalid_argument&) {
    }
    return out;
}

std::string results_csv(const std::vector<DistributionResult>& results, const ExperimentConfig& config)
{
    csv::Writer writer;
    writer.row({"genome", "n", "mean_distance", "samples", "unreachable_fraction"});
    for (const auto& result : results) {
        for (std::size_t i = 0; i < result.per_individual.size(); ++i) {
            writer.row({genome_at(i, config.length, 2).to_string(), std::to_string(result.n),
                        csv::format_double(result.per_individual[i]),
                        std::to_string(config.samples_per_individual),
                        csv::format_double(result.unreachable_fraction[i])});
        }
    }
    return writer.str();
}

std::string summary_csv(const std::vector<DistributionResult>& results, const ExperimentConfig& config)
{
    csv::Writer writer;
    writer.row({"n", "average", "variance", "kstar", "semantics", "seed"});
    for (const auto& result : results) {
        writer.row({std::to_string(result.n), csv::format_double(result.average), csv::format_double(result.variance),
                    std::to_string(result.kstar), std::string(to_string(config.semantics)),
                    std::to_string(config.seed)});
    }
    return writer.str();
}

std::string histogram_csv(const std::vector<DistributionFit>& fits)
{
    csv::Writer writer;
    for (const auto& f : fits) {
        const std::string prefix = "n=" + std::to_string(f.n) + " ";
        if (f.fit) {
            writer.comment(prefix + "fit " + describe(*f.fit));
        } else {
            writer.comment(prefix + "fit unavailable: " + f.failure);
        }
        if (f.fit_without_target) {
            writer.comment(prefix + "fit_without_target " + describe(*f.fit_without_target));
        }
    }
    writer.row({"n", "bin_center", "count", "fit_value"});
    for (const auto& f : fits) {
        for (const auto& bin : f.bins) {
            writer.row({std::to_string(f.n), csv::format_double(bin.center), std::to_string(bin.count),
                        f.fit ? csv::format_double((*f.fit)(bin.center)) : std::string{}});
        }
    }
    return writer.str();
}

std::vector<std::filesystem::path> write_experiment_outputs(const std::filesystem::path& directory,
                                                            const std::vector<DistributionResult>& results,
                                                            const ExperimentConfig& config)
{
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + directory.string() + ": " + ec.message());
    }
    std::vector<DistributionFit> fits;
    for (const auto& r : results) {
        fits.push_back(fit_distribution(r, config));
    }
    const std::vector<std::pair<std::string, std::string>> files{
        {"results.csv", results_csv(results, config)},
        {"summary.csv", summary_csv(results, config)},
        {"histogram.csv", histogram_csv(fits)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, text] : files) {
        const auto path = directory / name;
        csv::write_file_atomic(path, text);
        written.push_back(path);
    }
    return written;
}

} // namespace xover
