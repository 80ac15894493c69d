// xover: crossover distances, reachability closures, and the distance
// distribution experiment.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 fast/oracle disagreement.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xover/crossover.hpp"
#include "xover/csv.hpp"
#include "xover/distance.hpp"
#include "xover/experiment.hpp"
#include "xover/experiment_report.hpp"
#include "xover/oracle.hpp"
#include "xover/population_io.hpp"
#include "xover/version.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDisagreement = 4;

struct Disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DistanceOptions {
    std::string first;
    std::string second;
    std::size_t n = 1;
    std::string kstar = "log";
    std::string semantics = "closure";
    std::string engine = "fast";
    std::string alphabet = "01";
};

struct ClosureOptions {
    std::string population;
    std::size_t n = 1;
    std::size_t max_gen = 64;
    std::string watch;
    std::string alphabet = "01";
};

struct ExperimentOptions {
    std::size_t length = 8;
    std::vector<std::size_t> n_list{1, 2, 3, 4, 5, 6, 7};
    std::size_t samples = 100;
    std::size_t pop_size = 4;
    std::string target;
    std::uint64_t seed = 1;
    std::string kstar = "log";
    std::string semantics = "containment";
    std::string out_dir = "xover-out";
    std::string from_manifest;
    std::size_t threads = 0;
    bool force = false;
};

std::size_t env_thread_cap()
{
    if (const char* value = std::getenv("XOVER_THREADS")) {
        try {
            return static_cast<std::size_t>(std::stoul(value));
        } catch (const std::exception&) {
            throw std::invalid_argument("XOVER_THREADS must be a non-negative integer");
        }
    }
    return 0;
}

std::string iso_time_now()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

int run_distance(const DistanceOptions& opt)
{
    const xover::Alphabet alphabet(opt.alphabet);
    const auto p1 = xover::load_population(opt.first, alphabet);
    const auto p2 = xover::load_population(opt.second, alphabet);
    xover::require_non_empty(p1, opt.first);
    xover::require_non_empty(p2, opt.second);
    xover::require_same_length({&p1, &p2});
    const auto policy = xover::KStarPolicy::parse(opt.kstar);
    const auto semantics = xover::parse_semantics(opt.semantics);

    const bool fast = opt.engine == "fast" || opt.engine == "both";
    const bool reference = opt.engine == "oracle" || opt.engine == "both";
    if (reference) {
        xover::oracle::require_oracle_size(alphabet.size(), p1.length());
    }

    auto report = [&](std::string_view engine, const xover::DistanceValue& forward,
                      const xover::DistanceValue& backward) {
        const xover::Rational d(static_cast<std::int64_t>(forward.numeric_value() + backward.numeric_value()), 2);
        std::cout << "engine: " << engine << '\n'
                  << "f(P1,P2) = " << forward.to_string() << '\n'
                  << "f(P2,P1) = " << backward.to_string() << '\n'
                  << "d(P1,P2) = " << d.to_string() << '\n';
    };

    std::cout << "n = " << opt.n << ", semantics = " << xover::to_string(semantics)
              << ", k* = " << xover::resolve_kstar(p1.length(), opt.n, policy) << " (" << policy.to_string() << ")\n";

    std::optional<std::pair<xover::DistanceValue, xover::DistanceValue>> fast_result;
    if (fast) {
        fast_result.emplace(xover::directed_distance(p1, p2, opt.n, policy, semantics),
                            xover::directed_distance(p2, p1, opt.n, policy, semantics));
        report("fast", fast_result->first, fast_result->second);
    }
    if (reference) {
        const auto forward = xover::oracle::oracle_directed_distance(p1, p2, opt.n, policy, semantics, alphabet);
        const auto backward = xover::oracle::oracle_directed_distance(p2, p1, opt.n, policy, semantics, alphabet);
        report("oracle", forward, backward);
        if (fast_result && (fast_result->first != forward || fast_result->second != backward)) {
            throw Disagreement("fast engine and oracle disagree");
        }
        if (fast_result) {
            std::cout << "engines agree\n";
        }
    }
    return 0;
}

int run_closure(const ClosureOptions& opt)
{
    const xover::Alphabet alphabet(opt.alphabet);
    const auto population = xover::load_population(opt.population, alphabet);
    xover::require_non_empty(population, opt.population);
    const auto sequence = xover::oracle::s_sequence(population, opt.n, alphabet);

    const std::size_t shown = std::min(sequence.stages.size(), opt.max_gen + 1);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& stage = sequence.stages[i];
        std::cout << "stage " << i << ": " << stage.size() << " members";
        if (i == sequence.fixed_point_index) {
            std::cout << " (fixed point)";
        }
        std::cout << '\n';
        for (const auto& g : stage) {
            std::cout << "  " << g.to_string(alphabet) << '\n';
        }
    }
    if (shown < sequence.stages.size()) {
        std::cout << "stopped at --max-gen " << opt.max_gen << " before the fixed point\n";
    }
    std::cout << "fixed point index: " << sequence.fixed_point_index << '\n';
    if (!opt.watch.empty()) {
        const auto genome = xover::Genome::parse(opt.watch, alphabet);
        const auto stage = sequence.first_stage_containing(genome);
        std::cout << opt.watch << " first appears at stage "
                  << (stage ? std::to_string(*stage) : std::string("never")) << '\n';
    }
    return 0;
}

nlohmann::json config_to_json(const xover::ExperimentConfig& config)
{
    return {
        {"length", config.length},
        {"n_values", config.n_values},
        {"samples_per_individual", config.samples_per_individual},
        {"random_pop_size", config.random_pop_size},
        {"target", config.resolved_target().to_string()},
        {"seed", config.seed},
        {"kstar", config.kstar.to_string()},
        {"semantics", std::string(xover::to_string(config.semantics))},
    };
}

xover::ExperimentConfig config_from_json(const nlohmann::json& j)
{
    xover::ExperimentConfig config;
    config.length = j.at("length").get<std::size_t>();
    config.n_values = j.at("n_values").get<std::vector<std::size_t>>();
    config.samples_per_individual = j.at("samples_per_individual").get<std::size_t>();
    config.random_pop_size = j.at("random_pop_size").get<std::size_t>();
    config.target = xover::Genome::parse(j.at("target").get<std::string>());
    config.seed = j.at("seed").get<std::uint64_t>();
    config.kstar = xover::KStarPolicy::parse(j.at("kstar").get<std::string>());
    config.semantics = xover::parse_semantics(j.at("semantics").get<std::string>());
    return config;
}

int run_experiment(const ExperimentOptions& opt, const std::string& command_line)
{
    xover::ExperimentConfig config;
    if (!opt.from_manifest.empty()) {
        std::ifstream in(opt.from_manifest);
        if (!in) {
            throw std::invalid_argument("cannot open manifest " + opt.from_manifest);
        }
        try {
            config = config_from_json(nlohmann::json::parse(in).at("config"));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
        }
    } else {
        config.length = opt.length;
        config.n_values = opt.n_list;
        config.samples_per_individual = opt.samples;
        config.random_pop_size = opt.pop_size;
        if (!opt.target.empty()) {
            config.target = xover::Genome::parse(opt.target);
        }
        config.seed = opt.seed;
        config.kstar = xover::KStarPolicy::parse(opt.kstar);
        config.semantics = xover::parse_semantics(opt.semantics);
    }
    if (config.length > 12 && !opt.force) {
        std::cerr << "warning: length " << config.length << " enumerates " << (std::size_t{1} << config.length)
                  << " individuals; this may take a long time\n";
    }
    const std::size_t cap = env_thread_cap();
    config.threads = opt.threads;
    if (cap > 0 && (config.threads == 0 || config.threads > cap)) {
        config.threads = cap;
    }
    config.validate();

    const auto started = std::chrono::steady_clock::now();
    const auto started_at = iso_time_now();
    const auto results = xover::run_distribution(config);
    const auto written = xover::write_experiment_outputs(opt.out_dir, results, config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

    nlohmann::json kstars = nlohmann::json::object();
    for (const auto& r : results) {
        kstars[std::to_string(r.n)] = r.kstar;
    }
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto& path : written) {
        outputs.push_back(path.filename().string());
    }
    const nlohmann::json manifest{
        {"tool", "xover"},
        {"version", xover::kVersion},
        {"command", command_line},
        {"config", config_to_json(config)},
        {"seed", config.seed},
        {"kstar_resolved", kstars},
        {"semantics", std::string(xover::to_string(config.semantics))},
        {"variance", "population"},
        {"started_at", started_at},
        {"wall_clock_seconds", elapsed.count()},
        {"outputs", outputs},
    };
    xover::csv::write_file_atomic(std::filesystem::path(opt.out_dir) / "manifest.json", manifest.dump(2) + "\n");

    std::cout << "n,average,variance,kstar\n";
    for (const auto& r : results) {
        double unreachable = 0.0;
        for (auto f : r.unreachable_fraction) {
            unreachable += f;
        }
        unreachable /= static_cast<double>(r.unreachable_fraction.size());
        std::cout << r.n << ',' << xover::csv::format_double(r.average) << ','
                  << xover::csv::format_double(r.variance) << ',' << r.kstar
                  << "  # unreachable fraction " << xover::csv::format_double(unreachable) << '\n';
    }
    std::cout << "wrote " << written.size() + 1 << " files to " << opt.out_dir << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Crossover distances, closures and distance-distribution experiments"};
    app.set_version_flag("--version", std::string(xover::kVersion));
    app.require_subcommand(1);

    DistanceOptions distance;
    auto* distance_cmd = app.add_subcommand("distance", "Directed and symmetric distance between two populations");
    distance_cmd->add_option("pop1", distance.first, "First population file")->required()->check(CLI::ExistingFile);
    distance_cmd->add_option("pop2", distance.second, "Second population file")->required()->check(CLI::ExistingFile);
    distance_cmd->add_option("-n,--n", distance.n, "Crossover points")->required()->check(CLI::PositiveNumber);
    distance_cmd->add_option("--kstar", distance.kstar, "k*: 'log' or a positive integer")->capture_default_str();
    distance_cmd->add_option("--semantics", distance.semantics, "closure or containment")
        ->check(CLI::IsMember({"closure", "containment"}))
        ->capture_default_str();
    distance_cmd->add_option("--engine", distance.engine, "fast, oracle or both")
        ->check(CLI::IsMember({"fast", "oracle", "both"}))
        ->capture_default_str();
    distance_cmd->add_option("--alphabet", distance.alphabet, "Alphabet symbols")->capture_default_str();

    ClosureOptions closure;
    auto* closure_cmd = app.add_subcommand("closure", "List the reachability stages S_0, S_1, ... of a population");
    closure_cmd->add_option("pop", closure.population, "Population file")->required()->check(CLI::ExistingFile);
    closure_cmd->add_option("-n,--n", closure.n, "Crossover points")->required()->check(CLI::PositiveNumber);
    closure_cmd->add_option("--max-gen", closure.max_gen, "Last stage to print")->capture_default_str();
    closure_cmd->add_option("--watch", closure.watch, "Report the first stage containing this genome");
    closure_cmd->add_option("--alphabet", closure.alphabet, "Alphabet symbols")->capture_default_str();

    ExperimentOptions experiment;
    auto* experiment_cmd = app.add_subcommand("experiment", "Distance-to-target distribution over all genomes");
    experiment_cmd->add_option("--length", experiment.length, "Genome length")->capture_default_str();
    experiment_cmd->add_option("--n-list", experiment.n_list, "Crossover counts")->delimiter(',')->capture_default_str();
    experiment_cmd->add_option("--samples", experiment.samples, "Random populations per genome")->capture_default_str();
    experiment_cmd->add_option("--pop-size", experiment.pop_size, "Random members per population")->capture_default_str();
    experiment_cmd->add_option("--target", experiment.target, "Target genome (default all ones)");
    experiment_cmd->add_option("--seed", experiment.seed, "Random seed")->capture_default_str();
    experiment_cmd->add_option("--kstar", experiment.kstar, "k*: 'log' or a positive integer")->capture_default_str();
    experiment_cmd->add_option("--semantics", experiment.semantics, "closure or containment")
        ->check(CLI::IsMember({"closure", "containment"}))
        ->capture_default_str();
    experiment_cmd->add_option("--out-dir", experiment.out_dir, "Output directory")->capture_default_str();
    experiment_cmd->add_option("--threads", experiment.threads, "Worker threads (0 = all cores)")->capture_default_str();
    experiment_cmd->add_option("--from-manifest", experiment.from_manifest, "Rerun the configuration of a manifest.json")
        ->check(CLI::ExistingFile);
    experiment_cmd->add_flag("--force", experiment.force, "Skip the runtime warning for long genomes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    std::string command_line;
    for (int i = 0; i < argc; ++i) {
        command_line += (i ? " " : "") + std::string(argv[i]);
    }

    try {
        if (*distance_cmd) {
            return run_distance(distance);
        }
        if (*closure_cmd) {
            return run_closure(closure);
        }
        return run_experiment(experiment, command_line);
    } catch (const Disagreement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
