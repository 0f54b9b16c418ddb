#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtsp/model.hpp"
#include "gtsp/solver.hpp"

namespace gtsp {

/// 100 * (solution - reference) / reference. Throws InputError unless
/// reference > 0.
double gap(Cost solution, Cost reference);

/// One solver execution inside an experiment.
struct RunRecord {
    std::string problem;
    Algorithm algorithm = Algorithm::Acs;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    Cost best_cost = 0.0;
    Cost reference_optimum = 0.0;
    std::size_t iterations = 0;
    double wall_time = 0.0;
};

struct GapRecord {
    std::string problem;
    Algorithm algorithm = Algorithm::Acs;
    std::vector<Cost> runs;
    Cost reference_optimum = 0.0;
    double mean_gap = 0.0;
};

/// Per (problem, algorithm) gaps. `problems` keeps the experiment order.
struct GapTable {
    std::vector<std::string> problems;
    std::vector<GapRecord> records;

    const GapRecord* find(std::string_view problem, Algorithm algorithm) const;
    /// Algorithms present, in report column order.
    std::vector<Algorithm> algorithms() const;
};

/// Groups runs by (problem, algorithm); problems keep first-seen order and
/// runs are ordered by run index.
GapTable tabulate(std::span<const RunRecord> runs);

struct ExperimentConfig {
    std::vector<std::filesystem::path> instance_files;

    // Seeded random instances generated in addition to the files.
    std::size_t random_instances = 0;
    std::size_t random_clusters = 6;
    std::size_t random_nodes = 18;
    double random_extent = 1000.0;

    std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
    std::size_t runs = 5;
    SolverParams params;  // seed is replaced per run
    std::uint64_t master_seed = 1;

    /// name -> reference optimum (from a fixtures file or the config).
    std::map<std::string, Cost> optima;
    /// Compute missing optima with the exact DP when the instance is small.
    bool exact_reference = false;
    std::size_t exact_cluster_limit = 12;

    double translate = 0.0;  // added to each deviation before the utility statistics
    bool per_run = false;    // utility over per-run gaps instead of per-problem means
    std::size_t jobs = 1;

    std::filesystem::path output_prefix = "bench";
};

/// Parses the key = value experiment file. Relative paths resolve against
/// `base_dir`. Throws ConfigError.
ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path& base_dir = {});

/// Reads "<name> <optimum>" lines ('#' starts a comment).
std::map<std::string, Cost> parse_optima(std::string_view text);

/// Seed of run `run` of algorithm `alg_index` on problem `problem_index`:
/// derive_seed(master, (problem_index * algorithms + alg_index) * runs + run).
std::uint64_t run_seed(std::uint64_t master, std::size_t problem_index, std::size_t alg_index,
                       std::size_t algorithms, std::size_t run, std::size_t runs);

struct ExperimentResult {
    std::vector<RunRecord> runs;  // sorted by (problem order, algorithm order, run index)
    GapTable table;
};

/// Runs every (instance, algorithm, run) cell, `config.jobs` at a time.
/// Throws ConfigError when an instance has no reference optimum.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Runs cells over already loaded instances. `optima[i]` is the reference for
/// `instances[i]`.
ExperimentResult run_experiment(const std::vector<Instance>& instances,
                                const std::vector<Cost>& optima, const ExperimentConfig& config);

inline constexpr double kUtilityGamma = 500.0;
inline constexpr double kUtilityBeta = 100.0;
inline constexpr double kUtilityT = 0.05;

struct EufStats {
    std::string algorithm;
    double x_bar = 0.0;
    double s2 = 0.0;
    double b_hat = 0.0;
    double c_hat = 0.0;
    double euf = 0.0;
    std::size_t rank = 0;
    /// Set when x_bar or s2 is zero and euf takes its limiting value.
    std::optional<std::string> note;
};

/// Expected utility from the mean and (1/np) variance of the deviations.
/// Throws DomainError when 1 - b_hat * t <= 0.
EufStats expected_utility_from_moments(double x_bar, double s2);

/// Mean, 1/np variance, then expected_utility_from_moments. `translate` is
/// added to every deviation first. Throws InputError on an empty list.
EufStats expected_utility(std::span<const double> deviations, double translate = 0.0);

/// Per-algorithm deviations from a gap table: per-problem mean gaps, or
/// every run's gap when `per_run`.
std::vector<double> deviations_for(const GapTable& table, Algorithm algorithm, bool per_run);

/// Descending euf, ties by lower x_bar; fills `rank` (1 = best).
std::vector<EufStats> rank_algorithms(std::vector<EufStats> stats);

enum class ReportFormat { Csv, Markdown };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Gap table: "Problem" then one column per algorithm in ACS..SSAS order.
/// CSV cells use shortest round-trip numbers; markdown rounds to 2 decimals.
std::string emit_report(const GapTable& table, ReportFormat format);

/// Utility table: algorithm, x_bar, s2, b_hat, c_hat, euf, rank.
std::string emit_report(std::span<const EufStats> stats, ReportFormat format);

/// Parses CSV produced by emit_report(GapTable, Csv): problem -> algorithm -> mean gap.
std::vector<std::pair<std::string, std::map<Algorithm, double>>> parse_gap_csv(std::string_view text);

/// One JSON object per line.
std::string format_run_log(std::span<const RunRecord> runs);
std::vector<RunRecord> parse_run_log(std::string_view text);

}  // namespace gtsp
