#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtsp/bench.hpp"
#include "gtsp/error.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/oracle.hpp"
#include "gtsp/solver.hpp"

namespace gtsp::cli {

namespace {

namespace fs = std::filesystem;

std::string format_cost(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_tour(const Tour& tour) {
    std::string out;
    for (std::size_t k = 0; k < tour.nodes.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(tour.nodes[k] + 1);
    }
    return out;
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    f << text;
    if (!f) throw InputError("failed writing '" + path.string() + "'");
}

const std::map<std::string, Algorithm> kAlgorithmNames = {
    {"acs", Algorithm::Acs}, {"racs", Algorithm::Racs}, {"sacs", Algorithm::Sacs},
    {"srm", Algorithm::Srm}, {"ssas", Algorithm::Ssas}};

const std::map<std::string, ReportFormat> kFormatNames = {
    {"csv", ReportFormat::Csv}, {"markdown", ReportFormat::Markdown}, {"md", ReportFormat::Markdown}};

struct SolveOptions {
    std::string instance;
    Algorithm algorithm = Algorithm::Racs;
    SolverParams params;
    std::optional<double> optimum;
    std::string srm_team_draw = "per_step";
};

struct ClusterOptions {
    std::string input;
    std::optional<std::size_t> clusters;
    double ratio = 5.0;
    std::string output;
};

struct ExactOptions {
    std::string instance;
    std::size_t max_clusters = kDefaultDpClusterLimit;
    bool bruteforce = false;
};

struct BenchOptions {
    std::string config;
    std::optional<std::size_t> jobs;
    std::string output;
};

struct ReportOptions {
    std::string log;
    ReportFormat format = ReportFormat::Markdown;
    bool euf = false;
    bool per_run = false;
    double translate = 0.0;
};

void add_solver_flags(CLI::App& cmd, SolveOptions& o) {
    cmd.add_option("--alg,--algorithm", o.algorithm, "acs, racs, sacs, srm or ssas")
        ->transform(CLI::CheckedTransformer(kAlgorithmNames, CLI::ignore_case));
    cmd.add_option("--seed", o.params.seed, "RNG seed");
    cmd.add_option("--iterations", o.params.max_iterations, "iteration budget (0 = none)");
    cmd.add_option("--time-limit", o.params.time_limit, "wall-clock budget in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--ants", o.params.ants, "number of agents")->check(CLI::PositiveNumber);
    cmd.add_option("--beta", o.params.beta, "visibility exponent")->check(CLI::NonNegativeNumber);
    cmd.add_option("--rho", o.params.rho, "evaporation rate in (0, 1)");
    cmd.add_option("--q0", o.params.q0, "exploitation threshold")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--s0", o.params.s0, "SACS sensitivity split")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--psl", o.params.psl, "SSAS sensitivity level")->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--ssas-boost", o.params.ssas_message_boost, "SSAS announced-edge boost");
    cmd.add_option("--ssas-horizon", o.params.ssas_knowledge_horizon,
                   "iterations an announcement stays in the knowledge base");
    cmd.add_option("--srm-team-draw", o.srm_team_draw, "per_step or per_tour")
        ->check(CLI::IsMember({"per_step", "per_tour"}));
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const Instance instance = read_gtsp_file(o.instance);
    SolverParams params = o.params;
    params.srm_team_draw = o.srm_team_draw == "per_tour" ? SrmTeamDraw::PerTour : SrmTeamDraw::PerStep;
    const SolveResult result = run(o.algorithm, instance, params);

    out << "instance: " << instance.name() << '\n'
        << "algorithm: " << algorithm_name(o.algorithm) << '\n'
        << "seed: " << params.seed << '\n'
        << "best_cost: " << format_cost(result.best_cost) << '\n';
    if (o.optimum) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", gap(result.best_cost, *o.optimum));
        out << "gap: " << buf << '\n';
    }
    out << "iterations: " << result.iterations_used << '\n'
        << "tour: " << format_tour(result.best_tour) << '\n';
    return kSuccess;
}

int cmd_exact(const ExactOptions& o, std::ostream& out) {
    const Instance instance = read_gtsp_file(o.instance);
    const ExactResult r = o.bruteforce ? exact_optimum_bruteforce(instance)
                                       : exact_optimum_dp(instance, o.max_clusters);
    out << "instance: " << instance.name() << '\n'
        << "method: " << (o.bruteforce ? "bruteforce" : "held-karp") << '\n'
        << "optimum: " << format_cost(r.optimum_cost) << '\n'
        << "states: " << r.states_expanded << '\n'
        << "tour: " << format_tour(r.optimum_tour) << '\n';
    return kSuccess;
}

int cmd_cluster(const ClusterOptions& o, std::ostream& out) {
    const NodeSet nodes = read_tsplib_file(o.input);
    const std::size_t nc = o.clusters ? *o.clusters
                                      : static_cast<std::size_t>(std::ceil(
                                            static_cast<double>(nodes.size()) / o.ratio));
    const Clustering clustering = cluster_fischetti(nodes, nc);
    const Instance instance = make_instance(nodes, clustering, clustered_name(nodes.name, nc));
    const fs::path target = o.output.empty()
                                ? fs::path(o.input).parent_path() / (instance.name() + ".gtsp")
                                : fs::path(o.output);
    write_file(target, write_gtsp_instance(instance));
    out << "wrote " << target.string() << " (" << instance.cluster_count() << " sets, "
        << instance.node_count() << " nodes)\n";
    return kSuccess;
}

std::vector<EufStats> utility_table(const GapTable& table, bool per_run, double translate) {
    std::vector<EufStats> stats;
    for (Algorithm a : table.algorithms()) {
        EufStats s = expected_utility(deviations_for(table, a, per_run), translate);
        s.algorithm = std::string(algorithm_name(a));
        stats.push_back(std::move(s));
    }
    return rank_algorithms(std::move(stats));
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    const fs::path config_path(o.config);
    ExperimentConfig config =
        parse_experiment_config(read_text_file(config_path), config_path.parent_path());
    if (o.jobs) config.jobs = *o.jobs;
    if (!o.output.empty()) config.output_prefix = o.output;

    const ExperimentResult result = run_experiment(config);
    const std::vector<EufStats> utility = utility_table(result.table, config.per_run, config.translate);

    const std::string prefix = config.output_prefix.string();
    write_file(prefix + ".csv", emit_report(result.table, ReportFormat::Csv));
    write_file(prefix + ".md", emit_report(result.table, ReportFormat::Markdown));
    write_file(prefix + ".jsonl", format_run_log(result.runs));
    write_file(prefix + "_euf.csv", emit_report(utility, ReportFormat::Csv));
    write_file(prefix + "_euf.md", emit_report(utility, ReportFormat::Markdown));

    out << emit_report(result.table, ReportFormat::Markdown) << '\n'
        << emit_report(utility, ReportFormat::Markdown)
        << "\nwrote " << prefix << ".{csv,md,jsonl} and " << prefix << "_euf.{csv,md}\n";
    return kSuccess;
}

int cmd_report(const ReportOptions& o, std::ostream& out) {
    const auto runs = parse_run_log(read_text_file(o.log));
    const GapTable table = tabulate(runs);
    if (o.euf) {
        out << emit_report(utility_table(table, o.per_run, o.translate), o.format);
    } else {
        out << emit_report(table, o.format);
    }
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Agent-based metaheuristics for the equality generalized TSP", "gtsp_colony"};
    app.require_subcommand(1, 1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "run one metaheuristic on a .gtsp instance");
    solve_cmd->add_option("instance", solve.instance, ".gtsp file")->required();
    add_solver_flags(*solve_cmd, solve);
    solve_cmd->add_option("--optimum", solve.optimum, "reference optimum; prints the gap")
        ->check(CLI::PositiveNumber);

    ExactOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "exact optimum of a small instance");
    exact_cmd->add_option("instance", exact.instance, ".gtsp file")->required();
    exact_cmd->add_option("--max-clusters", exact.max_clusters, "refuse larger instances");
    exact_cmd->add_flag("--bruteforce", exact.bruteforce, "enumerate instead of Held-Karp");

    ClusterOptions cluster;
    auto* cluster_cmd = app.add_subcommand("cluster", "cluster a TSPLIB EUC_2D file into a .gtsp");
    cluster_cmd->add_option("tsp", cluster.input, ".tsp file")->required();
    auto* nc_opt = cluster_cmd->add_option("--clusters", cluster.clusters, "number of clusters");
    cluster_cmd->add_option("--ratio", cluster.ratio, "nodes per cluster (nc = ceil(n / ratio))")
        ->check(CLI::PositiveNumber)
        ->excludes(nc_opt);
    cluster_cmd->add_option("-o,--output", cluster.output, "output path");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "run an experiment file and write reports");
    bench_cmd->add_option("config", bench.config, "experiment file")->required();
    bench_cmd->add_option("--jobs", bench.jobs, "concurrent runs")
        ->envname("GTSP_COLONY_JOBS")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("-o,--output", bench.output, "output prefix (overrides the config)");

    ReportOptions report;
    auto* report_cmd = app.add_subcommand("report", "tabulate a bench JSON-lines log");
    report_cmd->add_option("log", report.log, "runs .jsonl file")->required();
    report_cmd->add_option("--format", report.format, "csv or markdown")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    report_cmd->add_flag("--euf", report.euf, "expected-utility ranking instead of gaps");
    report_cmd->add_flag("--per-run", report.per_run, "utility over per-run gaps");
    report_cmd->add_option("--translate", report.translate, "add this to every deviation");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << failing->help();
        return kUsageError;
    }

    if (*solve_cmd) {
        try {
            solve.params.validate();
        } catch (const InputError& e) {
            err << "error: " << e.what() << '\n';
            return kUsageError;
        }
    }

    try {
        if (*solve_cmd) return cmd_solve(solve, out);
        if (*exact_cmd) return cmd_exact(exact, out);
        if (*cluster_cmd) return cmd_cluster(cluster, out);
        if (*bench_cmd) return cmd_bench(bench, out);
        if (*report_cmd) return cmd_report(report, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}

}  // namespace gtsp::cli
