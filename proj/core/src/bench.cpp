#include "gtsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gtsp/error.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/oracle.hpp"
#include "gtsp/rng.hpp"

namespace gtsp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (any || !field.empty()) {
                row.push_back(std::move(field));
                rows.push_back(std::move(row));
            }
            row.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
    T out{};
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError("bad value '" + std::string(value) + "' for '" + std::string(key) + "'");
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw ConfigError("bad boolean '" + std::string(value) + "' for '" + std::string(key) + "'");
}

std::string unquote(std::string_view v) {
    v = trim(v);
    if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') || (v.front() == '\'' && v.back() == '\''))) {
        v = v.substr(1, v.size() - 2);
    }
    return std::string(v);
}

std::vector<std::string> parse_list(std::string_view v) {
    v = trim(v);
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        std::size_t comma = v.find(',', pos);
        if (comma == std::string_view::npos) comma = v.size();
        std::string item = unquote(v.substr(pos, comma - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

double gap(Cost solution, Cost reference) {
    if (!(reference > 0.0)) {
        throw InputError("reference cost must be positive, got " + shortest(reference));
    }
    return 100.0 * (solution - reference) / reference;
}

const GapRecord* GapTable::find(std::string_view problem, Algorithm algorithm) const {
    for (const GapRecord& r : records) {
        if (r.problem == problem && r.algorithm == algorithm) return &r;
    }
    return nullptr;
}

std::vector<Algorithm> GapTable::algorithms() const {
    std::vector<Algorithm> out;
    for (Algorithm a : kAllAlgorithms) {
        if (std::any_of(records.begin(), records.end(),
                        [a](const GapRecord& r) { return r.algorithm == a; })) {
            out.push_back(a);
        }
    }
    return out;
}

GapTable tabulate(std::span<const RunRecord> runs) {
    std::vector<const RunRecord*> sorted;
    for (const RunRecord& r : runs) sorted.push_back(&r);

    GapTable table;
    for (const RunRecord* r : sorted) {
        if (std::find(table.problems.begin(), table.problems.end(), r->problem) == table.problems.end()) {
            table.problems.push_back(r->problem);
        }
    }
    auto problem_index = [&](const std::string& p) {
        return std::find(table.problems.begin(), table.problems.end(), p) - table.problems.begin();
    };
    std::stable_sort(sorted.begin(), sorted.end(), [&](const RunRecord* a, const RunRecord* b) {
        const auto pa = problem_index(a->problem);
        const auto pb = problem_index(b->problem);
        if (pa != pb) return pa < pb;
        if (a->algorithm != b->algorithm) return a->algorithm < b->algorithm;
        return a->run_index < b->run_index;
    });

    for (const RunRecord* r : sorted) {
        if (table.records.empty() || table.records.back().problem != r->problem ||
            table.records.back().algorithm != r->algorithm) {
            table.records.push_back(GapRecord{r->problem, r->algorithm, {}, r->reference_optimum, 0.0});
        }
        table.records.back().runs.push_back(r->best_cost);
    }
    for (GapRecord& rec : table.records) {
        double sum = 0.0;
        for (Cost c : rec.runs) sum += gap(c, rec.reference_optimum);
        rec.mean_gap = sum / static_cast<double>(rec.runs.size());
    }
    return table;
}

std::map<std::string, Cost> parse_optima(std::string_view text) {
    std::map<std::string, Cost> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string name;
        std::string value;
        if (!(fields >> name)) continue;
        if (!(fields >> value)) {
            throw ConfigError("optima line " + std::to_string(line_no) + ": missing value");
        }
        out[name] = parse_value<double>("optimum of " + name, value);
    }
    return out;
}

ExperimentConfig parse_experiment_config(std::string_view text, const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        std::string_view rest = line.substr(eq + 1);
        // Trailing comments outside quotes.
        if (auto hash = rest.find(" #"); hash != std::string_view::npos) rest = rest.substr(0, hash);
        const std::string value = unquote(rest);

        if (key == "instances") {
            for (const auto& p : parse_list(rest)) config.instance_files.push_back(resolve(p));
        } else if (key == "optima_file") {
            const auto optima = parse_optima(read_text_file(resolve(value)));
            config.optima.insert(optima.begin(), optima.end());
        } else if (key == "optima") {
            for (const auto& item : parse_list(rest)) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) throw ConfigError("optima entries are name:value");
                config.optima[std::string(trim(std::string_view(item).substr(0, colon)))] =
                    parse_value<double>(key, trim(std::string_view(item).substr(colon + 1)));
            }
        } else if (key == "random_instances") {
            config.random_instances = parse_value<std::size_t>(key, value);
        } else if (key == "random_clusters") {
            config.random_clusters = parse_value<std::size_t>(key, value);
        } else if (key == "random_nodes") {
            config.random_nodes = parse_value<std::size_t>(key, value);
        } else if (key == "random_extent") {
            config.random_extent = parse_value<double>(key, value);
        } else if (key == "algorithms") {
            config.algorithms.clear();
            for (const auto& name : parse_list(rest)) {
                auto alg = parse_algorithm(name);
                if (!alg) throw ConfigError("unknown algorithm '" + name + "'");
                config.algorithms.push_back(*alg);
            }
        } else if (key == "runs") {
            config.runs = parse_value<std::size_t>(key, value);
        } else if (key == "time_limit") {
            config.params.time_limit = parse_value<double>(key, value);
        } else if (key == "max_iterations") {
            config.params.max_iterations = parse_value<std::size_t>(key, value);
        } else if (key == "seed") {
            config.master_seed = parse_value<std::uint64_t>(key, value);
        } else if (key == "translate") {
            config.translate = parse_value<double>(key, value);
        } else if (key == "per_run") {
            config.per_run = parse_bool(key, value);
        } else if (key == "exact_reference") {
            config.exact_reference = parse_bool(key, value);
        } else if (key == "exact_cluster_limit") {
            config.exact_cluster_limit = parse_value<std::size_t>(key, value);
        } else if (key == "jobs") {
            config.jobs = parse_value<std::size_t>(key, value);
        } else if (key == "output") {
            config.output_prefix = resolve(value);
        } else if (key == "beta") {
            config.params.beta = parse_value<double>(key, value);
        } else if (key == "rho") {
            config.params.rho = parse_value<double>(key, value);
        } else if (key == "q0") {
            config.params.q0 = parse_value<double>(key, value);
        } else if (key == "s0") {
            config.params.s0 = parse_value<double>(key, value);
        } else if (key == "ants") {
            config.params.ants = parse_value<std::size_t>(key, value);
        } else if (key == "psl") {
            config.params.psl = parse_value<double>(key, value);
        } else if (key == "ssas_message_boost") {
            config.params.ssas_message_boost = parse_value<double>(key, value);
        } else if (key == "ssas_knowledge_horizon") {
            config.params.ssas_knowledge_horizon = parse_value<std::size_t>(key, value);
        } else if (key == "srm_team_draw") {
            if (value == "per_step") {
                config.params.srm_team_draw = SrmTeamDraw::PerStep;
            } else if (value == "per_tour") {
                config.params.srm_team_draw = SrmTeamDraw::PerTour;
            } else {
                throw ConfigError("srm_team_draw must be per_step or per_tour");
            }
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (config.instance_files.empty() && config.random_instances == 0) {
        throw ConfigError("config lists no instances");
    }
    if (config.algorithms.empty()) throw ConfigError("config lists no algorithms");
    if (config.runs == 0) throw ConfigError("runs must be positive");
    try {
        config.params.validate();
    } catch (const InputError& e) {
        throw ConfigError(e.what());
    }
    return config;
}

std::uint64_t run_seed(std::uint64_t master, std::size_t problem_index, std::size_t alg_index,
                       std::size_t algorithms, std::size_t run, std::size_t runs) {
    const std::uint64_t counter = (static_cast<std::uint64_t>(problem_index) * algorithms + alg_index) * runs + run;
    return derive_seed(master, counter);
}

ExperimentResult run_experiment(const std::vector<Instance>& instances, const std::vector<Cost>& optima,
                                const ExperimentConfig& config) {
    if (optima.size() != instances.size()) throw ConfigError("one reference optimum per instance required");
    for (std::size_t i = 0; i < optima.size(); ++i) {
        if (!(optima[i] > 0.0)) {
            throw ConfigError("reference optimum for '" + instances[i].name() + "' must be positive");
        }
    }

    const std::size_t algs = config.algorithms.size();
    const std::size_t cells = instances.size() * algs * config.runs;
    std::vector<RunRecord> records(cells);

    auto run_cell = [&](std::size_t cell) {
        const std::size_t run = cell % config.runs;
        const std::size_t alg_index = (cell / config.runs) % algs;
        const std::size_t problem = cell / (config.runs * algs);
        SolverParams params = config.params;
        params.seed = run_seed(config.master_seed, problem, alg_index, algs, run, config.runs);
        const SolveResult result = gtsp::run(config.algorithms[alg_index], instances[problem], params);
        records[cell] = RunRecord{instances[problem].name(), config.algorithms[alg_index], run, params.seed,
                                  result.best_cost, optima[problem], result.iterations_used, result.wall_time};
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, cells));
    if (workers == 1) {
        for (std::size_t c = 0; c < cells; ++c) run_cell(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < cells; c = next++) {
                    try {
                        run_cell(c);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    ExperimentResult result;
    result.runs = std::move(records);
    result.table = tabulate(result.runs);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    std::vector<Instance> instances;
    for (const auto& path : config.instance_files) instances.push_back(read_gtsp_file(path));
    for (std::size_t i = 0; i < config.random_instances; ++i) {
        instances.push_back(generate_random_instance(derive_seed(config.master_seed, ~std::uint64_t{0} - i),
                                                     config.random_clusters, config.random_nodes,
                                                     config.random_extent));
    }

    std::set<std::string> names;
    std::vector<Cost> optima;
    for (const Instance& inst : instances) {
        if (!names.insert(inst.name()).second) throw ConfigError("duplicate instance name '" + inst.name() + "'");
        if (auto it = config.optima.find(inst.name()); it != config.optima.end()) {
            optima.push_back(it->second);
        } else if (config.exact_reference && inst.cluster_count() <= config.exact_cluster_limit) {
            optima.push_back(exact_optimum_dp(inst, config.exact_cluster_limit).optimum_cost);
        } else {
            throw ConfigError("no reference optimum for instance '" + inst.name() + "'");
        }
    }
    return run_experiment(instances, optima, config);
}

EufStats expected_utility_from_moments(double x_bar, double s2) {
    EufStats out;
    out.x_bar = x_bar;
    out.s2 = s2;
    if (x_bar == 0.0) {
        out.euf = kUtilityGamma - kUtilityBeta;
        out.note = "mean deviation is zero; euf set to its limit 400";
        return out;
    }
    if (s2 == 0.0) {
        out.c_hat = std::numeric_limits<double>::infinity();
        out.euf = kUtilityGamma - kUtilityBeta;
        out.note = "zero variance; euf set to its limit 400";
        return out;
    }
    out.b_hat = s2 / x_bar;
    out.c_hat = x_bar * x_bar / s2;
    const double base = 1.0 - out.b_hat * kUtilityT;
    if (!(base > 0.0)) {
        throw DomainError("1 - b*t = " + shortest(base) + " is not positive; expected utility undefined");
    }
    out.euf = kUtilityGamma - kUtilityBeta * std::pow(base, -out.c_hat);
    return out;
}

EufStats expected_utility(std::span<const double> deviations, double translate) {
    if (deviations.empty()) throw InputError("expected utility needs at least one deviation");
    const double np = static_cast<double>(deviations.size());
    double sum = 0.0;
    for (double x : deviations) sum += x + translate;
    const double mean = sum / np;
    double sq = 0.0;
    for (double x : deviations) sq += (x + translate - mean) * (x + translate - mean);
    return expected_utility_from_moments(mean, sq / np);
}

std::vector<double> deviations_for(const GapTable& table, Algorithm algorithm, bool per_run) {
    std::vector<double> out;
    for (const std::string& problem : table.problems) {
        const GapRecord* rec = table.find(problem, algorithm);
        if (!rec) continue;
        if (per_run) {
            for (Cost c : rec->runs) out.push_back(gap(c, rec->reference_optimum));
        } else {
            out.push_back(rec->mean_gap);
        }
    }
    return out;
}

std::vector<EufStats> rank_algorithms(std::vector<EufStats> stats) {
    std::stable_sort(stats.begin(), stats.end(), [](const EufStats& a, const EufStats& b) {
        if (a.euf != b.euf) return a.euf > b.euf;
        return a.x_bar < b.x_bar;
    });
    for (std::size_t i = 0; i < stats.size(); ++i) stats[i].rank = i + 1;
    return stats;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "markdown" || name == "md") return ReportFormat::Markdown;
    return std::nullopt;
}

std::string emit_report(const GapTable& table, ReportFormat format) {
    // Empty tables still list every algorithm column.
    std::vector<Algorithm> columns = table.algorithms();
    if (columns.empty()) columns.assign(kAllAlgorithms.begin(), kAllAlgorithms.end());

    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "Problem";
        for (Algorithm a : columns) out << ',' << algorithm_name(a);
        out << '\n';
        for (const std::string& problem : table.problems) {
            out << csv_field(problem);
            for (Algorithm a : columns) {
                out << ',';
                if (const GapRecord* r = table.find(problem, a)) out << shortest(r->mean_gap);
            }
            out << '\n';
        }
        return out.str();
    }

    out << "| Problem |";
    for (Algorithm a : columns) out << ' ' << algorithm_name(a) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < columns.size(); ++i) out << "---|";
    out << '\n';
    for (const std::string& problem : table.problems) {
        out << "| " << problem << " |";
        for (Algorithm a : columns) {
            const GapRecord* r = table.find(problem, a);
            out << ' ' << (r ? fixed(r->mean_gap, 2) : std::string("-")) << " |";
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_report(std::span<const EufStats> stats, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "Algorithm,x_bar,s2,b_hat,c_hat,euf,rank,note\n";
        for (const EufStats& s : stats) {
            out << csv_field(s.algorithm) << ',' << shortest(s.x_bar) << ',' << shortest(s.s2) << ','
                << shortest(s.b_hat) << ',' << shortest(s.c_hat) << ',' << shortest(s.euf) << ',' << s.rank
                << ',' << csv_field(s.note.value_or("")) << '\n';
        }
        return out.str();
    }
    out << "| Algorithm | x_bar | s2 | b_hat | c_hat | euf | Rk |\n|---|---|---|---|---|---|---|\n";
    for (const EufStats& s : stats) {
        out << "| " << s.algorithm << " | " << fixed(s.x_bar, 4) << " | " << fixed(s.s2, 4) << " | "
            << fixed(s.b_hat, 4) << " | " << fixed(s.c_hat, 4) << " | " << fixed(s.euf, 4) << " | " << s.rank
            << " |\n";
    }
    for (const EufStats& s : stats) {
        if (s.note) out << "\nNote (" << s.algorithm << "): " << *s.note << '\n';
    }
    return out.str();
}

std::vector<std::pair<std::string, std::map<Algorithm, double>>> parse_gap_csv(std::string_view text) {
    const auto rows = parse_csv(text);
    if (rows.empty() || rows.front().empty() || rows.front().front() != "Problem") {
        throw InputError("gap CSV must start with a Problem header");
    }
    std::vector<Algorithm> columns;
    for (std::size_t i = 1; i < rows.front().size(); ++i) {
        auto a = parse_algorithm(rows.front()[i]);
        if (!a) throw InputError("unknown algorithm column '" + rows.front()[i] + "'");
        columns.push_back(*a);
    }
    std::vector<std::pair<std::string, std::map<Algorithm, double>>> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != columns.size() + 1) throw InputError("gap CSV row " + std::to_string(r) + " has wrong width");
        std::map<Algorithm, double> cells;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (row[i + 1].empty()) continue;
            double v{};
            auto [ptr, ec] = std::from_chars(row[i + 1].data(), row[i + 1].data() + row[i + 1].size(), v);
            if (ec != std::errc{}) throw InputError("bad number '" + row[i + 1] + "' in gap CSV");
            cells[columns[i]] = v;
        }
        out.emplace_back(row[0], std::move(cells));
    }
    return out;
}

std::string format_run_log(std::span<const RunRecord> runs) {
    std::string out;
    for (const RunRecord& r : runs) {
        nlohmann::ordered_json j;
        j["instance"] = r.problem;
        j["algorithm"] = algorithm_name(r.algorithm);
        j["run"] = r.run_index;
        j["seed"] = r.seed;
        j["best_cost"] = r.best_cost;
        j["reference_optimum"] = r.reference_optimum;
        j["iterations"] = r.iterations;
        j["wall_time"] = r.wall_time;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<RunRecord> parse_run_log(std::string_view text) {
    std::vector<RunRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            RunRecord r;
            r.problem = j.at("instance").get<std::string>();
            const auto name = j.at("algorithm").get<std::string>();
            const auto alg = parse_algorithm(name);
            if (!alg) throw InputError("unknown algorithm '" + name + "'");
            r.algorithm = *alg;
            r.run_index = j.at("run").get<std::size_t>();
            r.seed = j.at("seed").get<std::uint64_t>();
            r.best_cost = j.at("best_cost").get<double>();
            r.reference_optimum = j.at("reference_optimum").get<double>();
            r.iterations = j.at("iterations").get<std::size_t>();
            r.wall_time = j.at("wall_time").get<double>();
            out.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, std::string("bad run log entry: ") + e.what());
        } catch (const InputError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return out;
}

}  // namespace gtsp
