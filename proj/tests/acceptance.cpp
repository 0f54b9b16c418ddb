// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is 0
// only when nothing FAILs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gtsp/bench.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/oracle.hpp"
#include "gtsp/pheromone.hpp"
#include "gtsp/solver.hpp"

namespace fs = std::filesystem;
using namespace gtsp;

namespace {

constexpr double kBHatTol = 1e-3;
constexpr double kCHatTol = 1e-3;
constexpr double kEufTol = 1e-2;
constexpr double kRuleTol = 1e-12;

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    if (o.verdict == Verdict::Fail) ++failures;
    std::printf("%s [%d] %s: %s\n", tag, id, title, o.detail.c_str());
    std::fflush(stdout);
}

Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {Verdict::Fail, std::string("exception: ") + e.what()};
    }
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome utility_rows() {
    struct Row {
        const char* name;
        double x_bar, s2, b_hat, c_hat, euf;
    };
    const Row rows[] = {
        {"ACS", 1.0236, 8.7454, 8.5434, 0.1198, 393.0964},
        {"SACS", 0.5420, 1.4555, 2.6854, 0.2018, 397.0472},
        {"RACS", 0.4858, 1.3628, 2.8051, 0.1732, 397.3482},
        {"SRM", 0.4989, 1.0521, 2.1088, 0.2366, 397.3288},
        {"SSAS", 0.3149, 0.7974, 2.5322, 0.1244, 398.3022},
    };
    double worst_b = 0, worst_c = 0, worst_euf = 0;
    std::string bad;
    for (const Row& r : rows) {
        const EufStats s = expected_utility_from_moments(r.x_bar, r.s2);
        const double db = std::abs(s.b_hat - r.b_hat);
        const double dc = std::abs(s.c_hat - r.c_hat);
        const double de = std::abs(s.euf - r.euf);
        worst_b = std::max(worst_b, db);
        worst_c = std::max(worst_c, dc);
        worst_euf = std::max(worst_euf, de);
        if (db > kBHatTol || dc > kCHatTol || de > kEufTol) bad += std::string(" ") + r.name;
    }
    std::string detail = fmt("5 rows, max |db|=%.2e |dc|=%.2e |deuf|=%.2e", worst_b, worst_c, worst_euf);
    if (!bad.empty()) return {Verdict::Fail, detail + "; out of tolerance:" + bad};
    return {Verdict::Pass, detail};
}

Outcome oracle_agreement() {
    int agree = 0;
    std::string bad;
    for (int i = 0; i < 50; ++i) {
        const std::size_t p = 3 + i % 5;                 // 3..7
        const std::size_t n = p + (i * 7) % (2 * p + 1);  // p..3p <= 21
        const Instance inst = generate_random_instance(1000 + i, p, n);
        const Cost dp = exact_optimum_dp(inst).optimum_cost;
        const Cost bf = exact_optimum_bruteforce(inst).optimum_cost;
        if (dp == bf) {
            ++agree;
        } else {
            bad += " " + inst.name();
        }
    }
    const std::string detail = std::to_string(agree) + "/50 instances agree exactly";
    return {bad.empty() ? Verdict::Pass : Verdict::Fail, bad.empty() ? detail : detail + "; differ:" + bad};
}

std::vector<Instance> validity_instances() {
    std::vector<Instance> out;
    for (int i = 0; i < 10; ++i) {
        const std::size_t p = 4 + i % 5;  // 4..8
        out.push_back(generate_random_instance(2000 + i, p, 3 * p));
    }
    return out;
}

Outcome validity_and_bound() {
    const auto instances = validity_instances();
    std::size_t runs = 0, violations = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const Instance& inst = instances[k];
        const Cost optimum = exact_optimum_dp(inst).optimum_cost;
        for (Algorithm alg : kAllAlgorithms) {
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                SolverParams params;
                params.max_iterations = 500;
                params.seed = derive_seed(seed, k);
                const SolveResult r = run(alg, inst, params);
                ++runs;
                if (!validate_tour(inst, r.best_tour.nodes).ok() || r.best_cost < optimum ||
                    tour_cost(inst, r.best_tour.nodes) != r.best_cost) {
                    ++violations;
                }
            }
        }
    }
    const std::string detail = std::to_string(runs) + " runs, " + std::to_string(violations) + " violations";
    return {runs == 200 && violations == 0 ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome small_optimality() {
    constexpr int kRequired = 8;
    int hits = 0;
    std::string missed;
    for (int i = 0; i < 10; ++i) {
        const std::size_t p = 8;
        const Instance inst = generate_random_instance(3000 + i, p, 3 * p);
        const Cost optimum = exact_optimum_dp(inst).optimum_cost;
        Cost best = std::numeric_limits<Cost>::infinity();
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SolverParams params;
            params.max_iterations = 2000;
            params.seed = seed;
            best = std::min(best, run(Algorithm::Racs, inst, params).best_cost);
        }
        if (best == optimum) {
            ++hits;
        } else {
            missed += " " + inst.name() + fmt("(%.0f vs %.0f)", best, optimum);
        }
    }
    std::string detail = std::to_string(hits) + "/10 instances at the exact optimum (need " +
                         std::to_string(kRequired) + ")";
    if (!missed.empty()) detail += "; missed:" + missed;
    return {hits >= kRequired ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome pheromone_rules() {
    struct Check {
        const char* name;
        double got, want;
    };
    PheromoneMatrix g(4, 0.2, 1.0);
    global_update(g, Tour{{0, 1, 2, 3}, 10.0}, 0.5);
    PheromoneMatrix gs(4, 0.2, 1.0);
    global_update_srm(gs, Tour{{0, 1, 2, 3}, 10.0}, 0.5);
    PheromoneMatrix gs1(4, 0.2, 1.0);
    global_update_srm(gs1, Tour{{0, 1, 2, 3}, 10.0}, 1.0);
    PheromoneMatrix fixed(4, 0.1, 1.0);
    global_update(fixed, Tour{{0, 1, 2, 3}, 10.0}, 0.5);
    PheromoneMatrix off(5, 0.2, 1.0);
    global_update(off, Tour{{0, 1, 2, 3}, 10.0}, 0.5);
    PheromoneMatrix cl(3, 0.1, 0.5);
    cl.set(0, 1, 0.5);
    cl.set(1, 2, 0.5 * 1.01);
    clamp_pheromone(cl);

    double racs_limit = 0.3;
    for (int i = 0; i < 100; ++i) racs_limit = local_update_racs(racs_limit, 0.5, 10.0, 10);

    const Check checks[] = {
        {"acs fixed point", local_update_acs(0.1, 0.5, 0.1), 0.1},
        {"acs example", local_update_acs(0.2, 0.5, 0.1), 0.15},
        {"racs fixed point", local_update_racs(0.01, 0.5, 10.0, 10), 0.01},
        {"racs example", local_update_racs(0.3, 0.5, 10.0, 10), 0.155},
        {"racs limit", racs_limit, 0.01},
        {"sacs s=1", local_update_sacs(0.2, 1.0, 0.1, 10), 0.2},
        {"sacs s=0", local_update_sacs(0.2, 0.0, 0.1, 10), 0.01},
        {"sacs example", local_update_sacs(0.2, 0.5, 0.1, 10), 0.0525},
        {"srm q0=1", local_update_srm(0.2, 1.0, 0.1), 0.2},
        {"srm example", local_update_srm(0.2, 0.5, 0.1), 0.075},
        {"srm q0=0", local_update_srm(0.2, 0.0, 0.1), 0.1},
        {"global example", g(0, 1), 0.15},
        {"global closing edge", g(3, 0), 0.15},
        {"global off-tour", off(0, 2), 0.2},
        {"global fixed point", fixed(1, 2), 0.1},
        {"global srm example", gs(1, 2), 0.075},
        {"global srm q0=1", gs1(1, 2), 0.2},
        {"clamp at bound", cl(0, 1), 0.5},
        {"clamp above bound", cl(1, 2), 0.1},
    };
    std::string bad;
    for (const Check& c : checks) {
        if (!(std::abs(c.got - c.want) <= kRuleTol)) bad += std::string(" ") + c.name;
    }

    const Instance inst = generate_random_instance(4000, 8, 32);
    SolverParams params;
    params.max_iterations = 1000;
    params.seed = 6;
    std::size_t observed = 0, exceeded = 0;
    run(Algorithm::Racs, inst, params, [&](const IterationView& view) {
        ++observed;
        if (view.pheromone.max_value() > view.pheromone.tau_max()) ++exceeded;
    });
    std::string detail = std::to_string(std::size(checks)) + " rule examples at tol 1e-12; clamp held on " +
                         std::to_string(observed - exceeded) + "/" + std::to_string(observed) + " RACS iterations";
    if (!bad.empty()) detail += "; failed:" + bad;
    return {bad.empty() && observed == 1000 && exceeded == 0 ? Verdict::Pass : Verdict::Fail, detail};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome bench_determinism() {
    const fs::path dir = fs::temp_directory_path() / "gtsp_acceptance_bench";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path cfg = dir / "exp.cfg";
    std::ofstream(cfg) << "random_instances = 3\nrandom_clusters = 6\nrandom_nodes = 20\n"
                          "exact_reference = true\nruns = 3\nmax_iterations = 100\nseed = 11\njobs = 4\n";
    std::ostringstream sink;
    int code_a = cli::run_cli({"bench", cfg.string(), "-o", (dir / "a").string()}, sink, sink);
    int code_b = cli::run_cli({"bench", cfg.string(), "-o", (dir / "b").string()}, sink, sink);
    if (code_a != 0 || code_b != 0) return {Verdict::Fail, "bench exited with an error: " + sink.str()};
    const std::string a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
    const std::string ea = slurp(dir / "a_euf.csv"), eb = slurp(dir / "b_euf.csv");
    fs::remove_all(dir);
    const bool same = !a.empty() && a == b && ea == eb;
    return {same ? Verdict::Pass : Verdict::Fail,
            std::string(same ? "identical" : "different") + " gap CSV (" + std::to_string(a.size()) +
                " bytes) and utility CSV across two runs"};
}

Outcome tsplib_conformance(const fs::path& data_dir) {
    const Cost d = euc2d_distance({0, 0}, {3, 4});
    int round_trips = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = generate_random_instance(5000 + seed, 3 + seed % 8, 12 + 2 * seed);
        const std::string text = write_gtsp_instance(inst);
        const Instance back = parse_gtsp_instance(text);
        if (back == inst && write_gtsp_instance(back) == text) ++round_trips;
    }
    std::string detail = fmt("d((0,0),(3,4)) = %g; ", d) + std::to_string(round_trips) + "/20 round trips";
    bool ok = d == 5.0 && round_trips == 20;
    const fs::path pr76 = data_dir / "pr76.tsp";
    if (!data_dir.empty() && fs::exists(pr76)) {
        const NodeSet nodes = read_tsplib_file(pr76);
        detail += "; pr76 dimension " + std::to_string(nodes.size());
        ok = ok && nodes.size() == 76;
    } else {
        detail += "; pr76 dimension not checked here (fixture absent, covered by acceptance_library)";
    }
    return {ok ? Verdict::Pass : Verdict::Fail, detail};
}

}  // namespace

int main(int argc, char** argv) {
    fs::path data_dir;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--data-dir") == 0 && i + 1 < argc) {
            data_dir = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--data-dir DIR]\n", argv[0]);
            return 2;
        }
    }

    report(1, "utility table consistency", guarded(utility_rows));
    report(2, "exact oracle agreement", guarded(oracle_agreement));
    report(3, "heuristic validity and bound", guarded(validity_and_bound));
    report(4, "small-instance optimality", guarded(small_optimality));
    report(5, "16pr76 spot check",
           {Verdict::Skip, "needs the pr76 / 16pr76 fixtures and 10-minute runs; see acceptance_library"});
    report(6, "pheromone rules and clamp invariant", guarded(pheromone_rules));
    report(7, "bench determinism", guarded(bench_determinism));
    report(8, "TSPLIB conformance", guarded([&] { return tsplib_conformance(data_dir); }));

    std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
