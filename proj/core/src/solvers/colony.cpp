#include "colony.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <string>

#include "gtsp/error.hpp"
#include "gtsp/oracle.hpp"

namespace gtsp {

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Acs: return "ACS";
        case Algorithm::Racs: return "RACS";
        case Algorithm::Sacs: return "SACS";
        case Algorithm::Srm: return "SRM";
        case Algorithm::Ssas: return "SSAS";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Algorithm a : kAllAlgorithms) {
        if (algorithm_name(a) == upper) return a;
    }
    return std::nullopt;
}

void SolverParams::validate() const {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!(rho > 0.0 && rho < 1.0)) throw InputError("rho must lie in (0, 1)");
    if (!in_unit(q0)) throw InputError("q0 must lie in [0, 1]");
    if (!(s0 > 0.0 && s0 < 1.0)) throw InputError("s0 must lie in (0, 1)");
    if (!in_unit(psl)) throw InputError("psl must lie in [0, 1]");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be non-negative");
    if (ants < 1) throw InputError("at least one ant is required");
    if (!(time_limit >= 0.0)) throw InputError("time limit must be non-negative");
    if (max_iterations == 0 && time_limit == 0.0) {
        throw InputError("either max_iterations or time_limit must be positive");
    }
    if (!in_unit(spsl_fraction)) throw InputError("spsl_fraction must lie in [0, 1]");
    if (!in_unit(ssas_hpsl_fraction)) throw InputError("ssas_hpsl_fraction must lie in [0, 1]");
    if (!(ssas_message_boost > 0.0)) throw InputError("ssas_message_boost must be positive");
}

namespace detail {

Colony::Colony(const Instance& inst, const SolverParams& p, Rng& r, Tour initial_best)
    : instance(inst),
      params(p),
      rng(r),
      pheromone(PheromoneMatrix::from_nearest_neighbor(inst.node_count(), initial_best.cost, p.rho)),
      desirability(inst, p.beta),
      chooser(inst, pheromone, desirability),
      best(std::move(initial_best)),
      knowledge(inst.node_count()) {}

std::size_t share_of(std::size_t total, double fraction) {
    const auto count = static_cast<std::size_t>(std::floor(static_cast<double>(total) * fraction + 0.5));
    return std::min(count, total);
}

}  // namespace detail

SolveResult run(Algorithm algorithm, const Instance& instance, const SolverParams& params,
                Rng& rng, const RunObserver& observer) {
    params.validate();
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - started).count(); };

    // Greedy initial tour: fixes tau0 / tau_max and seeds the best tour.
    detail::Colony colony(instance, params, rng,
                          nearest_neighbor(instance, random_start_node(instance, rng)));

    void (*iterate)(detail::Colony&) = nullptr;
    switch (algorithm) {
        case Algorithm::Acs: iterate = detail::iterate_acs; break;
        case Algorithm::Racs: iterate = detail::iterate_racs; break;
        case Algorithm::Sacs: iterate = detail::iterate_sacs; break;
        case Algorithm::Srm: iterate = detail::iterate_srm; break;
        case Algorithm::Ssas: iterate = detail::iterate_ssas; break;
    }

    SolveResult result;
    while (true) {
        if (params.max_iterations > 0 && colony.iteration >= params.max_iterations) break;
        if (params.time_limit > 0.0 && elapsed() >= params.time_limit) break;
        ++colony.iteration;
        iterate(colony);
        result.cost_trace.push_back(colony.best.cost);
        if (observer) observer(IterationView{colony.iteration, colony.pheromone, colony.best});
    }

    result.best_tour = colony.best;
    result.best_cost = colony.best.cost;
    result.iterations_used = colony.iteration;
    result.wall_time = elapsed();
    return result;
}

SolveResult run(Algorithm algorithm, const Instance& instance, const SolverParams& params,
                const RunObserver& observer) {
    Rng rng(params.seed);
    return run(algorithm, instance, params, rng, observer);
}

}  // namespace gtsp
