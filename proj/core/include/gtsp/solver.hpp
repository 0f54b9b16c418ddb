#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gtsp/model.hpp"
#include "gtsp/pheromone.hpp"
#include "gtsp/rng.hpp"

namespace gtsp {

enum class Algorithm { Acs, Racs, Sacs, Srm, Ssas };

/// Report column order.
inline constexpr std::array<Algorithm, 5> kAllAlgorithms = {
    Algorithm::Acs, Algorithm::Racs, Algorithm::Sacs, Algorithm::Srm, Algorithm::Ssas};

/// "ACS", "RACS", ...
std::string_view algorithm_name(Algorithm algorithm);

/// Case-insensitive inverse of algorithm_name.
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// How an SRM robot picks between the explorer rule (sampling) and the
/// exploiter rule (argmax): a fresh q for every move, or one q per tour.
enum class SrmTeamDraw { PerStep, PerTour };

struct SolverParams {
    double beta = 5.0;   // visibility exponent
    double rho = 0.5;    // evaporation rate, (0, 1)
    double q0 = 0.5;     // exploitation threshold
    double s0 = 0.5;     // SACS split between sPSL and hPSL sensitivities
    std::size_t ants = 10;
    double psl = 0.01;   // SSAS agent sensitivity

    std::size_t max_iterations = 1000;
    double time_limit = 0.0;  // seconds; 0 disables the wall-clock budget
    std::uint64_t seed = 1;

    /// Share of agents in the sPSL colony (SACS); the rest are hPSL.
    double spsl_fraction = 0.5;
    /// Share of agents acting as hPSL message senders (SSAS).
    double ssas_hpsl_fraction = 0.5;
    /// Weight multiplier for announced edges is boost / (1 + psl).
    double ssas_message_boost = 2.0;
    /// Knowledge-base reports older than this many iterations are dropped.
    std::size_t ssas_knowledge_horizon = 1;
    SrmTeamDraw srm_team_draw = SrmTeamDraw::PerStep;

    /// Throws InputError on out-of-range values.
    void validate() const;
};

struct SolveResult {
    Tour best_tour;
    Cost best_cost = 0.0;
    std::size_t iterations_used = 0;
    double wall_time = 0.0;         // seconds
    std::vector<Cost> cost_trace;   // best cost after each iteration
};

/// State exposed to a run observer after each iteration's global update.
struct IterationView {
    std::size_t iteration;  // 1-based
    const PheromoneMatrix& pheromone;
    const Tour& best;
};

using RunObserver = std::function<void(const IterationView&)>;

/// Runs one algorithm until max_iterations or time_limit is reached. The
/// best tour starts as the nearest-neighbour tour from a random node, which
/// also fixes tau0 and tau_max. Throws InputError for invalid params before
/// any iteration.
SolveResult run(Algorithm algorithm, const Instance& instance, const SolverParams& params,
                Rng& rng, const RunObserver& observer = {});

/// As above with Rng(params.seed).
SolveResult run(Algorithm algorithm, const Instance& instance, const SolverParams& params,
                const RunObserver& observer = {});

}  // namespace gtsp
