#pragma once

// Shared per-run state for the colony strategies. Internal to the library.

#include <cstddef>
#include <vector>

#include "gtsp/knowledge_base.hpp"
#include "gtsp/model.hpp"
#include "gtsp/pheromone.hpp"
#include "gtsp/rng.hpp"
#include "gtsp/solver.hpp"
#include "gtsp/transition.hpp"

namespace gtsp::detail {

struct Colony {
    Colony(const Instance& instance, const SolverParams& params, Rng& rng, Tour initial_best);

    const Instance& instance;
    const SolverParams& params;
    Rng& rng;
    PheromoneMatrix pheromone;
    DesirabilityTable desirability;
    MoveChooser chooser;
    Tour best;
    std::size_t iteration = 0;  // 1-based while an iteration runs
    KnowledgeBase knowledge;

    std::size_t n() const noexcept { return instance.node_count(); }

    AgentState place_agent(double sensitivity = 0.0) {
        return AgentState::start_at(instance, random_start_node(instance, rng), sensitivity);
    }

    /// Keeps the strictly cheaper tour.
    void consider(const Tour& tour) {
        if (tour.cost < best.cost) best = tour;
    }

    /// Applies `rule(tau)` to one edge.
    template <typename Rule>
    void update_edge(NodeId i, NodeId j, Rule rule) {
        pheromone.set(i, j, rule(pheromone(i, j)));
    }
};

/// Number of agents (out of `total`) in a sub-population of share `fraction`,
/// rounded half up.
std::size_t share_of(std::size_t total, double fraction);

void iterate_acs(Colony& colony);
void iterate_racs(Colony& colony);
void iterate_sacs(Colony& colony);
void iterate_srm(Colony& colony);
void iterate_ssas(Colony& colony);

}  // namespace gtsp::detail
