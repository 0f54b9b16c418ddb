#include "colony.hpp"

namespace gtsp::detail {

// Reinforcing ACS: the local rule pulls toward 1 / (n * L+) using the best
// length known when the iteration starts; after the global update any trail
// above tau_max is reset to tau0.
void iterate_racs(Colony& colony) {
    const SolverParams& params = colony.params;
    const Cost best_length = colony.best.cost;
    const std::size_t n = colony.n();
    auto local = [&](NodeId i, NodeId j) {
        colony.update_edge(i, j, [&](double tau) {
            return local_update_racs(tau, params.rho, best_length, n);
        });
    };
    auto next = [&](const AgentState& agent) { return colony.chooser.choose(agent, params.q0, colony.rng); };

    std::vector<Tour> tours;
    tours.reserve(params.ants);
    for (std::size_t k = 0; k < params.ants; ++k) {
        tours.push_back(construct_tour(colony.instance, colony.place_agent(), next, local));
    }
    for (const Tour& t : tours) colony.consider(t);
    global_update(colony.pheromone, colony.best, params.rho);
    clamp_pheromone(colony.pheromone);
}

}  // namespace gtsp::detail
