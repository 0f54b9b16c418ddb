#include "colony.hpp"

namespace gtsp::detail {

// Ant Colony System: pseudo-random proportional moves, local rule toward
// tau0, elitist global update on the best tour.
void iterate_acs(Colony& colony) {
    const SolverParams& params = colony.params;
    const double tau0 = colony.pheromone.tau0();
    auto local = [&](NodeId i, NodeId j) {
        colony.update_edge(i, j, [&](double tau) { return local_update_acs(tau, params.rho, tau0); });
    };
    auto next = [&](const AgentState& agent) { return colony.chooser.choose(agent, params.q0, colony.rng); };

    std::vector<Tour> tours;
    tours.reserve(params.ants);
    for (std::size_t k = 0; k < params.ants; ++k) {
        tours.push_back(construct_tour(colony.instance, colony.place_agent(), next, local));
    }
    for (const Tour& t : tours) colony.consider(t);
    global_update(colony.pheromone, colony.best, params.rho);
}

}  // namespace gtsp::detail
