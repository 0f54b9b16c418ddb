#include "colony.hpp"

namespace gtsp::detail {

// Sensitive ACS. Two colonies: sPSL ants draw s in (0, s0), hPSL ants draw s
// in (s0, 1), fresh every iteration. The sPSL colony builds first, then the
// hPSL colony builds on the trails it left. Each ant's local rule is
// s^2 * tau + (1 - s)^2 * tau0 / n.
void iterate_sacs(Colony& colony) {
    const SolverParams& params = colony.params;
    const double tau0 = colony.pheromone.tau0();
    const std::size_t n = colony.n();
    const std::size_t explorers = share_of(params.ants, params.spsl_fraction);

    std::vector<Tour> tours;
    tours.reserve(params.ants);
    for (std::size_t k = 0; k < params.ants; ++k) {
        const bool small = k < explorers;
        const double s = small ? colony.rng.uniform_open(0.0, params.s0)
                               : colony.rng.uniform_open(params.s0, 1.0);
        auto local = [&](NodeId i, NodeId j) {
            colony.update_edge(i, j, [&](double tau) { return local_update_sacs(tau, s, tau0, n); });
        };
        auto next = [&](const AgentState& agent) {
            return colony.chooser.choose(agent, params.q0, colony.rng);
        };
        tours.push_back(construct_tour(colony.instance, colony.place_agent(s), next, local));
    }
    for (const Tour& t : tours) colony.consider(t);
    global_update(colony.pheromone, colony.best, params.rho);
}

}  // namespace gtsp::detail
