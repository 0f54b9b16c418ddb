#include "colony.hpp"

namespace gtsp::detail {

// Sensitive Robot Metaheuristic. A robot acts as an explorer (sSSL, samples
// the transition probabilities) when q > q0 and as an exploiter (hSSL,
// argmax) otherwise. q0 doubles as the evaporation factor in both rules.
void iterate_srm(Colony& colony) {
    const SolverParams& params = colony.params;
    const double tau0 = colony.pheromone.tau0();
    auto local = [&](NodeId i, NodeId j) {
        colony.update_edge(i, j, [&](double tau) { return local_update_srm(tau, params.q0, tau0); });
    };

    std::vector<Tour> tours;
    tours.reserve(params.ants);
    for (std::size_t k = 0; k < params.ants; ++k) {
        AgentState robot = colony.place_agent();
        if (params.srm_team_draw == SrmTeamDraw::PerStep) {
            auto next = [&](const AgentState& agent) {
                return colony.chooser.choose(agent, params.q0, colony.rng);
            };
            tours.push_back(construct_tour(colony.instance, std::move(robot), next, local));
        } else {
            const bool explorer = colony.rng.uniform01() > params.q0;
            auto next = [&](const AgentState& agent) {
                return explorer ? colony.chooser.explore(agent, colony.rng)
                                : colony.chooser.exploit(agent);
            };
            tours.push_back(construct_tour(colony.instance, std::move(robot), next, local));
        }
    }
    for (const Tour& t : tours) colony.consider(t);
    global_update_srm(colony.pheromone, colony.best, params.q0);
}

}  // namespace gtsp::detail
