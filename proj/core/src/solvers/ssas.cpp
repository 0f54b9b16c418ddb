#include "colony.hpp"

namespace gtsp::detail {

// Sensitive Stigmergic Agent System. hPSL agents build first and announce
// every edge they form; sPSL agents then build with announced or recorded
// edges weighted up by boost / (1 + psl). All moves apply the RACS local
// rule; the iteration closes with the elitist global update.
void iterate_ssas(Colony& colony) {
    const SolverParams& params = colony.params;
    const Cost best_length = colony.best.cost;
    const std::size_t n = colony.n();
    const std::size_t senders = share_of(params.ants, params.ssas_hpsl_fraction);
    const double boost = params.ssas_message_boost / (1.0 + params.psl);
    KnowledgeBase& knowledge = colony.knowledge;

    auto deposit = [&](NodeId i, NodeId j) {
        colony.update_edge(i, j, [&](double tau) {
            return local_update_racs(tau, params.rho, best_length, n);
        });
    };
    const EdgeBias bias = [&](NodeId from, NodeId to) {
        return knowledge.knows(from, to) ? boost : 1.0;
    };

    std::vector<Tour> tours;
    tours.reserve(params.ants);
    for (std::size_t k = 0; k < senders; ++k) {
        auto announce = [&, k](NodeId i, NodeId j) {
            deposit(i, j);
            knowledge.publish(EdgeReport{i, j, k, colony.iteration});
        };
        auto next = [&](const AgentState& agent) {
            return colony.chooser.choose(agent, params.q0, colony.rng);
        };
        tours.push_back(construct_tour(colony.instance, colony.place_agent(params.psl), next, announce));
    }
    for (std::size_t k = senders; k < params.ants; ++k) {
        auto next = [&](const AgentState& agent) {
            return colony.chooser.choose(agent, params.q0, colony.rng, &bias);
        };
        tours.push_back(construct_tour(colony.instance, colony.place_agent(params.psl), next, deposit));
    }
    for (const Tour& t : tours) colony.consider(t);
    global_update(colony.pheromone, colony.best, params.rho);

    knowledge.deliver();
    if (colony.iteration >= params.ssas_knowledge_horizon) {
        knowledge.forget_before(colony.iteration + 1 - params.ssas_knowledge_horizon);
    }
}

}  // namespace gtsp::detail
