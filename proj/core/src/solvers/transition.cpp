#include "gtsp/transition.hpp"

#include <cmath>
#include <stdexcept>

namespace gtsp {

namespace {

std::size_t argmax_index(const std::vector<double>& weights) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < weights.size(); ++k) {
        if (weights[k] > weights[best]) best = k;  // strict: earliest (lowest id) wins ties
    }
    return best;
}

std::size_t sample_index(const std::vector<double>& weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0) || !std::isfinite(total)) {
        // All weights underflowed; fall back to a uniform draw.
        return rng.below(weights.size());
    }
    const double r = rng.uniform01() * total;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        cumulative += weights[k];
        if (r < cumulative) return k;
    }
    // Rounding left r at the top of the range; take the last positive weight.
    for (std::size_t k = weights.size(); k-- > 0;) {
        if (weights[k] > 0.0) return k;
    }
    return weights.size() - 1;
}

void require_candidates(const std::vector<NodeId>& candidates) {
    if (candidates.empty()) {
        throw std::logic_error("no candidate nodes: every cluster is already visited");
    }
}

std::vector<double> direct_weights(const Instance& instance, const AgentState& agent,
                                   const PheromoneMatrix& pheromone, double beta,
                                   const std::vector<NodeId>& candidates) {
    std::vector<double> weights;
    weights.reserve(candidates.size());
    for (NodeId u : candidates) {
        weights.push_back(pheromone(agent.current_node, u) *
                          std::pow(visibility(instance, agent.current_node, u), beta));
    }
    return weights;
}

}  // namespace

AgentState AgentState::start_at(const Instance& instance, NodeId start, double sensitivity) {
    AgentState agent;
    agent.current_node = start;
    agent.visited_clusters.assign(instance.cluster_count(), false);
    agent.visited_clusters[instance.cluster_of(start)] = true;
    agent.partial_tour.reserve(instance.cluster_count());
    agent.partial_tour.push_back(start);
    agent.sensitivity = sensitivity;
    return agent;
}

void AgentState::move_to(const Instance& instance, NodeId next) {
    const ClusterId k = instance.cluster_of(next);
    if (visited_clusters[k]) {
        throw std::logic_error("move into already visited cluster " + std::to_string(k));
    }
    visited_clusters[k] = true;
    partial_tour.push_back(next);
    current_node = next;
}

NodeId random_start_node(const Instance& instance, Rng& rng) {
    const auto& cluster = instance.cluster(static_cast<ClusterId>(rng.below(instance.cluster_count())));
    return cluster[rng.below(cluster.size())];
}

double visibility(const Instance& instance, NodeId i, NodeId j) {
    return inverse_length(instance.cost(i, j));
}

DesirabilityTable::DesirabilityTable(const Instance& instance, double beta)
    : n_(instance.node_count()), table_(n_ * n_, 0.0) {
    for (NodeId i = 0; i < n_; ++i) {
        for (NodeId j = 0; j < n_; ++j) {
            if (i != j) table_[i * n_ + j] = std::pow(visibility(instance, i, j), beta);
        }
    }
}

void MoveChooser::weigh(const AgentState& agent, std::vector<NodeId>& candidates,
                        std::vector<double>& weights, const EdgeBias* bias) const {
    candidates.clear();
    weights.clear();
    const NodeId from = agent.current_node;
    for (NodeId v = 0; v < instance_.node_count(); ++v) {
        if (agent.visited_clusters[instance_.cluster_of(v)]) continue;
        double w = pheromone_(from, v) * desirability_(from, v);
        if (bias) w *= (*bias)(from, v);
        candidates.push_back(v);
        weights.push_back(w);
    }
    require_candidates(candidates);
}

NodeId MoveChooser::exploit(const AgentState& agent, const EdgeBias* bias) const {
    weigh(agent, candidates_, weights_, bias);
    return candidates_[argmax_index(weights_)];
}

NodeId MoveChooser::explore(const AgentState& agent, Rng& rng, const EdgeBias* bias) const {
    weigh(agent, candidates_, weights_, bias);
    return candidates_[sample_index(weights_, rng)];
}

NodeId MoveChooser::choose(const AgentState& agent, double q0, Rng& rng,
                           const EdgeBias* bias) const {
    const double q = rng.uniform01();
    return q > q0 ? explore(agent, rng, bias) : exploit(agent, bias);
}

std::vector<NodeId> candidate_nodes(const Instance& instance, const AgentState& agent) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < instance.node_count(); ++v) {
        if (!agent.visited_clusters[instance.cluster_of(v)]) out.push_back(v);
    }
    return out;
}

std::vector<double> transition_probabilities(const Instance& instance, const AgentState& agent,
                                             const PheromoneMatrix& pheromone,
                                             const SolverParams& params) {
    const auto candidates = candidate_nodes(instance, agent);
    require_candidates(candidates);
    auto weights = direct_weights(instance, agent, pheromone, params.beta, candidates);
    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) {
        w = total > 0.0 ? w / total : 1.0 / static_cast<double>(weights.size());
    }
    return weights;
}

NodeId choose_next_node(const Instance& instance, const AgentState& agent,
                        const PheromoneMatrix& pheromone, const SolverParams& params, Rng& rng) {
    const auto candidates = candidate_nodes(instance, agent);
    require_candidates(candidates);
    const auto weights = direct_weights(instance, agent, pheromone, params.beta, candidates);
    const double q = rng.uniform01();
    return candidates[q > params.q0 ? sample_index(weights, rng) : argmax_index(weights)];
}

Tour construct_tour(const Instance& instance, AgentState agent, const NextNodeFn& next,
                    const LocalRule& local_rule) {
    while (!agent.complete()) {
        const NodeId from = agent.current_node;
        const NodeId to = next(agent);
        agent.move_to(instance, to);
        if (local_rule) local_rule(from, to);
    }
    if (local_rule && agent.partial_tour.size() > 1) {
        local_rule(agent.current_node, agent.partial_tour.front());
    }
    return make_tour(instance, std::move(agent.partial_tour));
}

Tour construct_tour(const Instance& instance, AgentState agent, const PheromoneMatrix& pheromone,
                    const SolverParams& params, Rng& rng, const LocalRule& local_rule) {
    return construct_tour(
        instance, std::move(agent),
        [&](const AgentState& a) { return choose_next_node(instance, a, pheromone, params, rng); },
        local_rule);
}

}  // namespace gtsp
