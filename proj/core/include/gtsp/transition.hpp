#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gtsp/model.hpp"
#include "gtsp/pheromone.hpp"
#include "gtsp/rng.hpp"
#include "gtsp/solver.hpp"

namespace gtsp {

/// An agent part-way through building a tour. `visited_clusters` is the tabu
/// list.
struct AgentState {
    NodeId current_node = 0;
    std::vector<bool> visited_clusters;
    std::vector<NodeId> partial_tour;
    double sensitivity = 0.0;

    static AgentState start_at(const Instance& instance, NodeId start, double sensitivity = 0.0);

    void move_to(const Instance& instance, NodeId next);
    bool complete() const noexcept { return partial_tour.size() == visited_clusters.size(); }
};

/// A node drawn from a uniformly chosen cluster.
NodeId random_start_node(const Instance& instance, Rng& rng);

/// 1 / cost(i, j); kZeroCostVisibility for zero-cost edges.
double visibility(const Instance& instance, NodeId i, NodeId j);

/// Precomputed visibility^beta for every edge.
class DesirabilityTable {
public:
    DesirabilityTable(const Instance& instance, double beta);

    double operator()(NodeId i, NodeId j) const noexcept { return table_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> table_;
};

/// Multiplier applied to tau * eta^beta for a candidate edge.
using EdgeBias = std::function<double(NodeId from, NodeId to)>;

/// Move selection over the nodes of unvisited clusters (ascending node id).
class MoveChooser {
public:
    MoveChooser(const Instance& instance, const PheromoneMatrix& pheromone,
                const DesirabilityTable& desirability)
        : instance_(instance), pheromone_(pheromone), desirability_(desirability) {}

    /// Candidates and their weights tau * eta^beta (times the bias, if any).
    void weigh(const AgentState& agent, std::vector<NodeId>& candidates,
               std::vector<double>& weights, const EdgeBias* bias = nullptr) const;

    /// Highest weight; ties to the lowest node id.
    NodeId exploit(const AgentState& agent, const EdgeBias* bias = nullptr) const;

    /// Sample proportionally to weight.
    NodeId explore(const AgentState& agent, Rng& rng, const EdgeBias* bias = nullptr) const;

    /// Draw q; explore when q > q0, otherwise exploit.
    NodeId choose(const AgentState& agent, double q0, Rng& rng,
                  const EdgeBias* bias = nullptr) const;

private:
    const Instance& instance_;
    const PheromoneMatrix& pheromone_;
    const DesirabilityTable& desirability_;
    mutable std::vector<NodeId> candidates_;
    mutable std::vector<double> weights_;
};

/// Nodes of all clusters not yet visited, ascending.
std::vector<NodeId> candidate_nodes(const Instance& instance, const AgentState& agent);

/// Probability of each candidate_nodes() entry, proportional to
/// tau * eta^beta. Throws std::logic_error on an empty candidate set.
std::vector<double> transition_probabilities(const Instance& instance, const AgentState& agent,
                                             const PheromoneMatrix& pheromone,
                                             const SolverParams& params);

/// Pseudo-random proportional rule with threshold params.q0.
NodeId choose_next_node(const Instance& instance, const AgentState& agent,
                        const PheromoneMatrix& pheromone, const SolverParams& params, Rng& rng);

using NextNodeFn = std::function<NodeId(const AgentState&)>;
using LocalRule = std::function<void(NodeId from, NodeId to)>;

/// Extends `agent` to a full tour with `next`, calling `local_rule` on every
/// traversed edge right after the move and finally on the closing edge.
Tour construct_tour(const Instance& instance, AgentState agent, const NextNodeFn& next,
                    const LocalRule& local_rule);

/// construct_tour driven by choose_next_node.
Tour construct_tour(const Instance& instance, AgentState agent, const PheromoneMatrix& pheromone,
                    const SolverParams& params, Rng& rng, const LocalRule& local_rule);

}  // namespace gtsp
