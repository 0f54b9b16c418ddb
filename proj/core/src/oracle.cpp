#include "gtsp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "gtsp/error.hpp"

namespace gtsp {

Tour nearest_neighbor(const Instance& instance, NodeId start) {
    if (!instance.contains(start)) {
        throw InputError("start node " + std::to_string(start) + " is not in the instance");
    }
    const std::size_t p = instance.cluster_count();
    std::vector<bool> visited(p, false);
    std::vector<NodeId> nodes;
    nodes.reserve(p);
    nodes.push_back(start);
    visited[instance.cluster_of(start)] = true;

    NodeId current = start;
    while (nodes.size() < p) {
        NodeId best = 0;
        Cost best_cost = std::numeric_limits<Cost>::infinity();
        for (NodeId v = 0; v < instance.node_count(); ++v) {
            if (visited[instance.cluster_of(v)]) continue;
            // Strict comparison keeps the lowest id on ties.
            if (instance.cost(current, v) < best_cost) {
                best_cost = instance.cost(current, v);
                best = v;
            }
        }
        nodes.push_back(best);
        visited[instance.cluster_of(best)] = true;
        current = best;
    }
    return make_tour(instance, std::move(nodes));
}

ExactResult exact_optimum_dp(const Instance& instance, std::size_t max_clusters) {
    const std::size_t p = instance.cluster_count();
    if (p > max_clusters) {
        throw CapacityError("exact DP refuses " + std::to_string(p) + " clusters (limit " +
                            std::to_string(max_clusters) + ")");
    }
    if (p > 31) throw CapacityError("exact DP supports at most 31 clusters");

    // Start from the smallest cluster to minimise the number of DP passes.
    ClusterId start_cluster = 0;
    for (ClusterId k = 1; k < p; ++k) {
        if (instance.cluster(k).size() < instance.cluster(start_cluster).size()) start_cluster = k;
    }

    // Remaining clusters get bit positions 0..q-1; their nodes get local ids.
    const std::size_t q = p - 1;
    std::vector<unsigned> bit_of_cluster(p, 0);
    std::vector<NodeId> local_nodes;
    std::vector<unsigned> local_bit;
    std::vector<std::vector<std::uint32_t>> locals_by_bit(q);
    {
        unsigned bit = 0;
        for (ClusterId k = 0; k < p; ++k) {
            if (k == start_cluster) continue;
            bit_of_cluster[k] = bit;
            for (NodeId v : instance.cluster(k)) {
                locals_by_bit[bit].push_back(static_cast<std::uint32_t>(local_nodes.size()));
                local_nodes.push_back(v);
                local_bit.push_back(bit);
            }
            ++bit;
        }
    }

    const std::size_t m = local_nodes.size();
    const std::size_t masks = std::size_t{1} << q;
    constexpr Cost kInf = std::numeric_limits<Cost>::infinity();
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    std::vector<Cost> dp(masks * m);
    std::vector<std::uint32_t> parent(masks * m);

    ExactResult best;
    best.optimum_cost = kInf;

    for (NodeId start : instance.cluster(start_cluster)) {
        std::fill(dp.begin(), dp.end(), kInf);
        std::fill(parent.begin(), parent.end(), kNone);
        for (std::uint32_t li = 0; li < m; ++li) {
            dp[(std::size_t{1} << local_bit[li]) * m + li] = instance.cost(start, local_nodes[li]);
        }

        for (std::size_t mask = 1; mask < masks; ++mask) {
            const Cost* row = &dp[mask * m];
            for (std::uint32_t li = 0; li < m; ++li) {
                const Cost base = row[li];
                if (base == kInf) continue;
                ++best.states_expanded;
                const NodeId from = local_nodes[li];
                for (unsigned b = 0; b < q; ++b) {
                    if (mask & (std::size_t{1} << b)) continue;
                    const std::size_t next_mask = mask | (std::size_t{1} << b);
                    Cost* next_row = &dp[next_mask * m];
                    std::uint32_t* next_parent = &parent[next_mask * m];
                    for (std::uint32_t lu : locals_by_bit[b]) {
                        const Cost c = base + instance.cost(from, local_nodes[lu]);
                        if (c < next_row[lu]) {
                            next_row[lu] = c;
                            next_parent[lu] = li;
                        }
                    }
                }
            }
        }

        const std::size_t full = masks - 1;
        for (std::uint32_t li = 0; li < m; ++li) {
            const Cost c = dp[full * m + li] + instance.cost(local_nodes[li], start);
            if (c < best.optimum_cost) {
                best.optimum_cost = c;
                std::vector<NodeId> nodes;
                std::size_t mask = full;
                std::uint32_t cur = li;
                while (cur != kNone) {
                    nodes.push_back(local_nodes[cur]);
                    const std::uint32_t prev = parent[mask * m + cur];
                    mask &= ~(std::size_t{1} << local_bit[cur]);
                    cur = prev;
                }
                nodes.push_back(start);
                std::reverse(nodes.begin(), nodes.end());
                best.optimum_tour = Tour{std::move(nodes), c};
            }
        }
    }
    // Recompute from the node sequence so the cost matches tour_cost exactly.
    best.optimum_tour.cost = tour_cost(instance, best.optimum_tour.nodes);
    best.optimum_cost = best.optimum_tour.cost;
    return best;
}

ExactResult exact_optimum_bruteforce(const Instance& instance, std::size_t max_clusters,
                                     std::uint64_t max_tours) {
    const std::size_t p = instance.cluster_count();
    if (p > max_clusters) {
        throw CapacityError("brute force refuses " + std::to_string(p) + " clusters (limit " +
                            std::to_string(max_clusters) + ")");
    }

    // (p-1)!/2 orders times the product of cluster sizes.
    long double work = 0.5L;
    for (std::size_t k = 2; k < p; ++k) work *= static_cast<long double>(k);
    for (const auto& cluster : instance.clusters()) work *= static_cast<long double>(cluster.size());
    if (work > static_cast<long double>(max_tours)) {
        throw CapacityError("brute force would enumerate about " +
                            std::to_string(static_cast<double>(work)) + " tours (limit " +
                            std::to_string(max_tours) + ")");
    }

    std::vector<ClusterId> order(p);
    std::iota(order.begin(), order.end(), ClusterId{0});

    ExactResult best;
    best.optimum_cost = std::numeric_limits<Cost>::infinity();
    std::vector<std::size_t> pick(p);
    std::vector<NodeId> nodes(p);

    do {
        // Cluster 0 stays first; a cycle and its reverse are the same tour.
        if (order[1] > order[p - 1]) continue;
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            for (std::size_t pos = 0; pos < p; ++pos) nodes[pos] = instance.cluster(order[pos])[pick[pos]];
            ++best.states_expanded;
            Cost c = 0.0;
            for (std::size_t pos = 0; pos < p; ++pos) c += instance.cost(nodes[pos], nodes[(pos + 1) % p]);
            if (c < best.optimum_cost) {
                best.optimum_cost = c;
                best.optimum_tour = Tour{nodes, c};
            }
            std::size_t pos = 0;
            while (pos < p && ++pick[pos] == instance.cluster(order[pos]).size()) {
                pick[pos] = 0;
                ++pos;
            }
            if (pos == p) break;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));

    best.optimum_tour.cost = tour_cost(instance, best.optimum_tour.nodes);
    best.optimum_cost = best.optimum_tour.cost;
    return best;
}

}  // namespace gtsp
