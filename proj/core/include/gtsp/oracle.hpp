#pragma once

#include <cstddef>
#include <cstdint>

#include "gtsp/model.hpp"

namespace gtsp {

/// Nearest-neighbour construction over clusters: from `start`, repeatedly
/// move to the cheapest node of any unvisited cluster (ties to the lowest node
/// id), then close the cycle.
Tour nearest_neighbor(const Instance& instance, NodeId start);

struct ExactResult {
    Tour optimum_tour;
    Cost optimum_cost = 0.0;
    std::uint64_t states_expanded = 0;
};

inline constexpr std::size_t kDefaultDpClusterLimit = 16;
inline constexpr std::size_t kDefaultBruteforceClusterLimit = 8;
inline constexpr std::uint64_t kDefaultBruteforceTourLimit = 200'000'000;

/// Held-Karp over clusters. The smallest cluster is fixed as the start; the
/// state is (set of other clusters visited, last node). Throws CapacityError
/// when the cluster count exceeds `max_clusters`.
ExactResult exact_optimum_dp(const Instance& instance,
                             std::size_t max_clusters = kDefaultDpClusterLimit);

/// Enumerates every cluster order (one orientation per cycle) and every node
/// choice. Throws CapacityError beyond `max_clusters` or when the number of
/// tours to evaluate exceeds `max_tours`.
ExactResult exact_optimum_bruteforce(const Instance& instance,
                                     std::size_t max_clusters = kDefaultBruteforceClusterLimit,
                                     std::uint64_t max_tours = kDefaultBruteforceTourLimit);

}  // namespace gtsp
