#include "gtsp/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gtsp/error.hpp"

namespace gtsp {

namespace {

constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();

}  // namespace

Instance::Instance(std::string name, CostMatrix costs, std::vector<std::vector<NodeId>> clusters,
                   std::optional<std::vector<Point>> coords)
    : name_(std::move(name)),
      costs_(std::move(costs)),
      clusters_(std::move(clusters)),
      cluster_of_(costs_.size(), kUnassigned),
      coords_(std::move(coords)) {
    const std::size_t n = costs_.size();
    if (clusters_.size() < 3) {
        throw InputError("instance '" + name_ + "' needs at least 3 clusters, got " +
                         std::to_string(clusters_.size()));
    }
    if (coords_ && coords_->size() != n) {
        throw InputError("coordinate count " + std::to_string(coords_->size()) +
                         " does not match node count " + std::to_string(n));
    }

    for (ClusterId k = 0; k < clusters_.size(); ++k) {
        if (clusters_[k].empty()) {
            throw InputError("cluster " + std::to_string(k) + " is empty");
        }
        for (NodeId v : clusters_[k]) {
            if (v >= n) {
                throw InputError("cluster " + std::to_string(k) + " lists unknown node " +
                                 std::to_string(v));
            }
            if (cluster_of_[v] != kUnassigned) {
                throw InputError("node " + std::to_string(v) + " belongs to clusters " +
                                 std::to_string(cluster_of_[v]) + " and " + std::to_string(k));
            }
            cluster_of_[v] = k;
        }
    }
    if (auto it = std::find(cluster_of_.begin(), cluster_of_.end(), kUnassigned);
        it != cluster_of_.end()) {
        throw InputError("node " + std::to_string(it - cluster_of_.begin()) +
                         " is not assigned to any cluster");
    }

    for (NodeId i = 0; i < n; ++i) {
        if (costs_(i, i) != 0.0) {
            throw InputError("cost(" + std::to_string(i) + ", " + std::to_string(i) +
                             ") must be zero");
        }
        for (NodeId j = i + 1; j < n; ++j) {
            const Cost c = costs_(i, j);
            if (!(c >= 0.0) || !std::isfinite(c)) {
                throw InputError("cost(" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") must be finite and non-negative");
            }
            if (c != costs_(j, i)) {
                throw InputError("cost matrix is not symmetric at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            }
        }
    }
}

Cost tour_cost(const Instance& instance, std::span<const NodeId> nodes) {
    for (NodeId v : nodes) {
        if (!instance.contains(v)) {
            throw InputError("unknown node id " + std::to_string(v));
        }
    }
    if (nodes.empty()) return 0.0;
    Cost total = 0.0;
    NodeId prev = nodes.back();
    for (NodeId v : nodes) {
        total += instance.cost(prev, v);
        prev = v;
    }
    return total;
}

Tour make_tour(const Instance& instance, std::vector<NodeId> nodes) {
    const Cost c = tour_cost(instance, nodes);
    return Tour{std::move(nodes), c};
}

bool TourValidation::has(ViolationKind kind) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

TourValidation validate_tour(const Instance& instance, std::span<const NodeId> nodes) {
    TourValidation result;
    auto report = [&](ViolationKind kind, std::string message) {
        result.violations.push_back({kind, std::move(message)});
    };

    const std::size_t p = instance.cluster_count();
    if (nodes.size() != p) {
        report(ViolationKind::WrongLength, "tour has " + std::to_string(nodes.size()) +
                                               " nodes, expected " + std::to_string(p));
    }

    std::vector<unsigned> node_hits(instance.node_count(), 0);
    std::vector<unsigned> cluster_hits(p, 0);
    for (NodeId v : nodes) {
        if (!instance.contains(v)) {
            report(ViolationKind::UnknownNode, "unknown node " + std::to_string(v));
            continue;
        }
        if (++node_hits[v] == 2) {
            report(ViolationKind::DuplicateNode, "node " + std::to_string(v) + " repeated");
        }
        const ClusterId k = instance.cluster_of(v);
        if (++cluster_hits[k] == 2) {
            report(ViolationKind::ClusterVisitedTwice,
                   "cluster visited twice (cluster " + std::to_string(k) + ")");
        }
    }
    for (ClusterId k = 0; k < p; ++k) {
        if (cluster_hits[k] == 0) {
            report(ViolationKind::MissingCluster, "missing cluster " + std::to_string(k));
        }
    }
    return result;
}

}  // namespace gtsp
