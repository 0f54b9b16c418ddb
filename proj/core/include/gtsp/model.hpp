#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gtsp {

using NodeId = std::uint32_t;
using ClusterId = std::uint32_t;

/// Edge costs. Integral values (EUC_2D) are represented exactly.
using Cost = double;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Dense symmetric cost matrix with a zero diagonal.
class CostMatrix {
public:
    CostMatrix() = default;
    explicit CostMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }

    Cost operator()(NodeId i, NodeId j) const noexcept { return data_[i * n_ + j]; }

    /// Sets both (i, j) and (j, i).
    void set(NodeId i, NodeId j, Cost c) noexcept {
        data_[i * n_ + j] = c;
        data_[j * n_ + i] = c;
    }

    std::span<const Cost> row(NodeId i) const noexcept { return {data_.data() + i * n_, n_}; }

    friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Cost> data_;
};

/// An E-GTSP instance: a complete symmetric graph whose nodes are partitioned
/// into clusters. Immutable once constructed; the constructor rejects any
/// partition or cost matrix that violates the model.
class Instance {
public:
    Instance(std::string name, CostMatrix costs, std::vector<std::vector<NodeId>> clusters,
             std::optional<std::vector<Point>> coords = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    std::size_t node_count() const noexcept { return costs_.size(); }
    std::size_t cluster_count() const noexcept { return clusters_.size(); }

    Cost cost(NodeId i, NodeId j) const noexcept { return costs_(i, j); }
    const CostMatrix& costs() const noexcept { return costs_; }

    const std::vector<std::vector<NodeId>>& clusters() const noexcept { return clusters_; }
    const std::vector<NodeId>& cluster(ClusterId k) const { return clusters_.at(k); }
    ClusterId cluster_of(NodeId node) const { return cluster_of_.at(node); }

    const std::optional<std::vector<Point>>& coords() const noexcept { return coords_; }

    bool contains(NodeId node) const noexcept { return node < node_count(); }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.name_ == b.name_ && a.costs_ == b.costs_ && a.clusters_ == b.clusters_ &&
               a.coords_ == b.coords_;
    }

private:
    std::string name_;
    CostMatrix costs_;
    std::vector<std::vector<NodeId>> clusters_;
    std::vector<ClusterId> cluster_of_;
    std::optional<std::vector<Point>> coords_;
};

/// A closed tour; `nodes[k]` is followed by `nodes[k + 1]` and the last node
/// returns to the first.
struct Tour {
    std::vector<NodeId> nodes;
    Cost cost = 0.0;

    friend bool operator==(const Tour&, const Tour&) = default;
};

/// Sum of edge costs around the cycle, including the closing edge.
/// Throws InputError on an unknown node id.
Cost tour_cost(const Instance& instance, std::span<const NodeId> nodes);

/// Builds a Tour with its cost computed from `nodes`.
Tour make_tour(const Instance& instance, std::vector<NodeId> nodes);

enum class ViolationKind {
    UnknownNode,
    DuplicateNode,
    ClusterVisitedTwice,
    MissingCluster,
    WrongLength,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct TourValidation {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const noexcept;
};

/// Checks the E-GTSP feasibility rules. Never throws; violations are the result.
TourValidation validate_tour(const Instance& instance, std::span<const NodeId> nodes);

}  // namespace gtsp
