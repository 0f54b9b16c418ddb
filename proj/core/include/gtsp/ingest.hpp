#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gtsp/model.hpp"

namespace gtsp {

enum class EdgeWeightType { Euc2D };

/// Planar node set read from a TSPLIB file.
struct NodeSet {
    std::string name;
    std::vector<Point> coords;
    EdgeWeightType edge_weight_type = EdgeWeightType::Euc2D;

    std::size_t size() const noexcept { return coords.size(); }
};

/// TSPLIB EUC_2D distance: Euclidean length rounded half up to an integer.
Cost euc2d_distance(Point a, Point b);

/// Dense EUC_2D cost matrix over `coords`.
CostMatrix euc2d_matrix(const std::vector<Point>& coords);

/// Parses a TSPLIB95 file (EUC_2D, NODE_COORD_SECTION). Throws ParseError
/// with the offending line number.
NodeSet parse_tsplib(std::string_view text);
NodeSet read_tsplib_file(const std::filesystem::path& path);

struct Clustering {
    std::vector<ClusterId> assignment;  // node -> cluster index
    std::vector<NodeId> centers;        // cluster index -> center node

    std::size_t cluster_count() const noexcept { return centers.size(); }
    std::vector<std::vector<NodeId>> clusters() const;
};

/// ceil(n / 5), the cluster count used by the public GTSP instance library.
std::size_t default_cluster_count(std::size_t n);

/// Center-based clustering: the first center is the node furthest from the
/// centroid, each further center maximises its distance to the nearest chosen
/// center, and every node joins its nearest center. Ties go to the lower node
/// id. Requires 3 <= nc <= n.
Clustering cluster_fischetti(const NodeSet& nodes, std::size_t nc);

/// "<nc><name>", e.g. "16pr76".
std::string clustered_name(std::string_view base, std::size_t nc);

/// Instance with EUC_2D costs over `nodes` partitioned by `clustering`.
Instance make_instance(const NodeSet& nodes, const Clustering& clustering, std::string name);

/// GTSP-LIB style: TSPLIB header, GTSP_SETS, NODE_COORD_SECTION and a
/// GTSP_SET_SECTION of "<set-id> <node> ... -1" lines (1-based ids).
Instance parse_gtsp_instance(std::string_view text);
Instance read_gtsp_file(const std::filesystem::path& path);

/// Inverse of parse_gtsp_instance. Requires coordinates.
std::string write_gtsp_instance(const Instance& instance);

/// Uniform integer points in [0, extent]^2 with EUC_2D costs, clustered by
/// cluster_fischetti into `clusters` sets. Same seed gives the same instance.
Instance generate_random_instance(std::uint64_t seed, std::size_t clusters, std::size_t nodes,
                                  double extent = 1000.0);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gtsp
