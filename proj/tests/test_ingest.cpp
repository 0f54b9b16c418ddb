#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "gtsp/error.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/rng.hpp"

namespace gtsp {
namespace {

const char* kSmallTsp = R"(NAME : toy5
COMMENT : five points
TYPE : TSP
DIMENSION : 5
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0 0
2 3 4
3 1 1
4 10 0
5 10 10
EOF
)";

TEST(Euc2dTest, ThreeFourFive) { EXPECT_EQ(euc2d_distance({0, 0}, {3, 4}), 5.0); }

TEST(Euc2dTest, RoundsToNearestInteger) {
    // sqrt(2) = 1.414... -> 1 under nint(x) = floor(x + 0.5).
    EXPECT_EQ(euc2d_distance({0, 0}, {1, 1}), 1.0);
    // sqrt(2.25) = 1.5 exactly -> rounds half up to 2.
    EXPECT_EQ(euc2d_distance({0, 0}, {1.5, 0}), 2.0);
    // sqrt(5) = 2.236 -> 2; sqrt(8) = 2.828 -> 3.
    EXPECT_EQ(euc2d_distance({0, 0}, {1, 2}), 2.0);
    EXPECT_EQ(euc2d_distance({0, 0}, {2, 2}), 3.0);
}

TEST(Euc2dTest, SymmetricIntegersWithZeroDiagonal) {
    const Instance inst = generate_random_instance(42, 6, 30);
    for (NodeId i = 0; i < inst.node_count(); ++i) {
        EXPECT_EQ(inst.cost(i, i), 0.0);
        for (NodeId j = 0; j < inst.node_count(); ++j) {
            EXPECT_EQ(inst.cost(i, j), inst.cost(j, i));
            EXPECT_EQ(inst.cost(i, j), std::floor(inst.cost(i, j)));
        }
    }
}

TEST(ParseTsplibTest, ReadsHeaderAndCoordinates) {
    const NodeSet nodes = parse_tsplib(kSmallTsp);
    EXPECT_EQ(nodes.name, "toy5");
    ASSERT_EQ(nodes.size(), 5u);
    EXPECT_EQ(nodes.coords[1], (Point{3, 4}));
    EXPECT_EQ(nodes.coords[4], (Point{10, 10}));
}

TEST(ParseTsplibTest, AcceptsScientificCoordinates) {
    const NodeSet nodes = parse_tsplib(
        "NAME: s\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
        "1 3.6e+03 2.3e3\n2 0 0\n3 1 1\nEOF\n");
    EXPECT_EQ(nodes.coords[0], (Point{3600, 2300}));
}

TEST(ParseTsplibTest, MissingDimension) {
    try {
        parse_tsplib("NAME: x\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("DIMENSION"), std::string::npos);
    }
}

TEST(ParseTsplibTest, UnsupportedWeightTypeNamesLine) {
    try {
        parse_tsplib("NAME: x\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("GEO"), std::string::npos);
    }
}

TEST(ParseTsplibTest, MalformedCoordinateLineNamesLine) {
    try {
        parse_tsplib("NAME: x\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
                     "1 0 0\n2 0 zz\n3 1 1\nEOF\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6u);
    }
}

TEST(ParseTsplibTest, TooFewCoordinates) {
    EXPECT_THROW(parse_tsplib("NAME: x\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                              "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n"),
                 ParseError);
}

TEST(ClusteringTest, EveryNodeItsOwnCluster) {
    const NodeSet nodes = parse_tsplib(kSmallTsp);
    const Clustering c = cluster_fischetti(nodes, 5);
    for (const auto& cluster : c.clusters()) EXPECT_EQ(cluster.size(), 1u);
    EXPECT_EQ(c.cluster_count(), 5u);
}

TEST(ClusteringTest, CollinearPointsSplitAtTheExtremes) {
    NodeSet nodes;
    nodes.name = "line6";
    for (int i = 0; i < 6; ++i) nodes.coords.push_back({static_cast<double>(10 * i), 0});
    // Three clusters: centers 0 and 5 (extremes, lower id first), then the
    // node furthest from both (2, lower id of the tie 2/3).
    const Clustering c = cluster_fischetti(nodes, 3);
    EXPECT_EQ(c.centers, (std::vector<NodeId>{0, 5, 2}));
}

TEST(ClusteringTest, ExtremesGetTheirNeighbours) {
    NodeSet nodes;
    for (int i = 0; i < 6; ++i) nodes.coords.push_back({static_cast<double>(i), 0});
    const Clustering c = cluster_fischetti(nodes, 3);
    EXPECT_EQ(c.centers[0], 0u);
    EXPECT_EQ(c.centers[1], 5u);
    EXPECT_EQ(c.assignment, (std::vector<ClusterId>{0, 0, 2, 2, 1, 1}));
}

TEST(ClusteringTest, RejectsOutOfRangeCount) {
    const NodeSet nodes = parse_tsplib(kSmallTsp);
    EXPECT_THROW(cluster_fischetti(nodes, 6), InputError);
    EXPECT_THROW(cluster_fischetti(nodes, 2), InputError);
}

TEST(ClusteringTest, PartitionsAndIsDeterministic) {
    NodeSet nodes;
    Rng rng(9);
    for (int i = 0; i < 76; ++i) {
        nodes.coords.push_back({static_cast<double>(rng.below(5000)), static_cast<double>(rng.below(5000))});
    }
    const std::size_t nc = default_cluster_count(nodes.size());
    EXPECT_EQ(nc, 16u);
    const Clustering a = cluster_fischetti(nodes, nc);
    const Clustering b = cluster_fischetti(nodes, nc);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.centers, b.centers);
    std::size_t total = 0;
    for (const auto& cluster : a.clusters()) {
        EXPECT_FALSE(cluster.empty());
        total += cluster.size();
    }
    EXPECT_EQ(total, 76u);
    for (ClusterId k = 0; k < nc; ++k) EXPECT_EQ(a.assignment[a.centers[k]], k);
}

TEST(ClusteringTest, NamingConvention) {
    EXPECT_EQ(default_cluster_count(76), 16u);
    EXPECT_EQ(default_cluster_count(107), 22u);
    EXPECT_EQ(default_cluster_count(1002), 201u);
    EXPECT_EQ(clustered_name("pr76", 16), "16pr76");
}

TEST(GtspFormatTest, RoundTripToyInstance) {
    const NodeSet nodes = parse_tsplib(kSmallTsp);
    const Instance inst = make_instance(nodes, cluster_fischetti(nodes, 3), "3toy5");
    const std::string text = write_gtsp_instance(inst);
    EXPECT_EQ(parse_gtsp_instance(text), inst);
    EXPECT_EQ(write_gtsp_instance(parse_gtsp_instance(text)), text);
}

TEST(GtspFormatTest, RoundTripIsIdentityOnRandomInstances) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Instance inst = generate_random_instance(seed, 3 + seed % 6, 10 + 3 * seed);
        EXPECT_EQ(parse_gtsp_instance(write_gtsp_instance(inst)), inst) << "seed " << seed;
    }
}

TEST(GtspFormatTest, SetCountMismatch) {
    const char* text =
        "NAME: bad\nTYPE: GTSP\nDIMENSION: 3\nGTSP_SETS: 4\nEDGE_WEIGHT_TYPE: EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\nGTSP_SET_SECTION\n1 1 -1\n2 2 -1\n3 3 -1\nEOF\n";
    EXPECT_THROW(parse_gtsp_instance(text), ParseError);
}

TEST(GtspFormatTest, NodeInTwoSets) {
    const char* text =
        "NAME: bad\nTYPE: GTSP\nDIMENSION: 3\nGTSP_SETS: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\nGTSP_SET_SECTION\n1 1 2 -1\n2 2 -1\n3 3 -1\nEOF\n";
    EXPECT_THROW(parse_gtsp_instance(text), ParseError);
}

TEST(GtspFormatTest, UnassignedNode) {
    const char* text =
        "NAME: bad\nTYPE: GTSP\nDIMENSION: 4\nGTSP_SETS: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\n4 1 1\nGTSP_SET_SECTION\n1 1 -1\n2 2 -1\n3 3 -1\nEOF\n";
    EXPECT_THROW(parse_gtsp_instance(text), ParseError);
}

TEST(GtspFormatTest, MissingTerminator) {
    const char* text =
        "NAME: bad\nTYPE: GTSP\nDIMENSION: 3\nGTSP_SETS: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\nGTSP_SET_SECTION\n1 1 -1\n2 2 -1\n3 3\nEOF\n";
    EXPECT_THROW(parse_gtsp_instance(text), ParseError);
}

TEST(GtspFormatTest, BadTerminator) {
    const char* text =
        "NAME: bad\nTYPE: GTSP\nDIMENSION: 3\nGTSP_SETS: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
        "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\nGTSP_SET_SECTION\n1 1 -2\n2 2 -1\n3 3 -1\nEOF\n";
    EXPECT_THROW(parse_gtsp_instance(text), ParseError);
}

TEST(RandomInstanceTest, SingletonClusters) {
    const Instance inst = generate_random_instance(1, 3, 3);
    for (const auto& cluster : inst.clusters()) EXPECT_EQ(cluster.size(), 1u);
}

TEST(RandomInstanceTest, SameSeedSameBytes) {
    EXPECT_EQ(write_gtsp_instance(generate_random_instance(77, 8, 40)),
              write_gtsp_instance(generate_random_instance(77, 8, 40)));
    EXPECT_NE(write_gtsp_instance(generate_random_instance(77, 8, 40)),
              write_gtsp_instance(generate_random_instance(78, 8, 40)));
}

TEST(RandomInstanceTest, RejectsMoreClustersThanNodes) {
    EXPECT_THROW(generate_random_instance(1, 5, 4), InputError);
    EXPECT_THROW(generate_random_instance(1, 2, 4), InputError);
}

}  // namespace
}  // namespace gtsp
