#include <gtest/gtest.h>

#include "gtsp/error.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/oracle.hpp"
#include "support/reference.hpp"

namespace gtsp {
namespace {

TEST(ExactTest, TriangleOptimum) {
    const Instance inst = testing::unit_triangle();
    EXPECT_EQ(exact_optimum_dp(inst).optimum_cost, 3.0);
    EXPECT_EQ(exact_optimum_bruteforce(inst).optimum_cost, 3.0);
}

TEST(ExactTest, FrozenFixtureOptimum) {
    const Instance inst = generate_random_instance(7, 6, 18);
    EXPECT_EQ(inst.name(), "6rand18s7");
    const ExactResult dp = exact_optimum_dp(inst);
    EXPECT_EQ(dp.optimum_cost, 2226.0);
    EXPECT_TRUE(validate_tour(inst, dp.optimum_tour.nodes).ok());
    EXPECT_EQ(tour_cost(inst, dp.optimum_tour.nodes), 2226.0);
}

TEST(ExactTest, AgreesWithIndependentEnumeration) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t p = 3 + seed % 4;
        const Instance inst = generate_random_instance(seed, p, p + 2 * p / 3 + seed % 3);
        const double reference = testing::enumerate_optimum(inst);
        const ExactResult dp = exact_optimum_dp(inst);
        const ExactResult bf = exact_optimum_bruteforce(inst);
        EXPECT_EQ(dp.optimum_cost, reference) << inst.name();
        EXPECT_EQ(bf.optimum_cost, reference) << inst.name();
        EXPECT_EQ(testing::resum_cycle(inst, dp.optimum_tour.nodes), reference);
        EXPECT_EQ(testing::resum_cycle(inst, bf.optimum_tour.nodes), reference);
    }
}

TEST(ExactTest, DpMatchesBruteforceOnLargerInstances) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const Instance inst = generate_random_instance(seed, 7, 21);
        EXPECT_EQ(exact_optimum_dp(inst).optimum_cost, exact_optimum_bruteforce(inst).optimum_cost);
    }
}

TEST(ExactTest, CapacityLimits) {
    const Instance inst = generate_random_instance(1, 9, 18);
    EXPECT_THROW(exact_optimum_bruteforce(inst), CapacityError);
    EXPECT_THROW(exact_optimum_dp(inst, 8), CapacityError);
    EXPECT_THROW(exact_optimum_bruteforce(generate_random_instance(1, 7, 40), 8, 1000), CapacityError);
}

TEST(NearestNeighborTest, ValidAndNotBelowOptimum) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Instance inst = generate_random_instance(seed, 6, 20);
        const Cost optimum = exact_optimum_dp(inst).optimum_cost;
        for (NodeId v = 0; v < inst.node_count(); ++v) {
            const Tour t = nearest_neighbor(inst, v);
            EXPECT_EQ(t.nodes.front(), v);
            EXPECT_TRUE(validate_tour(inst, t.nodes).ok());
            EXPECT_EQ(t.cost, testing::resum_cycle(inst, t.nodes));
            EXPECT_GE(t.cost, optimum);
        }
    }
}

TEST(NearestNeighborTest, GreedyChoiceByHand) {
    // From 0: nearest of {1, 2, 3} is 2 (cost 1); then 3 (cost 2, node 1 shares
    // cluster with 2); close back to 0.
    const Instance inst = testing::matrix_instance(
        {{0, 3, 1, 5}, {3, 0, 4, 1}, {1, 4, 0, 2}, {5, 1, 2, 0}}, {{0}, {1, 2}, {3}});
    const Tour t = nearest_neighbor(inst, 0);
    EXPECT_EQ(t.nodes, (std::vector<NodeId>{0, 2, 3}));
    EXPECT_EQ(t.cost, 8.0);
}

}  // namespace
}  // namespace gtsp
