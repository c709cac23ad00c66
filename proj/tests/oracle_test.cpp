#include <gtest/gtest.h>

#include "gcdpairs/oracle.hpp"

using namespace gcdpairs;
using namespace gcdpairs::oracle;

TEST(Oracle, Gcd) {
    EXPECT_EQ(naive_gcd(0, 0), 0u);
    EXPECT_EQ(naive_gcd(0, 5), 5u);
    EXPECT_EQ(naive_gcd(5, 0), 5u);
    EXPECT_EQ(naive_gcd(84, 36), 12u);
    EXPECT_FALSE(naive_is_pair(6, 0, 0));
    EXPECT_TRUE(naive_is_pair(6, 0, 3));
}

TEST(Oracle, EnumerationExamples) {
    EXPECT_EQ(naive_enumerate(1).size(), 0u);
    EXPECT_EQ(naive_enumerate(6).size(), 16u);
    EXPECT_EQ(naive_enumerate(9).size(), 26u);
    EXPECT_EQ(naive_zero_divisor_pair_count(6), 5u);
    EXPECT_EQ(naive_zero_divisor_pair_count(15), 14u);
    EXPECT_EQ(naive_zero_divisor_pair_count(30), 189u);
    EXPECT_EQ(naive_zero_divisor_pair_count(7), 0u);
    EXPECT_EQ(naive_count_within(9, [](Natural) { return true; }), 26u);
}

TEST(Oracle, Adjacency) {
    auto adj = naive_adjacency(6);
    EXPECT_TRUE(adj[2][3]);
    EXPECT_FALSE(adj[2][2]);  // simple edges only
    EXPECT_FALSE(adj[0][4]);
}

TEST(Oracle, Cliques) {
    EXPECT_EQ(exhaustive_max_clique(6).vertices, (std::vector<Natural>{1, 2, 3, 4, 5}));
    EXPECT_EQ(exhaustive_max_clique(4).vertices, (std::vector<Natural>{0, 1, 2}));
    EXPECT_EQ(exhaustive_max_clique(22).vertices.size(), 10u);
    EXPECT_EQ(exhaustive_max_clique(graph::GcdGraph::build(7)).vertices.size(), 4u);
    EXPECT_THROW(exhaustive_max_clique(kMaxCliqueOrder + 1), std::exception);
}

TEST(Oracle, Chromatic) {
    const Natural expected[] = {1, 2, 2, 3, 3, 5, 4, 6, 5, 6, 5, 10};
    for (Natural n = 1; n <= 12; ++n) EXPECT_EQ(exhaustive_chromatic(n), expected[n - 1]) << n;
    EXPECT_THROW(exhaustive_chromatic(kMaxChromaticOrder + 1), std::exception);
}

TEST(Oracle, Cycles) {
    EXPECT_EQ(exhaustive_hamiltonian(3).longest_cycle_order, 0u);
    auto s4 = exhaustive_hamiltonian(4);
    ASSERT_TRUE(s4.hamiltonian_cycle);
    EXPECT_TRUE(s4.hamiltonian_cycle->valid_in(graph::GcdGraph::build(4)));
    auto s9 = exhaustive_hamiltonian(9);
    EXPECT_FALSE(s9.hamiltonian_cycle);
    EXPECT_EQ(s9.longest_cycle_order, 8u);
    ASSERT_TRUE(s9.longest_cycle);
    EXPECT_TRUE(s9.longest_cycle->valid_in(graph::GcdGraph::build(9)));
    EXPECT_THROW(exhaustive_hamiltonian(kMaxHamiltonianOrder + 1), std::exception);
}

TEST(Oracle, Domination) {
    EXPECT_EQ(exhaustive_domination(1), 1u);
    EXPECT_EQ(exhaustive_domination(12), 1u);
    EXPECT_THROW(exhaustive_domination(kMaxDominationOrder + 1), std::exception);
}
