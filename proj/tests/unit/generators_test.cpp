#include <gtest/gtest.h>

#include <random>

#include "broadcast/generators.hpp"
#include "broadcast/tree_broadcast.hpp"

namespace broadcast {
namespace {

TEST(Generators, ClosedFamilies) {
  EXPECT_EQ(path_graph(1).num_edges(), 0u);
  EXPECT_EQ(cycle_graph(6).num_edges(), 6u);
  EXPECT_EQ(complete_graph(6).num_edges(), 15u);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  EXPECT_EQ(complete_bipartite_graph(2, 5).degree(0), 5);
  EXPECT_THROW(cycle_graph(2), GraphError);
}

TEST(Generators, PrueferDecoding) {
  std::vector<Vertex> seq{3, 3, 3, 4};
  Graph t = tree_from_pruefer(6, seq);
  EXPECT_TRUE(is_tree(t));
  EXPECT_EQ(t.degree(3), 4);
  EXPECT_EQ(t.degree(4), 2);
}

TEST(Generators, RandomFamiliesHoldTheirGuarantees) {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 1 + i % 25;
    EXPECT_TRUE(is_tree(random_tree(n, rng)));
    EXPECT_TRUE(is_connected(random_connected_graph(n, 0.2, rng)));
    Graph c = random_bounded_cyclomatic_graph(n, i % 4, rng);
    EXPECT_TRUE(is_connected(c));
    EXPECT_LE(c.cyclomatic_number(), i % 4);
    const Vertex cover = std::min<Vertex>(n, 1 + i % 3);
    Graph v = random_bounded_cover_graph(n, cover, 0.5, rng);
    EXPECT_TRUE(is_connected(v));
    EXPECT_TRUE(min_vertex_cover_upto(v, cover).has_value());
  }
}

TEST(Generators, SeedDeterminism) {
  std::mt19937_64 a(7);
  std::mt19937_64 b(7);
  EXPECT_EQ(random_connected_graph(15, 0.3, a), random_connected_graph(15, 0.3, b));
}

}  // namespace
}  // namespace broadcast
