#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "broadcast/generators.hpp"
#include "broadcast/graph.hpp"
#include "broadcast/matching.hpp"
#include "reference.hpp"

namespace broadcast {
namespace {

ParseErrorKind parse_failure(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseErrorKind::kMalformedHeader;
}

TEST(ParseGraph, PathOnThreeVertices) {
  Graph g = parse_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(ParseGraph, SingleIsolatedVertex) {
  Graph g = parse_graph("1 0");
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(ParseGraph, DistinctErrorsPerViolation) {
  EXPECT_EQ(parse_failure("3 2\n0 1\n0 1"), ParseErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_failure("3 2\n0 1\n1 0"), ParseErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_failure("3 1\n1 1"), ParseErrorKind::kSelfLoop);
  EXPECT_EQ(parse_failure("3 1\n0 3"), ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_failure("three 1\n0 1"), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(parse_failure(""), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(parse_failure("3 1\n0 x"), ParseErrorKind::kMalformedEdge);
  EXPECT_EQ(parse_failure("3 2\n0 1"), ParseErrorKind::kEdgeCountMismatch);
}

TEST(ParseGraph, CommentsAndCrlf) {
  Graph g = parse_graph("# header comment\r\n3 2\r\n# middle\r\n0 1\r\n1 2\r\n");
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(ParseGraph, FormatRoundTrips) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_connected_graph(1 + i, 0.3, rng);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
}

TEST(GraphConstruction, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(GraphConstruction, NeighborListsSorted) {
  Graph g(4, {{3, 0}, {0, 1}, {2, 0}});
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(nb.size(), 3u);
}

TEST(InstanceMake, ValidatesInputs) {
  EXPECT_THROW(Instance::make(Graph(2, std::span<const Edge>{}), 0, 1), GraphError);
  EXPECT_THROW(Instance::make(path_graph(3), 3, 1), GraphError);
  EXPECT_THROW(Instance::make(path_graph(3), 0, -1), GraphError);
  EXPECT_NO_THROW(Instance::make(path_graph(3), 2, 0));
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(path_graph(3)));
  EXPECT_FALSE(is_connected(Graph(2, std::span<const Edge>{})));
  EXPECT_TRUE(is_connected(Graph(1, std::span<const Edge>{})));
}

TEST(BfsDecompose, CycleOfFour) {
  BfsDecomposition d = bfs_decompose(cycle_graph(4), 0);
  ASSERT_EQ(d.levels.size(), 3u);
  EXPECT_EQ(d.levels[0], std::vector<Vertex>({0}));
  EXPECT_EQ(d.levels[1], std::vector<Vertex>({1, 3}));
  EXPECT_EQ(d.levels[2], std::vector<Vertex>({2}));
  EXPECT_EQ(d.parent[0], 0);
}

TEST(BfsDecompose, PathAndComplete) {
  BfsDecomposition p = bfs_decompose(path_graph(3), 0);
  EXPECT_EQ(p.levels, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  for (Vertex s = 0; s < 4; ++s) {
    BfsDecomposition k = bfs_decompose(complete_graph(4), s);
    ASSERT_EQ(k.levels.size(), 2u);
    EXPECT_EQ(k.levels[1].size(), 3u);
  }
  EXPECT_THROW(bfs_decompose(Graph(2, std::span<const Edge>{}), 0), GraphError);
}

TEST(BfsDecompose, LevelsAreDistanceClasses) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_connected_graph(2 + i % 15, 0.2, rng);
    BfsDecomposition d = bfs_decompose(g, 0);
    Vertex total = 0;
    for (std::size_t l = 0; l < d.levels.size(); ++l) {
      total += static_cast<Vertex>(d.levels[l].size());
      for (Vertex v : d.levels[l]) {
        EXPECT_EQ(d.distance[static_cast<std::size_t>(v)], static_cast<std::int32_t>(l));
        if (l > 0) EXPECT_EQ(d.distance[static_cast<std::size_t>(d.parent[static_cast<std::size_t>(v)])] + 1, d.distance[static_cast<std::size_t>(v)]);
      }
    }
    EXPECT_EQ(total, g.num_vertices());
  }
}

TEST(FeedbackEdgeSet, Sizes) {
  EXPECT_TRUE(feedback_edge_set(path_graph(5)).empty());
  EXPECT_EQ(feedback_edge_set(cycle_graph(5)).size(), 1u);
  EXPECT_EQ(feedback_edge_set(complete_graph(4)).size(), 3u);
}

TEST(FeedbackEdgeSet, LeavesSpanningTree) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_connected_graph(1 + i % 14, 0.35, rng);
    std::vector<Edge> fes = feedback_edge_set(g);
    EXPECT_EQ(static_cast<std::int64_t>(fes.size()), g.cyclomatic_number());
    std::vector<Edge> rest;
    for (const Edge& e : g.edges()) {
      if (!std::binary_search(fes.begin(), fes.end(), e)) rest.push_back(e);
    }
    Graph t(g.num_vertices(), rest);
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(static_cast<Vertex>(t.num_edges()), g.num_vertices() - 1);
  }
}

TEST(Bridges, Examples) {
  EXPECT_EQ(bridges(path_graph(4)).size(), 3u);
  EXPECT_TRUE(bridges(cycle_graph(5)).empty());
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(bridges(two_triangles), std::vector<Edge>({{2, 3}}));
  EXPECT_EQ(reference::bridges_by_deletion(two_triangles), std::vector<Edge>({{2, 3}}));
}

TEST(Bridges, MatchDeleteAndTest) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_connected_graph(1 + i % 8, 0.1 + 0.05 * (i % 8), rng);
    EXPECT_EQ(bridges(g), reference::bridges_by_deletion(g));
  }
}

TEST(MinVertexCover, Examples) {
  auto star = min_vertex_cover_upto(star_graph(4), 1);
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(*star, std::vector<Vertex>({0}));
  EXPECT_FALSE(min_vertex_cover_upto(cycle_graph(5), 1).has_value());
  EXPECT_FALSE(min_vertex_cover_upto(cycle_graph(5), 2).has_value());
  auto c5 = min_vertex_cover_upto(cycle_graph(5), 3);
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->size(), 3u);
}

TEST(MinVertexCover, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected_graph(1 + i % 10, 0.3, rng);
    const auto best = static_cast<std::int32_t>(reference::min_vertex_cover_brute(g).size());
    auto found = min_vertex_cover_upto(g, best);
    ASSERT_TRUE(found.has_value());
    EXPECT_LE(static_cast<std::int32_t>(found->size()), best);
    for (const Edge& e : g.edges()) {
      EXPECT_TRUE(std::binary_search(found->begin(), found->end(), e.first) ||
                  std::binary_search(found->begin(), found->end(), e.second));
    }
    if (best > 0) EXPECT_FALSE(min_vertex_cover_upto(g, best - 1).has_value());
  }
}

TEST(FalseTwinClasses, Examples) {
  std::vector<Vertex> side{2, 3, 4};
  EXPECT_EQ(false_twin_classes(complete_bipartite_graph(2, 3), side), (std::vector<std::vector<Vertex>>{{2, 3, 4}}));
  std::vector<Vertex> twins{0, 2};
  EXPECT_EQ(false_twin_classes(path_graph(3), twins), (std::vector<std::vector<Vertex>>{{0, 2}}));
  std::vector<Vertex> ends{0, 3};
  EXPECT_EQ(false_twin_classes(path_graph(4), ends), (std::vector<std::vector<Vertex>>{{0}, {3}}));
  std::vector<Vertex> leaves{1, 2, 3};
  EXPECT_EQ(false_twin_classes(star_graph(3), leaves), (std::vector<std::vector<Vertex>>{{1, 2, 3}}));
}

TEST(FalseTwinClasses, SameClassIffSameNeighbourhood) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_bounded_cover_graph(4 + i % 9, 1 + i % 3, 0.5, rng);
    auto cover = min_vertex_cover_upto(g, 3);
    ASSERT_TRUE(cover.has_value());
    std::vector<Vertex> independent;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!std::binary_search(cover->begin(), cover->end(), v)) independent.push_back(v);
    }
    auto classes = false_twin_classes(g, independent);
    std::size_t total = 0;
    for (std::size_t a = 0; a < classes.size(); ++a) {
      total += classes[a].size();
      for (Vertex u : classes[a]) {
        auto nu = g.neighbors(u);
        auto nf = g.neighbors(classes[a][0]);
        EXPECT_TRUE(std::equal(nu.begin(), nu.end(), nf.begin(), nf.end()));
      }
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        auto na = g.neighbors(classes[a][0]);
        auto nb = g.neighbors(classes[b][0]);
        EXPECT_FALSE(std::equal(na.begin(), na.end(), nb.begin(), nb.end()));
      }
    }
    EXPECT_EQ(total, independent.size());
  }
}

TEST(SaturatingMatching, Examples) {
  std::vector<Vertex> a{0};
  std::vector<Vertex> xy{10, 11};
  std::vector<MatchedPair> e1{{0, 10}, {0, 11}};
  EXPECT_FALSE(saturating_matching(a, xy, e1).has_value());
  std::vector<Vertex> ab{0, 1};
  std::vector<MatchedPair> e2{{0, 10}, {1, 10}, {1, 11}};
  auto m = saturating_matching(ab, xy, e2);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, (std::vector<MatchedPair>{{0, 10}, {1, 11}}));
  auto empty = saturating_matching(ab, std::span<const Vertex>{}, e2);
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->empty());
}

TEST(SaturatingMatching, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const int nl = 1 + static_cast<int>(rng() % 5);
    const int nr = 1 + static_cast<int>(rng() % 5);
    std::vector<Vertex> left(static_cast<std::size_t>(nl));
    std::vector<Vertex> right(static_cast<std::size_t>(nr));
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), 100);
    std::vector<MatchedPair> edges;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex l : left) {
      for (Vertex r : right) {
        if (rng() % 3 == 0) {
          edges.push_back({l, r});
          pairs.emplace_back(l, r);
        }
      }
    }
    auto m = saturating_matching(left, right, edges);
    EXPECT_EQ(m.has_value(), reference::max_matching_brute(pairs) == right.size());
    if (m) {
      EXPECT_EQ(m->size(), right.size());
      for (const auto& p : *m) EXPECT_NE(std::find(edges.begin(), edges.end(), p), edges.end());
    }
  }
}

TEST(InducedSubgraph, MapsIds) {
  std::vector<Vertex> keep{3, 1, 2};
  Subgraph sub = induced_subgraph(path_graph(5), keep);
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  EXPECT_EQ(sub.to_parent, keep);
  EXPECT_EQ(sub.from_parent[0], kNoVertex);
  EXPECT_EQ(sub.from_parent[3], 0);
  EXPECT_EQ(sub.graph.num_edges(), 2u);
}

}  // namespace
}  // namespace broadcast
