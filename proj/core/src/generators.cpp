#include "broadcast/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace broadcast {

namespace {

Vertex uniform(Vertex lo, Vertex hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
}

void require_positive(Vertex n) {
  if (n < 1) throw GraphError("generators need at least one vertex");
}

}  // namespace

Graph path_graph(Vertex n) {
  require_positive(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw GraphError("a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph complete_graph(Vertex n) {
  require_positive(n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite_graph(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph(a + b, edges);
}

Graph tree_from_pruefer(Vertex n, std::span<const Vertex> sequence) {
  require_positive(n);
  if (n == 1) return Graph(1, std::span<const Edge>{});
  if (static_cast<Vertex>(sequence.size()) != n - 2) throw GraphError("Pruefer sequence must have length n - 2");
  std::vector<Vertex> degree(static_cast<std::size_t>(n), 1);
  for (Vertex v : sequence) {
    if (v < 0 || v >= n) throw GraphError("Pruefer entry out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge::make(leaf, v));
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.push_back(Edge::make(a, leaves.top()));
  return Graph(n, edges);
}

Graph random_tree(Vertex n, std::mt19937_64& rng) {
  require_positive(n);
  std::vector<Vertex> sequence(static_cast<std::size_t>(std::max<Vertex>(n - 2, 0)));
  for (Vertex& v : sequence) v = uniform(0, n - 1, rng);
  return tree_from_pruefer(n, sequence);
}

Graph random_connected_graph(Vertex n, double p, std::mt19937_64& rng) {
  Graph tree = random_tree(n, rng);
  std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.insert({u, v});
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Graph random_bounded_cyclomatic_graph(Vertex n, std::int64_t k, std::mt19937_64& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) missing.push_back({u, v});
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  missing.resize(static_cast<std::size_t>(std::clamp<std::int64_t>(k, 0, static_cast<std::int64_t>(missing.size()))));
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  edges.insert(edges.end(), missing.begin(), missing.end());
  return Graph(n, edges);
}

Graph random_bounded_cover_graph(Vertex n, Vertex cover, double p, std::mt19937_64& rng) {
  require_positive(n);
  cover = std::clamp<Vertex>(cover, 1, n);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::span<const Vertex> hubs(order.data(), static_cast<std::size_t>(cover));
  std::set<Edge> edges;
  for (Vertex i = 1; i < cover; ++i) {
    edges.insert(Edge::make(hubs[static_cast<std::size_t>(i)], hubs[static_cast<std::size_t>(uniform(0, i - 1, rng))]));
  }
  for (Vertex i = cover; i < n; ++i) {
    edges.insert(Edge::make(order[static_cast<std::size_t>(i)], hubs[static_cast<std::size_t>(uniform(0, cover - 1, rng))]));
  }
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  for (Vertex i = 0; i < cover; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.insert(Edge::make(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

}  // namespace broadcast
