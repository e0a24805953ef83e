#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace broadcast {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// Unordered vertex pair stored with `first < second`.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  static constexpr Edge make(Vertex u, Vertex v) noexcept {
    return u < v ? Edge{u, v} : Edge{v, u};
  }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input exceeds the hard size limit of a solver.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, duplicate edges, or out-of-range ids.
  Graph(Vertex n, std::span<const Edge> edges);
  Graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  Vertex num_vertices() const noexcept { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges in ascending (first, second) order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// m - n + 1 for a connected graph.
  std::int64_t cyclomatic_number() const noexcept {
    return static_cast<std::int64_t>(num_edges()) - num_vertices() + 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Subgraph together with the map from its vertex ids back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // kNoVertex for dropped vertices
};

/// G[vertices]; the new ids follow the order of `vertices`.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Decision question "b(G, s) <= budget?".
struct Instance {
  Graph graph;
  Vertex source = 0;
  std::int64_t budget = 0;

  /// Validates source range, nonnegative budget and connectivity.
  static Instance make(Graph graph, Vertex source, std::int64_t budget);
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kVertexOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kEdgeCountMismatch,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);
  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Parses the "n m" + m edge-line format. '#' lines are comments; CRLF is accepted.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph.
std::string format_graph(const Graph& g);

bool is_connected(const Graph& g);

struct BfsDecomposition {
  std::vector<Vertex> parent;               // parent[source] == source
  std::vector<std::int32_t> distance;
  std::vector<std::vector<Vertex>> levels;  // levels[i] = vertices at distance i, ascending
};

/// Throws GraphError when g is disconnected.
BfsDecomposition bfs_decompose(const Graph& g, Vertex source);

/// Complement of a BFS spanning tree rooted at `root`; size m - n + 1.
std::vector<Edge> feedback_edge_set(const Graph& g, Vertex root = 0);

/// All bridges in ascending order (single DFS low-link pass).
std::vector<Edge> bridges(const Graph& g);

/// A vertex cover of size at most k if one exists (2-way branching on an uncovered edge).
std::optional<std::vector<Vertex>> min_vertex_cover_upto(const Graph& g, std::int32_t k);

/// Partition of `independent` by open neighbourhood; classes ordered by their smallest member.
std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g, std::span<const Vertex> independent);

}  // namespace broadcast
