#include "broadcast/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace broadcast {

namespace {

std::vector<std::vector<Vertex>> build_adjacency(Vertex n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adjacency[static_cast<std::size_t>(e.first)].push_back(e.second);
    adjacency[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& row : adjacency) std::sort(row.begin(), row.end());
  return adjacency;
}

}  // namespace

Graph::Graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.first < 0 || raw.second < 0 || raw.first >= n || raw.second >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (raw.first == raw.second) throw GraphError("self-loop on vertex " + std::to_string(raw.first));
    edges_.push_back(Edge::make(raw.first, raw.second));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  }
  adjacency_ = build_adjacency(n, edges_);
}

Graph::Graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back(Edge{u, v});
  *this = Graph(n, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  sub.from_parent.assign(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    sub.from_parent[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = sub.from_parent[static_cast<std::size_t>(w)];
      if (j != kNoVertex && static_cast<Vertex>(i) < j) edges.push_back(Edge{static_cast<Vertex>(i), j});
    }
  }
  sub.graph = Graph(static_cast<Vertex>(vertices.size()), edges);
  return sub;
}

Instance Instance::make(Graph graph, Vertex source, std::int64_t budget) {
  if (source < 0 || source >= graph.num_vertices()) throw GraphError("source out of range");
  if (budget < 0) throw GraphError("negative budget");
  if (!is_connected(graph)) throw GraphError("instance graph is disconnected");
  return Instance{std::move(graph), source, budget};
}

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed-header";
    case ParseErrorKind::kMalformedEdge: return "malformed-edge";
    case ParseErrorKind::kVertexOutOfRange: return "vertex-out-of-range";
    case ParseErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kEdgeCountMismatch: return "edge-count-mismatch";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_int(std::string_view field, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;  // edge, line
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (n < 0) {
      if (fields.size() != 2 || !parse_int(fields[0], n) || !parse_int(fields[1], m) || n < 0 || m < 0 ||
          n > (std::int64_t{1} << 30)) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "expected \"n m\"");
      }
      edges.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 1 << 24)));
    } else {
      std::int64_t u = 0;
      std::int64_t v = 0;
      if (fields.size() != 2 || !parse_int(fields[0], u) || !parse_int(fields[1], v)) {
        throw ParseError(ParseErrorKind::kMalformedEdge, line_no, "expected \"u v\"");
      }
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no, "vertex id must be in [0, n)");
      }
      if (u == v) throw ParseError(ParseErrorKind::kSelfLoop, line_no, "self-loop on " + std::to_string(u));
      if (static_cast<std::int64_t>(edges.size()) >= m) {
        throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no, "more edge lines than declared");
      }
      Edge e = Edge::make(static_cast<Vertex>(u), static_cast<Vertex>(v));
      edges.push_back(e);
      seen.emplace_back(e, line_no);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, seen[i].second,
                       "edge " + std::to_string(seen[i].first.first) + " " + std::to_string(seen[i].first.second) +
                           " repeated");
    }
  }
  return Graph(static_cast<Vertex>(n), edges);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

bool is_connected(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

BfsDecomposition bfs_decompose(const Graph& g, Vertex source) {
  const Vertex n = g.num_vertices();
  if (source < 0 || source >= n) throw GraphError("bfs source out of range");
  BfsDecomposition out;
  out.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  out.distance.assign(static_cast<std::size_t>(n), -1);
  out.parent[static_cast<std::size_t>(source)] = source;
  out.distance[static_cast<std::size_t>(source)] = 0;
  std::vector<Vertex> order{source};
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex w : g.neighbors(v)) {
      if (out.distance[static_cast<std::size_t>(w)] < 0) {
        out.distance[static_cast<std::size_t>(w)] = out.distance[static_cast<std::size_t>(v)] + 1;
        out.parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  if (static_cast<Vertex>(order.size()) != n) throw GraphError("bfs_decompose on a disconnected graph");
  out.levels.resize(static_cast<std::size_t>(out.distance[static_cast<std::size_t>(order.back())]) + 1);
  for (Vertex v = 0; v < n; ++v) out.levels[static_cast<std::size_t>(out.distance[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

std::vector<Edge> feedback_edge_set(const Graph& g, Vertex root) {
  if (g.num_vertices() == 0) return {};
  BfsDecomposition bfs = bfs_decompose(g, root);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    bool tree_edge = bfs.parent[static_cast<std::size_t>(e.first)] == e.second ||
                     bfs.parent[static_cast<std::size_t>(e.second)] == e.first;
    if (!tree_edge) out.push_back(e);
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> entry(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> out;
  std::int32_t timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (entry[static_cast<std::size_t>(root)] >= 0) continue;
    stack.push_back({root, kNoVertex, 0});
    entry[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto row = g.neighbors(f.v);
      if (f.next < row.size()) {
        Vertex w = row[f.next++];
        if (w == f.parent) continue;  // simple graph: the parent edge is unique
        if (entry[static_cast<std::size_t>(w)] >= 0) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], entry[static_cast<std::size_t>(w)]);
        } else {
          entry[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        }
        continue;
      }
      Vertex v = f.v;
      Vertex p = f.parent;
      stack.pop_back();
      if (p != kNoVertex) {
        low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] > entry[static_cast<std::size_t>(p)]) out.push_back(Edge::make(p, v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool cover_branch(const Graph& g, std::vector<char>& in_cover, std::int32_t budget, std::vector<Vertex>& chosen) {
  for (const Edge& e : g.edges()) {
    if (in_cover[static_cast<std::size_t>(e.first)] || in_cover[static_cast<std::size_t>(e.second)]) continue;
    if (budget == 0) return false;
    for (Vertex pick : {e.first, e.second}) {
      in_cover[static_cast<std::size_t>(pick)] = 1;
      chosen.push_back(pick);
      if (cover_branch(g, in_cover, budget - 1, chosen)) return true;
      chosen.pop_back();
      in_cover[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> min_vertex_cover_upto(const Graph& g, std::int32_t k) {
  if (k < 0) return std::nullopt;
  std::vector<char> in_cover(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> chosen;
  if (!cover_branch(g, in_cover, k, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g, std::span<const Vertex> independent) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighbourhood;
  for (Vertex v : independent) {
    auto row = g.neighbors(v);
    by_neighbourhood[std::vector<Vertex>(row.begin(), row.end())].push_back(v);
  }
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(by_neighbourhood.size());
  for (auto& [key, members] : by_neighbourhood) {
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace broadcast
