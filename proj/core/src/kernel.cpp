#include "broadcast/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "broadcast/tree_broadcast.hpp"

namespace broadcast {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string vertex_label(const KernelInstance& ki, Vertex v) {
  Vertex original = ki.original_ids[idx(v)];
  return "vertex " + std::to_string(original == kNoVertex ? v : original);
}

void resolve(KernelInstance& ki, bool yes) { ki = yes ? trivial_yes_instance() : trivial_no_instance(); }

// Rebuilds the instance keeping the vertices with keep[v] set; ids stay in ascending order.
void keep_vertices(KernelInstance& ki, const std::vector<char>& keep, Vertex new_source) {
  const Vertex n = ki.graph.num_vertices();
  std::vector<Vertex> remap(idx(n), kNoVertex);
  std::vector<Vertex> originals;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[idx(v)]) {
      remap[idx(v)] = static_cast<Vertex>(originals.size());
      originals.push_back(ki.original_ids[idx(v)]);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : ki.graph.edges()) {
    if (keep[idx(e.first)] && keep[idx(e.second)]) edges.push_back(Edge::make(remap[idx(e.first)], remap[idx(e.second)]));
  }
  ki.graph = Graph(static_cast<Vertex>(originals.size()), edges);
  ki.source = remap[idx(new_source)];
  ki.original_ids = std::move(originals);
}

std::vector<std::int32_t> distances_from(const Graph& g, Vertex from, const std::vector<char>& allowed) {
  std::vector<std::int32_t> dist(idx(g.num_vertices()), -1);
  dist[idx(from)] = 0;
  std::vector<Vertex> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (allowed[idx(w)] && dist[idx(w)] < 0) {
        dist[idx(w)] = dist[idx(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

KernelInstance KernelInstance::make(Graph graph, Vertex source, std::int64_t k) {
  if (source < 0 || source >= graph.num_vertices()) throw GraphError("source out of range");
  if (!is_connected(graph)) throw GraphError("graph is disconnected");
  KernelInstance ki;
  ki.original_ids.resize(idx(graph.num_vertices()));
  std::iota(ki.original_ids.begin(), ki.original_ids.end(), 0);
  ki.graph = std::move(graph);
  ki.source = source;
  ki.k = k;
  return ki;
}

KernelInstance trivial_yes_instance() {
  KernelInstance ki;
  ki.graph = Graph(1, std::span<const Edge>{});
  ki.source = 0;
  ki.k = 0;
  ki.original_ids = {kNoVertex};
  return ki;
}

KernelInstance trivial_no_instance() {
  KernelInstance ki;
  ki.graph = Graph(2, {{0, 1}});
  ki.source = 0;
  ki.k = 2;
  ki.original_ids = {kNoVertex, kNoVertex};
  return ki;
}

RuleResult rule_trivial(KernelInstance& ki) {
  if (ki.k <= 1) {
    resolve(ki, true);
    return {RuleEffect::kResolvedYes, "k=" + std::to_string(ki.k)};
  }
  if (ki.k > ki.graph.num_vertices()) {
    std::string target = "k=" + std::to_string(ki.k);
    resolve(ki, false);
    return {RuleEffect::kResolvedNo, target};
  }
  return {};
}

RuleResult rule_reroot(KernelInstance& ki) {
  if (ki.graph.num_vertices() < 2 || ki.graph.degree(ki.source) != 1) return {};
  std::string target = vertex_label(ki, ki.source);
  Vertex next = ki.graph.neighbors(ki.source)[0];
  std::vector<char> keep(idx(ki.graph.num_vertices()), 1);
  keep[idx(ki.source)] = 0;
  keep_vertices(ki, keep, next);
  return {RuleEffect::kReduced, target};
}

RuleResult rule_pendant(KernelInstance& ki) {
  const Graph& g = ki.graph;
  const Vertex n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    Vertex pendants = 0;
    Vertex last = kNoVertex;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) == 1 && w != ki.source) {
        ++pendants;
        last = std::max(last, w);
      }
    }
    if (pendants == 0 || pendants < n - pendants) continue;
    std::string target = vertex_label(ki, last);
    std::vector<char> keep(idx(n), 1);
    keep[idx(last)] = 0;
    keep_vertices(ki, keep, ki.source);
    return {RuleEffect::kReduced, target};
  }
  return {};
}

RuleResult rule_bridge(KernelInstance& ki) {
  const Graph& g = ki.graph;
  const Vertex n = g.num_vertices();
  const Vertex s = ki.source;
  for (const Edge& e : bridges(g)) {
    std::vector<char> all(idx(n), 1);
    // Side of s once e is removed.
    std::vector<char> near(idx(n), 0);
    std::vector<Vertex> stack{s};
    near[idx(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (near[idx(w)] || Edge::make(v, w) == e) continue;
        near[idx(w)] = 1;
        stack.push_back(w);
      }
    }
    const Vertex u = near[idx(e.first)] ? e.first : e.second;
    const Vertex v = u == e.first ? e.second : e.first;
    if (u == s || g.degree(u) != 2) continue;
    std::vector<char> far(idx(n), 0);
    Vertex near_size = 0;
    for (Vertex x = 0; x < n; ++x) {
      far[idx(x)] = near[idx(x)] ? 0 : 1;
      near_size += near[idx(x)] ? 1 : 0;
    }
    std::vector<std::int32_t> from_s = distances_from(g, s, near);
    std::vector<std::int32_t> from_v = distances_from(g, v, far);
    const std::int32_t radius = *std::max_element(from_v.begin(), from_v.end());
    if (near_size >= from_s[idx(u)] + radius) continue;

    std::string target = "edge " + std::to_string(ki.original_ids[idx(u)]) + "-" + std::to_string(ki.original_ids[idx(v)]);
    const Vertex kept = std::min(u, v);
    const Vertex gone = std::max(u, v);
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
      if (f == e) continue;
      Vertex a = f.first == gone ? kept : f.first;
      Vertex b = f.second == gone ? kept : f.second;
      edges.push_back(Edge::make(a, b));
    }
    std::vector<Vertex> originals = ki.original_ids;
    originals[idx(kept)] = ki.original_ids[idx(u)];
    Vertex source = s == gone ? kept : s;
    KernelInstance merged;
    merged.graph = Graph(n, edges);
    merged.source = source;
    merged.k = ki.k;
    merged.original_ids = originals;
    std::vector<char> keep(idx(n), 1);
    keep[idx(gone)] = 0;
    keep_vertices(merged, keep, source);
    ki = std::move(merged);
    return {RuleEffect::kReduced, target};
  }
  return {};
}

RuleResult rule_bfs_bound(KernelInstance& ki) {
  BfsDecomposition bfs = bfs_decompose(ki.graph, ki.source);
  std::vector<Edge> tree_edges;
  for (Vertex v = 0; v < ki.graph.num_vertices(); ++v) {
    if (v != ki.source) tree_edges.push_back(Edge::make(v, bfs.parent[idx(v)]));
  }
  TreeView tree(Graph(ki.graph.num_vertices(), tree_edges));
  const Round time = tree_broadcast_time(tree, ki.source).time;
  if (time > ki.budget()) return {};
  std::string target = "b(B,s)=" + std::to_string(time);
  resolve(ki, true);
  return {RuleEffect::kResolvedYes, target};
}

RuleResult rule_heavy_branch(KernelInstance& ki) {
  const Graph& g = ki.graph;
  const Vertex n = g.num_vertices();
  BfsDecomposition bfs = bfs_decompose(g, ki.source);
  for (std::size_t level = 0; level + 1 < bfs.levels.size(); ++level) {
    for (Vertex v : bfs.levels[level]) {
      std::vector<Vertex> forward;
      for (Vertex w : g.neighbors(v)) {
        if (bfs.distance[idx(w)] == static_cast<std::int32_t>(level) + 1) forward.push_back(w);
      }
      if (static_cast<std::int64_t>(forward.size()) < 2 * ki.k + 1) continue;
      std::vector<char> off_path(idx(n), 1);
      for (Vertex x = v;; x = bfs.parent[idx(x)]) {
        off_path[idx(x)] = 0;
        if (x == ki.source) break;
      }
      std::vector<std::int32_t> component(idx(n), -1);
      std::vector<Vertex> sizes;
      for (Vertex root = 0; root < n; ++root) {
        if (!off_path[idx(root)] || component[idx(root)] >= 0) continue;
        const auto id = static_cast<std::int32_t>(sizes.size());
        std::vector<Vertex> stack{root};
        component[idx(root)] = id;
        Vertex size = 0;
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          ++size;
          for (Vertex w : g.neighbors(x)) {
            if (off_path[idx(w)] && component[idx(w)] < 0) {
              component[idx(w)] = id;
              stack.push_back(w);
            }
          }
        }
        sizes.push_back(size);
      }
      std::vector<char> counted(sizes.size(), 0);
      std::int64_t total = 0;
      for (Vertex x : forward) {
        const std::int32_t c = component[idx(x)];
        if (counted[idx(c)] || sizes[idx(c)] < 2) continue;
        counted[idx(c)] = 1;
        total += sizes[idx(c)];
      }
      if (total < 4 * ki.k - 2) continue;
      std::string target = vertex_label(ki, v);
      resolve(ki, true);
      return {RuleEffect::kResolvedYes, target};
    }
  }
  return {};
}

KernelOutcome kernelize(KernelInstance ki) {
  using Rule = RuleResult (*)(KernelInstance&);
  static constexpr std::pair<const char*, Rule> kRules[] = {
      {"trivial", &rule_trivial},       {"reroot", &rule_reroot},       {"pendant", &rule_pendant},
      {"bridge", &rule_bridge},         {"bfs-bound", &rule_bfs_bound}, {"heavy-branch", &rule_heavy_branch},
  };
  KernelOutcome out;
  for (;;) {
    bool changed = false;
    for (const auto& [name, rule] : kRules) {
      const Vertex before = ki.graph.num_vertices();
      RuleResult r = rule(ki);
      if (r.effect == RuleEffect::kNotApplicable) continue;
      out.trace.push_back({name, r.target, before, ki.graph.num_vertices()});
      if (r.effect == RuleEffect::kResolvedYes || r.effect == RuleEffect::kResolvedNo) {
        out.status = r.effect == RuleEffect::kResolvedYes ? KernelStatus::kYes : KernelStatus::kNo;
        out.instance = std::move(ki);
        return out;
      }
      changed = true;
      break;
    }
    if (!changed) break;
  }
  out.status = KernelStatus::kReduced;
  out.instance = std::move(ki);
  return out;
}

}  // namespace broadcast
