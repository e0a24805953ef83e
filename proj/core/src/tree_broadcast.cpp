#include "broadcast/tree_broadcast.hpp"

#include <algorithm>

namespace broadcast {

namespace {

struct RootedPass {
  std::vector<Vertex> preorder;
  std::vector<Vertex> parent;                     // kNoVertex outside the component
  std::vector<Round> time;                        // b(subtree(v), v)
  std::vector<std::vector<Vertex>> children;      // sorted by (time desc, id asc)
};

// One bottom-up pass over the component of `allowed` containing root (all vertices if empty).
RootedPass rooted_pass(const Graph& g, Vertex root, std::span<const char> allowed) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[static_cast<std::size_t>(v)]; };
  RootedPass pass;
  pass.parent.assign(n, kNoVertex);
  pass.time.assign(n, 0);
  pass.children.assign(n, {});
  pass.parent[static_cast<std::size_t>(root)] = root;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    pass.preorder.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!ok(w) || pass.parent[static_cast<std::size_t>(w)] != kNoVertex) continue;
      pass.parent[static_cast<std::size_t>(w)] = v;
      pass.children[static_cast<std::size_t>(v)].push_back(w);
      stack.push_back(w);
    }
  }
  for (auto it = pass.preorder.rbegin(); it != pass.preorder.rend(); ++it) {
    auto& kids = pass.children[static_cast<std::size_t>(*it)];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      Round ta = pass.time[static_cast<std::size_t>(a)];
      Round tb = pass.time[static_cast<std::size_t>(b)];
      return ta != tb ? ta > tb : a < b;
    });
    Round best = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      best = std::max(best, static_cast<Round>(i + 1) + pass.time[static_cast<std::size_t>(kids[i])]);
    }
    pass.time[static_cast<std::size_t>(*it)] = best;
  }
  return pass;
}

void emit_orders(const RootedPass& pass, BroadcastProtocol& out, Vertex skip_below = kNoVertex) {
  for (Vertex v : pass.preorder) {
    if (v == skip_below) continue;
    for (Vertex c : pass.children[static_cast<std::size_t>(v)]) out.append_child(v, c);
  }
}

void require_leaves(const TreeView& tree, Vertex x, Vertex y) {
  const Vertex n = tree.num_vertices();
  if (x < 0 || y < 0 || x >= n || y >= n) throw GraphError("leaf id out of range");
  if (x == y) throw GraphError("x and y must be distinct leaves");
  if (!tree.is_leaf(x) || !tree.is_leaf(y)) throw GraphError("x and y must be leaves of the tree");
}

}  // namespace

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && static_cast<std::int64_t>(g.num_edges()) == g.num_vertices() - 1 && is_connected(g);
}

TreeView::TreeView(Graph g) : graph_(std::move(g)) {
  if (!is_tree(graph_)) throw GraphError("graph is not a tree");
}

std::vector<Vertex> TreeView::path(Vertex from, Vertex to) const {
  RootedPass pass = rooted_pass(graph_, from, {});
  std::vector<Vertex> out{to};
  while (out.back() != from) out.push_back(pass.parent[static_cast<std::size_t>(out.back())]);
  std::reverse(out.begin(), out.end());
  return out;
}

Round schedule_subtree(const Graph& g, Vertex root, std::span<const char> allowed, BroadcastProtocol* out) {
  RootedPass pass = rooted_pass(g, root, allowed);
  if (out != nullptr) emit_orders(pass, *out);
  return pass.time[static_cast<std::size_t>(root)];
}

TreeBroadcast tree_broadcast_time(const TreeView& tree, Vertex source) {
  if (source < 0 || source >= tree.num_vertices()) throw GraphError("source out of range");
  RootedPass pass = rooted_pass(tree.graph(), source, {});
  TreeBroadcast result;
  result.time = pass.time[static_cast<std::size_t>(source)];
  result.protocol = BroadcastProtocol::singleton(tree.num_vertices(), source);
  emit_orders(pass, result.protocol);
  return result;
}

ExtendedRounds constrained_time(const TreeView& tree, Vertex x, Vertex y, Round h, BroadcastProtocol* witness) {
  require_leaves(tree, x, y);
  const Graph& g = tree.graph();
  RootedPass pass = rooted_pass(g, x, {});
  if (pass.time[static_cast<std::size_t>(x)] > h) return ExtendedRounds::infinity();

  std::vector<Vertex> path{y};
  while (path.back() != x) path.push_back(pass.parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());

  // orders[i] = children order of path[i] in the witness
  std::vector<std::vector<Vertex>> orders(path.size());
  orders[0] = {path[1]};
  Round arrival = 1;  // round in which path[1] is informed
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    Vertex v = path[i];
    Vertex next = path[i + 1];
    std::vector<Vertex> off;  // T_1..T_k sorted by descending b(T_j, u_j)
    for (Vertex c : pass.children[static_cast<std::size_t>(v)]) {
      if (c != next) off.push_back(c);
    }
    const auto k = static_cast<Round>(off.size());
    // Minimum position j in C(v) for `next`: every u_idx with idx >= j is pushed one slot back.
    Round j = 1;
    for (Round idx = k; idx >= 1; --idx) {
      if (arrival + idx + 1 + pass.time[static_cast<std::size_t>(off[static_cast<std::size_t>(idx - 1)])] > h) {
        j = idx + 1;
        break;
      }
    }
    for (Round idx = 1; idx < j; ++idx) {
      if (arrival + idx + pass.time[static_cast<std::size_t>(off[static_cast<std::size_t>(idx - 1)])] > h) {
        return ExtendedRounds::infinity();
      }
    }
    auto& order = orders[i];
    order.assign(off.begin(), off.end());
    order.insert(order.begin() + (j - 1), next);
    arrival += j;
  }
  if (arrival > h) return ExtendedRounds::infinity();

  if (witness != nullptr) {
    *witness = BroadcastProtocol::singleton(tree.num_vertices(), x);
    std::vector<char> on_path(static_cast<std::size_t>(tree.num_vertices()), 0);
    for (Vertex v : path) on_path[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      for (Vertex c : orders[i]) witness->append_child(path[i], c);
    }
    for (Vertex v : pass.preorder) {
      if (on_path[static_cast<std::size_t>(v)]) continue;
      for (Vertex c : pass.children[static_cast<std::size_t>(v)]) witness->append_child(v, c);
    }
  }
  return ExtendedRounds(arrival);
}

DelayedPlan two_source_plan(const TreeView& tree, Vertex x, Vertex y, Round h) {
  require_leaves(tree, x, y);
  const Graph& g = tree.graph();
  const auto n = static_cast<std::size_t>(tree.num_vertices());
  std::vector<char> allowed(n, 1);
  allowed[static_cast<std::size_t>(y)] = 0;
  Round alone = schedule_subtree(g, x, allowed);
  if (alone <= h) return {alone, std::nullopt};

  std::vector<Vertex> path = tree.path(x, y);
  RootedPass from_x = rooted_pass(g, x, {});
  DelayedPlan best{alone, std::nullopt};  // the split at the edge entering y
  for (std::size_t i = 1; i < path.size(); ++i) {
    // Cut path[i-1] -- path[i]: x keeps the component of path[i-1].
    std::fill(allowed.begin(), allowed.end(), 0);
    std::vector<Vertex> stack{path[i]};
    allowed[static_cast<std::size_t>(path[i])] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex c : from_x.children[static_cast<std::size_t>(v)]) {
        allowed[static_cast<std::size_t>(c)] = 1;
        stack.push_back(c);
      }
    }
    Round y_side = schedule_subtree(g, y, allowed) + h;
    for (auto& a : allowed) a = static_cast<char>(!a);
    Round x_side = schedule_subtree(g, x, allowed);
    Round value = std::max(x_side, y_side);
    if (value < best.time) best = {value, Edge{path[i - 1], path[i]}};
  }
  return best;
}

Round two_source_delayed(const TreeView& tree, Vertex x, Vertex y, Round h) {
  return two_source_plan(tree, x, y, h).time;
}

}  // namespace broadcast
