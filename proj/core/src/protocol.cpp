#include "broadcast/protocol.hpp"

#include <algorithm>

namespace broadcast {

BroadcastProtocol BroadcastProtocol::singleton(Vertex n, Vertex root) {
  BroadcastProtocol p;
  p.root = root;
  p.parent.assign(static_cast<std::size_t>(n), kNoVertex);
  p.children_order.assign(static_cast<std::size_t>(n), {});
  p.parent[static_cast<std::size_t>(root)] = root;
  return p;
}

void BroadcastProtocol::append_child(Vertex u, Vertex child) {
  parent[static_cast<std::size_t>(child)] = u;
  children_order[static_cast<std::size_t>(u)].push_back(child);
}

Vertex BroadcastProtocol::size() const {
  return static_cast<Vertex>(std::count_if(parent.begin(), parent.end(), [](Vertex p) { return p != kNoVertex; }));
}

std::int64_t RoundSchedule::informed_by(Round round) const {
  return std::count_if(informed_round.begin(), informed_round.end(),
                       [round](Round r) { return r != kNotInformed && r <= round; });
}

std::string_view to_string(ValidationFailure f) noexcept {
  switch (f) {
    case ValidationFailure::kNone: return "ok";
    case ValidationFailure::kSizeMismatch: return "size-mismatch";
    case ValidationFailure::kWrongRoot: return "wrong-root";
    case ValidationFailure::kNotAGraphEdge: return "not-a-graph-edge";
    case ValidationFailure::kParentMismatch: return "parent-mismatch";
    case ValidationFailure::kDuplicateChild: return "duplicate-child";
    case ValidationFailure::kNotSpanning: return "not-spanning";
    case ValidationFailure::kOverBudget: return "over-budget";
  }
  return "unknown";
}

namespace {

// Checks everything except spanning/budget; on success fills `rounds` for tree vertices.
Validation check_structure(const Graph& g, const BroadcastProtocol& p, std::vector<Round>& rounds) {
  const Vertex n = g.num_vertices();
  auto fail = [](ValidationFailure f, std::string detail) { return Validation{f, std::move(detail)}; };
  if (static_cast<Vertex>(p.parent.size()) != n || static_cast<Vertex>(p.children_order.size()) != n) {
    return fail(ValidationFailure::kSizeMismatch, "protocol arrays do not match vertex count");
  }
  if (p.root < 0 || p.root >= n || p.parent[static_cast<std::size_t>(p.root)] != p.root) {
    return fail(ValidationFailure::kWrongRoot, "root must be its own parent");
  }
  std::vector<std::int32_t> seen_as_child(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    if (!p.contains(u) && !p.children_order[static_cast<std::size_t>(u)].empty()) {
      return fail(ValidationFailure::kParentMismatch, "vertex " + std::to_string(u) + " has children but no parent");
    }
    for (Vertex c : p.children_order[static_cast<std::size_t>(u)]) {
      if (c < 0 || c >= n) return fail(ValidationFailure::kSizeMismatch, "child id out of range");
      if (c == p.root || p.parent[static_cast<std::size_t>(c)] != u) {
        return fail(ValidationFailure::kParentMismatch,
                    "vertex " + std::to_string(c) + " listed under " + std::to_string(u) + " but parent differs");
      }
      if (++seen_as_child[static_cast<std::size_t>(c)] > 1) {
        return fail(ValidationFailure::kDuplicateChild, "vertex " + std::to_string(c) + " listed twice");
      }
      if (!g.has_edge(u, c)) {
        return fail(ValidationFailure::kNotAGraphEdge,
                    "tree edge " + std::to_string(u) + "-" + std::to_string(c) + " absent from graph");
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    Vertex par = p.parent[static_cast<std::size_t>(v)];
    if (v == p.root || par == kNoVertex) continue;
    if (par < 0 || par >= n || !seen_as_child[static_cast<std::size_t>(v)]) {
      return fail(ValidationFailure::kParentMismatch,
                  "vertex " + std::to_string(v) + " missing from its parent's children order");
    }
  }
  rounds.assign(static_cast<std::size_t>(n), kNotInformed);
  rounds[static_cast<std::size_t>(p.root)] = 0;
  std::vector<Vertex> queue{p.root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    Round base = rounds[static_cast<std::size_t>(u)];
    Round pos = 0;
    for (Vertex c : p.children_order[static_cast<std::size_t>(u)]) {
      rounds[static_cast<std::size_t>(c)] = base + (++pos);
      queue.push_back(c);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (p.parent[static_cast<std::size_t>(v)] != kNoVertex && rounds[static_cast<std::size_t>(v)] == kNotInformed) {
      return fail(ValidationFailure::kNotSpanning, "vertex " + std::to_string(v) + " lies on a parent cycle");
    }
  }
  return {};
}

}  // namespace

RoundSchedule simulate(const Graph& g, const BroadcastProtocol& p) {
  RoundSchedule schedule;
  if (Validation v = check_structure(g, p, schedule.informed_round); !v) throw ProtocolError(v.detail);
  schedule.makespan = *std::max_element(schedule.informed_round.begin(), schedule.informed_round.end());
  return schedule;
}

Validation validate(const Graph& g, Vertex source, Round budget, const BroadcastProtocol& p) {
  std::vector<Round> rounds;
  if (Validation v = check_structure(g, p, rounds); !v) return v;
  if (p.root != source) return {ValidationFailure::kWrongRoot, "protocol rooted away from the source"};
  Round makespan = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (rounds[static_cast<std::size_t>(v)] == kNotInformed) {
      return {ValidationFailure::kNotSpanning, "vertex " + std::to_string(v) + " is never informed"};
    }
    makespan = std::max(makespan, rounds[static_cast<std::size_t>(v)]);
  }
  if (makespan > budget) {
    return {ValidationFailure::kOverBudget,
            "makespan " + std::to_string(makespan) + " exceeds budget " + std::to_string(budget)};
  }
  return {};
}

BroadcastProtocol extend_tree_protocol(const Graph& g, const BroadcastProtocol& partial) {
  std::vector<Round> rounds;
  if (Validation v = check_structure(g, partial, rounds); !v) throw ProtocolError(v.detail);
  BroadcastProtocol out = partial;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (out.contains(v)) queue.push_back(v);
  }
  // Multi-source BFS in order of informing time keeps the extension deterministic.
  std::stable_sort(queue.begin(), queue.end(), [&](Vertex a, Vertex b) {
    return rounds[static_cast<std::size_t>(a)] < rounds[static_cast<std::size_t>(b)];
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!out.contains(w)) {
        out.append_child(u, w);
        queue.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace broadcast
