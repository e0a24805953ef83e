#include "reference.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace broadcast::reference {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

struct Rooted {
  std::vector<Vertex> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> preorder;
};

Rooted root_tree(const Graph& tree, Vertex s) {
  Rooted r;
  r.parent.assign(idx(tree.num_vertices()), kNoVertex);
  r.children.resize(idx(tree.num_vertices()));
  r.parent[idx(s)] = s;
  r.preorder.push_back(s);
  for (std::size_t head = 0; head < r.preorder.size(); ++head) {
    Vertex v = r.preorder[head];
    for (Vertex w : tree.neighbors(v)) {
      if (r.parent[idx(w)] != kNoVertex) continue;
      r.parent[idx(w)] = v;
      r.children[idx(v)].push_back(w);
      r.preorder.push_back(w);
    }
  }
  return r;
}

}  // namespace

Round tree_time_by_orderings(const Graph& tree, Vertex s) {
  Rooted r = root_tree(tree, s);
  std::vector<Round> time(idx(tree.num_vertices()), 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    std::vector<Vertex> kids = r.children[idx(*it)];
    std::sort(kids.begin(), kids.end());
    Round best = kids.empty() ? 0 : std::numeric_limits<Round>::max();
    if (!kids.empty()) {
      do {
        Round t = 0;
        for (std::size_t i = 0; i < kids.size(); ++i) t = std::max<Round>(t, static_cast<Round>(i + 1) + time[idx(kids[i])]);
        best = std::min(best, t);
      } while (std::next_permutation(kids.begin(), kids.end()));
    }
    time[idx(*it)] = best;
  }
  return time[idx(s)];
}

void for_each_tree_protocol(const Graph& tree, Vertex s, const std::function<void(const BroadcastProtocol&)>& visit) {
  Rooted r = root_tree(tree, s);
  BroadcastProtocol p = BroadcastProtocol::singleton(tree.num_vertices(), s);
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    if (v != s) p.parent[idx(v)] = r.parent[idx(v)];
    p.children_order[idx(v)] = r.children[idx(v)];
    std::sort(p.children_order[idx(v)].begin(), p.children_order[idx(v)].end());
  }
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r.preorder.size()) {
      visit(p);
      return;
    }
    auto& kids = p.children_order[idx(r.preorder[i])];
    std::sort(kids.begin(), kids.end());
    do {
      rec(i + 1);
    } while (std::next_permutation(kids.begin(), kids.end()));
  };
  rec(0);
}

ExtendedRounds constrained_time_brute(const Graph& tree, Vertex x, Vertex y, Round h) {
  ExtendedRounds best = ExtendedRounds::infinity();
  for_each_tree_protocol(tree, x, [&](const BroadcastProtocol& p) {
    RoundSchedule sched = simulate(tree, p);
    if (sched.makespan <= h) best = std::min(best, ExtendedRounds(sched.informed_round[idx(y)]));
  });
  return best;
}

Round two_source_delayed_brute(const Graph& tree, Vertex x, Vertex y, Round h) {
  const Vertex n = tree.num_vertices();
  using Set = std::uint32_t;
  const Set goal = ((Set{1} << n) - 1) & ~(Set{1} << y);
  std::set<Set> layer{(Set{1} << x) | (Set{1} << y)};
  for (Round round = 0;; ++round) {
    for (Set informed : layer) {
      if ((informed & goal) == goal) return round;
    }
    std::set<Set> next;
    for (Set informed : layer) {
      std::vector<Vertex> senders;
      for (Vertex v = 0; v < n; ++v) {
        if ((informed >> v & 1) && (v != y || round + 1 >= h + 1)) senders.push_back(v);
      }
      std::function<void(std::size_t, Set)> assign = [&](std::size_t i, Set current) {
        if (i == senders.size()) {
          next.insert(current);
          return;
        }
        assign(i + 1, current);
        for (Vertex w : tree.neighbors(senders[i])) {
          if (!(current >> w & 1)) assign(i + 1, current | (Set{1} << w));
        }
      };
      assign(0, informed);
    }
    layer = std::move(next);
  }
}

std::vector<Edge> bridges_by_deletion(const Graph& g) {
  std::vector<Edge> out;
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i) rest.push_back(all[j]);
    }
    if (!is_connected(Graph(g.num_vertices(), rest))) out.push_back(all[i]);
  }
  return out;
}

std::vector<Vertex> min_vertex_cover_brute(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> best(idx(n));
  std::iota(best.begin(), best.end(), 0);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) >= static_cast<int>(best.size())) continue;
    bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                              [&](const Edge& e) { return (mask >> e.first & 1) || (mask >> e.second & 1); });
    if (!covers) continue;
    best.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) best.push_back(v);
    }
  }
  return best;
}

std::size_t max_matching_brute(std::span<const std::pair<Vertex, Vertex>> edges) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
    std::set<Vertex> left;
    std::set<Vertex> right;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = left.insert(edges[i].first).second && right.insert(edges[i].second).second;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

bool tail_feasible_brute(const TailSystem& sys) {
  std::vector<std::int64_t> load(static_cast<std::size_t>(sys.senders), 0);
  // Distributes the demand of class i, one sender at a time.
  std::function<bool(std::int32_t, std::int32_t, std::int64_t)> rec = [&](std::int32_t i, std::int32_t v,
                                                                            std::int64_t left) -> bool {
    if (i == sys.classes) return true;
    if (v == sys.senders) return left == 0 && rec(i + 1, 0, i + 1 < sys.classes ? sys.demand[static_cast<std::size_t>(i + 1)] : 0);
    const std::int64_t top = sys.allows(v, i) ? std::min(left, sys.capacity - load[static_cast<std::size_t>(v)]) : 0;
    for (std::int64_t x = 0; x <= top; ++x) {
      load[static_cast<std::size_t>(v)] += x;
      bool ok = rec(i, v + 1, left - x);
      load[static_cast<std::size_t>(v)] -= x;
      if (ok) return true;
    }
    return false;
  };
  for (std::int64_t d : sys.demand) {
    if (d < 0) return false;
  }
  if (sys.capacity < 0) return std::all_of(sys.demand.begin(), sys.demand.end(), [](std::int64_t d) { return d == 0; });
  return rec(0, 0, sys.classes > 0 ? sys.demand[0] : 0);
}

std::vector<Round> event_loop_simulation(const BroadcastProtocol& p) {
  const std::size_t n = p.parent.size();
  std::vector<Round> informed(n, kNotInformed);
  std::vector<std::size_t> pointer(n, 0);
  informed[idx(p.root)] = 0;
  for (Round round = 1;; ++round) {
    std::vector<Vertex> fresh;
    for (std::size_t v = 0; v < n; ++v) {
      if (informed[v] == kNotInformed || informed[v] >= round || pointer[v] >= p.children_order[v].size()) continue;
      fresh.push_back(p.children_order[v][pointer[v]++]);
    }
    if (fresh.empty()) return informed;
    for (Vertex c : fresh) informed[idx(c)] = round;
  }
}

Round best_protocol_on_tree(const Graph& tree, Vertex s) {
  Round best = std::numeric_limits<Round>::max();
  for_each_tree_protocol(tree, s, [&](const BroadcastProtocol& p) { best = std::min(best, simulate(tree, p).makespan); });
  return best;
}

std::vector<Graph> all_connected_graphs(Vertex n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace broadcast::reference
