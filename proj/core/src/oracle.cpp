#include "broadcast/oracle.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace broadcast {

namespace {

using State = std::uint32_t;

std::vector<State> neighbour_masks(const Graph& g, Vertex s) {
  if (g.num_vertices() > kOracleMaxVertices) {
    throw CapacityError("oracle supports at most " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  if (s < 0 || s >= g.num_vertices()) throw GraphError("source out of range");
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  std::vector<State> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= State{1} << w;
  }
  return adj;
}

// All recipient sets of one round from `informed`, built sender by sender; stamps dedup per stage.
void one_round(State informed, const std::vector<State>& adj, std::vector<std::uint32_t>& stamp, std::uint32_t& clock,
               std::vector<State>& out) {
  out.assign(1, 0);
  std::vector<State> grown;
  for (State rest = informed; rest != 0; rest &= rest - 1) {
    State options = adj[static_cast<std::size_t>(std::countr_zero(rest))] & ~informed;
    if (options == 0) continue;
    ++clock;
    for (State m : out) stamp[m] = clock;
    grown = out;
    for (State m : out) {
      for (State o = options & ~m; o != 0; o &= o - 1) {
        State next = m | (o & -o);
        if (stamp[next] != clock) {
          stamp[next] = clock;
          grown.push_back(next);
        }
      }
    }
    out.swap(grown);
  }
}

bool reachable_within(State informed, State full, Round rounds, const std::vector<State>& adj) {
  if (informed == full) return true;
  if (rounds == 0) return false;
  if ((static_cast<std::int64_t>(std::popcount(informed)) << rounds) < std::popcount(full)) return false;
  // Senders are processed in ascending id; each chooses one new neighbour or stays idle.
  bool found = false;
  auto assign = [&](auto&& self, State remaining, State picked) -> void {
    if (found) return;
    if (remaining == 0) {
      if (picked != 0 && reachable_within(informed | picked, full, rounds - 1, adj)) found = true;
      return;
    }
    int u = std::countr_zero(remaining);
    State rest = remaining & (remaining - 1);
    for (State o = adj[static_cast<std::size_t>(u)] & ~informed & ~picked; o != 0 && !found; o &= o - 1) {
      self(self, rest, picked | (o & -o));
    }
    self(self, rest, picked);
  };
  assign(assign, informed, 0);
  return found;
}

}  // namespace

Round brute_force_broadcast_time(const Graph& g, Vertex s) {
  std::vector<State> adj = neighbour_masks(g, s);
  const int n = g.num_vertices();
  const State full = (State{1} << n) - 1;
  State start = State{1} << s;
  if (start == full) return 0;
  std::vector<char> visited(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> stamp(std::size_t{1} << n, 0);
  std::uint32_t clock = 0;
  visited[start] = 1;
  std::vector<State> level{start};
  std::vector<State> next;
  std::vector<State> recipients;
  for (Round round = 1;; ++round) {
    next.clear();
    for (State x : level) {
      one_round(x, adj, stamp, clock, recipients);
      for (State m : recipients) {
        State y = x | m;
        if (visited[y]) continue;
        if (y == full) return round;
        visited[y] = 1;
        next.push_back(y);
      }
    }
    level.swap(next);
  }
}

Round brute_force_broadcast_time_unmemoized(const Graph& g, Vertex s) {
  std::vector<State> adj = neighbour_masks(g, s);
  const State full = (State{1} << g.num_vertices()) - 1;
  for (Round rounds = 0;; ++rounds) {
    if (reachable_within(State{1} << s, full, rounds, adj)) return rounds;
  }
}

}  // namespace broadcast
