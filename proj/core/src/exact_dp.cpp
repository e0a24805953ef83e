#include "broadcast/exact_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>

namespace broadcast {

namespace {

constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();

using Owners = std::array<std::int8_t, 32>;  // owners[y] = the new vertex matched to sender y, or -1

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.num_vertices() > kExactMaxVertices) {
    throw CapacityError("exact solver supports at most " + std::to_string(kExactMaxVertices) + " vertices");
  }
  std::vector<Mask> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.first)] |= Mask{1} << e.second;
    adj[static_cast<std::size_t>(e.second)] |= Mask{1} << e.first;
  }
  return adj;
}

bool augment(int z, Mask senders, std::span<const Mask> adj, Owners& owners, Mask& visited) {
  Mask options = adj[static_cast<std::size_t>(z)] & senders & ~visited;
  while (options != 0) {
    int y = std::countr_zero(options);
    options &= options - 1;
    visited |= Mask{1} << y;
    std::int8_t& slot = owners[static_cast<std::size_t>(y)];
    if (slot < 0 || augment(slot, senders, adj, owners, visited)) {
      slot = static_cast<std::int8_t>(z);
      return true;
    }
  }
  return false;
}

// Calls emit(Y | Z) for every nonempty Z within N(Y) \ Y that has a matching saturating Z into Y.
// Matchable sets form a transversal matroid, so a failed augmentation prunes all supersets.
template <typename Emit>
void expand_set(Mask senders, std::span<const Mask> adj, Emit&& emit) {
  Mask frontier = 0;
  for (Mask rest = senders; rest != 0; rest &= rest - 1) frontier |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
  frontier &= ~senders;
  std::array<int, 32> candidates{};
  int count = 0;
  for (Mask rest = frontier; rest != 0; rest &= rest - 1) candidates[static_cast<std::size_t>(count++)] = std::countr_zero(rest);

  Owners empty;
  empty.fill(-1);
  auto dfs = [&](auto&& self, int pos, Mask chosen, const Owners& owners) -> void {
    if (chosen != 0) emit(senders | chosen);
    for (int i = pos; i < count; ++i) {
      Owners next = owners;
      Mask visited = 0;
      int z = candidates[static_cast<std::size_t>(i)];
      if (augment(z, senders, adj, next, visited)) self(self, i + 1, chosen | (Mask{1} << z), next);
    }
  };
  dfs(dfs, 0, 0, empty);
}

// Senders in `from` for the vertices of `to \ from`, or false when no saturating matching exists.
bool match_new_vertices(Mask from, Mask to, std::span<const Mask> adj, Owners& owners) {
  owners.fill(-1);
  for (Mask rest = to & ~from; rest != 0; rest &= rest - 1) {
    Mask visited = 0;
    if (!augment(std::countr_zero(rest), from, adj, owners, visited)) return false;
  }
  return true;
}

struct LayerSearch {
  std::vector<std::uint8_t> first_round;  // round in which a set first becomes reachable
  Round reached = -1;                     // round in which the full set appeared, -1 if not within the limit
};

LayerSearch search_layers(const Graph& g, std::span<const Mask> adj, Vertex s, Round limit,
                          const PrefixConstraint& constraint) {
  const int n = g.num_vertices();
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  LayerSearch out;
  out.first_round.assign(std::size_t{1} << n, kUnseen);
  Mask start = Mask{1} << s;
  out.first_round[start] = 0;
  if (start == full) {
    out.reached = 0;
    return out;
  }
  std::vector<Mask> frontier{start};
  std::vector<Mask> next;
  for (Round round = 1; round <= limit && !frontier.empty(); ++round) {
    next.clear();
    const bool must_hold = constraint.active() && round >= constraint.by_round;
    bool done = false;
    for (Mask y : frontier) {
      expand_set(y, adj, [&](Mask x) {
        if (out.first_round[x] != kUnseen) return;
        if (must_hold && (x & constraint.required) != constraint.required) return;
        out.first_round[x] = static_cast<std::uint8_t>(round);
        next.push_back(x);
        if (x == full) done = true;
      });
      if (done) break;
    }
    if (done) {
      out.reached = round;
      return out;
    }
    std::swap(frontier, next);
  }
  return out;
}

BroadcastProtocol reconstruct(const Graph& g, std::span<const Mask> adj, Vertex s, const LayerSearch& search,
                              const PrefixConstraint& constraint) {
  const int n = g.num_vertices();
  const Mask source_bit = Mask{1} << s;
  std::vector<Mask> chain(static_cast<std::size_t>(search.reached) + 1);
  chain.back() = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Owners> senders(chain.size());
  auto usable_at = [&](Mask y, Round level) {
    std::uint8_t r = search.first_round[y];
    if (r == kUnseen || r > level) return false;
    if (constraint.active() && level >= constraint.by_round) {
      return (y & constraint.required) == constraint.required;
    }
    return true;
  };
  for (Round i = search.reached; i >= 1; --i) {
    Mask x = chain[static_cast<std::size_t>(i)];
    bool found = false;
    // Proper submasks of x containing the source, largest first.
    for (Mask y = (x - 1) & x; !found; y = (y - 1) & x) {
      if ((y & source_bit) != 0 && usable_at(y, i - 1) && std::popcount(x & ~y) <= std::popcount(y) &&
          match_new_vertices(y, x, adj, senders[static_cast<std::size_t>(i)])) {
        chain[static_cast<std::size_t>(i - 1)] = y;
        found = true;
      }
      if (y == 0) break;
    }
    if (!found) throw std::logic_error("exact solver lost a predecessor during reconstruction");
  }
  BroadcastProtocol p = BroadcastProtocol::singleton(g.num_vertices(), s);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Owners& owners = senders[i];
    for (Vertex y = 0; y < n; ++y) {
      if (owners[static_cast<std::size_t>(y)] >= 0) p.append_child(y, owners[static_cast<std::size_t>(y)]);
    }
  }
  return p;
}

void require_source(const Graph& g, Vertex s) {
  if (s < 0 || s >= g.num_vertices()) throw GraphError("source out of range");
}

}  // namespace

std::vector<Mask> expand_layer(const Graph& g, std::span<const Mask> prev) {
  std::vector<Mask> adj = adjacency_masks(g);
  std::vector<Mask> out(prev.begin(), prev.end());
  for (Mask y : prev) expand_set(y, adj, [&](Mask x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DpLayers build_layers(const Graph& g, Vertex s, Round rounds) {
  require_source(g, s);
  DpLayers d;
  d.layers.push_back({Mask{1} << s});
  for (Round i = 1; i <= rounds; ++i) d.layers.push_back(expand_layer(g, d.layers.back()));
  return d;
}

ExactResult broadcast_time_exact(const Graph& g, Vertex s, const PrefixConstraint& constraint) {
  require_source(g, s);
  std::vector<Mask> adj = adjacency_masks(g);
  if (!is_connected(g)) throw GraphError("graph is disconnected");
  LayerSearch search = search_layers(g, adj, s, g.num_vertices(), constraint);
  if (search.reached < 0) throw std::domain_error("prefix constraint cannot be met");
  return {search.reached, reconstruct(g, adj, s, search, constraint)};
}

bool decide_exact(const Instance& inst) {
  const Vertex n = inst.graph.num_vertices();
  if (inst.budget >= n - 1) return true;
  if ((std::int64_t{1} << std::min<std::int64_t>(inst.budget, 40)) < n) return false;
  std::vector<Mask> adj = adjacency_masks(inst.graph);
  return search_layers(inst.graph, adj, inst.source, inst.budget, {}).reached >= 0;
}

}  // namespace broadcast
