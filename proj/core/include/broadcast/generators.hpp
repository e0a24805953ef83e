#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "broadcast/graph.hpp"

namespace broadcast {

Graph path_graph(Vertex n);
/// Requires n >= 3.
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
/// Center 0 with leaves 1..leaves.
Graph star_graph(Vertex leaves);
/// Sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(Vertex a, Vertex b);

/// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(Vertex n, std::mt19937_64& rng);
/// Tree from a Pruefer sequence (length n - 2, entries in 0..n-1).
Graph tree_from_pruefer(Vertex n, std::span<const Vertex> sequence);
/// Random spanning tree plus every other pair independently with probability p.
Graph random_connected_graph(Vertex n, double p, std::mt19937_64& rng);
/// Random tree plus min(k, available) extra edges, so m - n + 1 <= k.
Graph random_bounded_cyclomatic_graph(Vertex n, std::int64_t k, std::mt19937_64& rng);
/// Connected graph whose random vertex set of size `cover` (at least 1) covers every edge.
Graph random_bounded_cover_graph(Vertex n, Vertex cover, double p, std::mt19937_64& rng);

}  // namespace broadcast
