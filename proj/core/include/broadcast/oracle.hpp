#pragma once

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast {

inline constexpr Vertex kOracleMaxVertices = 14;

/// Minimum broadcast time by breadth-first search over informed sets. Each round's successors
/// are all sets obtained by letting every informed vertex pick at most one distinct uninformed
/// neighbour. Throws CapacityError above kOracleMaxVertices and GraphError when disconnected.
Round brute_force_broadcast_time(const Graph& g, Vertex s);

/// Same answer by iterative deepening without memoization; intended for n <= 7.
Round brute_force_broadcast_time_unmemoized(const Graph& g, Vertex s);

}  // namespace broadcast
