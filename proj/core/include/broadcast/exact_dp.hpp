#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast {

/// Informed set encoded as a bit vector over vertex ids.
using Mask = std::uint32_t;

inline constexpr Vertex kExactMaxVertices = 26;

/// Extra requirement on the protocol: every vertex of `required` is informed by round `by_round`.
struct PrefixConstraint {
  Mask required = 0;
  Round by_round = -1;  // negative disables the constraint

  bool active() const noexcept { return by_round >= 0 && required != 0; }
};

struct ExactResult {
  Round time = 0;
  BroadcastProtocol protocol;
};

/// Layered families L_0..L_t of informed sets, each sorted ascending.
struct DpLayers {
  std::vector<std::vector<Mask>> layers;
};

/// All X = Y + Z with Y in prev and Z a set of outside neighbours matchable into Y; includes prev.
/// Throws CapacityError above kExactMaxVertices.
std::vector<Mask> expand_layer(const Graph& g, std::span<const Mask> prev);

/// L_0 = {{s}} and L_i = expand_layer(L_{i-1}) for i <= rounds.
DpLayers build_layers(const Graph& g, Vertex s, Round rounds);

/// Minimum broadcast time with a validated witness protocol. Throws GraphError when g is
/// disconnected, CapacityError above kExactMaxVertices, and std::domain_error when the
/// constraint cannot be met.
ExactResult broadcast_time_exact(const Graph& g, Vertex s, const PrefixConstraint& constraint = {});

/// b(G, s) <= budget, stopping the layer growth at the budget.
bool decide_exact(const Instance& inst);

/// Number of vertices in a mask.
inline int mask_size(Mask m) noexcept { return std::popcount(m); }

}  // namespace broadcast
