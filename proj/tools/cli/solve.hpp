#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"
#include "run_config.hpp"

namespace broadcast::cli {

/// Largest cyclomatic number and vertex-cover size for which `auto` prefers the FPT solvers.
inline constexpr std::int64_t kAutoCyclomaticLimit = 4;
inline constexpr std::int32_t kAutoCoverLimit = 3;

struct SolveOutcome {
  Algorithm algorithm = Algorithm::kExact;
  std::int64_t budget = 0;
  bool decision = false;
  std::optional<Round> b;                    // minimum broadcast time when the solver reports it
  std::optional<BroadcastProtocol> witness;  // validated at `budget`
};

Algorithm choose_algorithm(const Graph& g);

/// Decides b(g, s) <= budget; without a budget the minimum time is computed and used as the
/// budget. `k` is the vertex-cover parameter (the minimum cover is used when absent).
SolveOutcome solve(const Graph& g, Vertex s, std::optional<std::int64_t> budget, Algorithm algorithm,
                   std::optional<std::int64_t> k = std::nullopt);

/// Families: path:N cycle:N complete:N star:LEAVES bipartite:AxB tree:N random:N[:P]
/// cyclomatic:N:K cover:N:C[:P]. Throws std::invalid_argument on a malformed family.
Graph generate_family(std::string_view text, std::uint64_t seed);

}  // namespace broadcast::cli
