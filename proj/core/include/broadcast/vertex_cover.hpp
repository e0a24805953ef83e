#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast {

/// Thrown when the graph has no vertex cover within the requested parameter.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Counts l_i of twin-class members informed during the first 2k rounds and the induced set X.
struct PrefixGuess {
  std::vector<std::int32_t> counts;  // l_i per class
  std::vector<Vertex> prefix;        // X = S plus the lowest-id l_i members of each class (s first), ascending
};

/// Every count vector with l_i <= |L_i|, l_i >= 1 on the class holding s, and sum <= 2k^2.
/// Stops early when `visit` returns false.
void enumerate_prefix_guesses(std::span<const std::vector<Vertex>> classes, std::span<const Vertex> cover, Vertex s,
                              std::int32_t k, const std::function<bool(const PrefixGuess&)>& visit);

/// G[X] is connected and b(G[X], s) <= 2k.
bool prefix_feasible(const Graph& g, Vertex s, const PrefixGuess& guess, std::int32_t k);

/// Integer system: x[v][i] >= 0, zero where sender v is not adjacent to class i,
/// sum_v x[v][i] = demand[i] and sum_i x[v][i] <= capacity.
struct TailSystem {
  std::int32_t senders = 0;
  std::int32_t classes = 0;
  std::vector<char> allowed;          // senders x classes, row-major
  std::vector<std::int64_t> demand;   // per class
  std::int64_t capacity = 0;

  bool allows(std::int32_t v, std::int32_t i) const {
    return allowed[static_cast<std::size_t>(v) * static_cast<std::size_t>(classes) + static_cast<std::size_t>(i)] != 0;
  }
};

/// A solution x (row-major like `allowed`) via transportation max-flow, nullopt if infeasible.
std::optional<std::vector<std::int64_t>> solve_tail(const TailSystem& sys);
bool tail_feasible(const TailSystem& sys);

/// Tail system for a guess: senders are `cover` in order, classes as given, capacity t - 2k.
TailSystem make_tail_system(const Graph& g, std::span<const Vertex> cover,
                            std::span<const std::vector<Vertex>> classes, const PrefixGuess& guess, Round budget,
                            std::int32_t k);

struct VertexCoverOptions {
  /// Run the guess-and-flow pipeline even when the independent side is small.
  bool force_pipeline = false;
};

struct VertexCoverResult {
  bool decision = false;
  std::optional<BroadcastProtocol> witness;  // present iff decision
  std::vector<Vertex> cover;
  std::int64_t guesses_checked = 0;
};

/// b(G, s) <= t for graphs with a vertex cover of size at most k; throws ParameterError otherwise.
VertexCoverResult solve_vertex_cover_certified(const Instance& inst, std::int32_t k, const VertexCoverOptions& options = {});
bool solve_vertex_cover_param(const Instance& inst, std::int32_t k);

}  // namespace broadcast
