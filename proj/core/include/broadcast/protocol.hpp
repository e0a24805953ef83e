#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

using Round = std::int64_t;
inline constexpr Round kNotInformed = -1;

/// Rooted tree plus per-vertex ordered children lists C(v).
///
/// As soon as a vertex is informed it sends to C(v)[0], C(v)[1], ... in consecutive rounds.
/// A protocol may cover only part of the graph: vertices outside the tree have
/// parent == kNoVertex and no children.
struct BroadcastProtocol {
  Vertex root = 0;
  std::vector<Vertex> parent;                      // parent[root] == root
  std::vector<std::vector<Vertex>> children_order;

  /// The protocol containing only `root` on an n-vertex graph.
  static BroadcastProtocol singleton(Vertex n, Vertex root);

  bool contains(Vertex v) const { return parent[static_cast<std::size_t>(v)] != kNoVertex; }
  void append_child(Vertex u, Vertex child);
  /// Vertices reached by the tree, including the root.
  Vertex size() const;

  friend bool operator==(const BroadcastProtocol&, const BroadcastProtocol&) = default;
};

struct RoundSchedule {
  std::vector<Round> informed_round;  // kNotInformed outside the protocol tree
  Round makespan = 0;

  /// Number of vertices holding the message after `round` rounds.
  std::int64_t informed_by(Round round) const;
};

class ProtocolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ProtocolError when the protocol does not describe a tree of `g` rooted at p.root.
RoundSchedule simulate(const Graph& g, const BroadcastProtocol& p);

enum class ValidationFailure {
  kNone,
  kSizeMismatch,
  kWrongRoot,
  kNotAGraphEdge,
  kParentMismatch,
  kDuplicateChild,
  kNotSpanning,
  kOverBudget,
};

std::string_view to_string(ValidationFailure f) noexcept;

struct Validation {
  ValidationFailure failure = ValidationFailure::kNone;
  std::string detail;

  bool ok() const noexcept { return failure == ValidationFailure::kNone; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Accepts iff p is a spanning protocol of g rooted at `source` with makespan <= budget.
Validation validate(const Graph& g, Vertex source, Round budget, const BroadcastProtocol& p);
inline Validation validate(const Instance& inst, const BroadcastProtocol& p) {
  return validate(inst.graph, inst.source, inst.budget, p);
}

/// Extends a protocol on a subtree T' of g to a spanning protocol; vertices outside T'
/// are appended to the end of their (BFS-chosen) parent's order. Makespan grows by at
/// most |V(g) \ V(T')|.
BroadcastProtocol extend_tree_protocol(const Graph& g, const BroadcastProtocol& partial);

}  // namespace broadcast
