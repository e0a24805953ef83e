#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast {

/// A round count or +infinity. Infinity absorbs addition and compares above every finite value.
class ExtendedRounds {
 public:
  constexpr ExtendedRounds() = default;
  constexpr explicit ExtendedRounds(Round value) : value_(value) {}
  static constexpr ExtendedRounds infinity() {
    ExtendedRounds r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Precondition: finite.
  constexpr Round value() const noexcept { return value_; }

  friend constexpr ExtendedRounds operator+(ExtendedRounds a, ExtendedRounds b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedRounds(a.value_ + b.value_);
  }
  friend constexpr ExtendedRounds operator+(ExtendedRounds a, Round b) { return a + ExtendedRounds(b); }
  friend constexpr bool operator==(ExtendedRounds a, ExtendedRounds b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedRounds a, ExtendedRounds b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Round value_ = 0;
  bool infinite_ = false;
};

/// A graph checked to be a tree (connected, m = n - 1).
class TreeView {
 public:
  /// Throws GraphError if `g` is not a tree.
  explicit TreeView(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  Vertex num_vertices() const noexcept { return graph_.num_vertices(); }
  bool is_leaf(Vertex v) const { return graph_.degree(v) == 1; }

  /// The unique path from `from` to `to`, both endpoints included.
  std::vector<Vertex> path(Vertex from, Vertex to) const;

 private:
  Graph graph_;
};

bool is_tree(const Graph& g);

struct TreeBroadcast {
  Round time = 0;
  BroadcastProtocol protocol;
};

/// Optimal b(T, s) with a witness: children are informed in descending order of their
/// subtree times (ties by ascending id), b(v) = max_i (i + b(child_i)).
TreeBroadcast tree_broadcast_time(const TreeView& tree, Vertex source);

/// b_h(T, x, y): earliest round in which leaf y can be informed from leaf x while all of T
/// is informed within h rounds; infinity iff b(T, x) > h.
/// When `witness` is given and the result is finite it receives a protocol achieving it.
ExtendedRounds constrained_time(const TreeView& tree, Vertex x, Vertex y, Round h,
                                BroadcastProtocol* witness = nullptr);

/// Split chosen by the two-source evaluation: vertices on x's side of `cut` are served by x,
/// the rest (minus y itself) by y. No cut means x serves all of T - y.
struct DelayedPlan {
  Round time = 0;
  std::optional<Edge> cut;  // (x-side endpoint, y-side endpoint) stored as {first=x side, second=y side}
};

/// d_h(T, x, y): minimum rounds to inform T - y when x sends from round 1 and y from round h + 1.
Round two_source_delayed(const TreeView& tree, Vertex x, Vertex y, Round h);
DelayedPlan two_source_plan(const TreeView& tree, Vertex x, Vertex y, Round h);

/// Optimal broadcast time within the connected component of `allowed` vertices containing
/// `root`, which must induce a tree. If `out` is given, the optimal children orders of the
/// component are appended to it (parents set accordingly).
Round schedule_subtree(const Graph& g, Vertex root, std::span<const char> allowed, BroadcastProtocol* out = nullptr);

}  // namespace broadcast
