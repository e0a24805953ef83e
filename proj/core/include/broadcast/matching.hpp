#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

/// Matched pair (left endpoint, right endpoint).
struct MatchedPair {
  Vertex left;
  Vertex right;
  friend constexpr auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// A matching covering every vertex of `right`, found by augmenting paths, or nullopt.
/// `edges` holds (left, right) pairs; ids are arbitrary labels. Result sorted by right.
std::optional<std::vector<MatchedPair>> saturating_matching(std::span<const Vertex> left,
                                                            std::span<const Vertex> right,
                                                            std::span<const MatchedPair> edges);

/// Small Dinic max-flow on an explicit arc list.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::int32_t nodes);

  /// Returns the arc index.
  std::int32_t add_arc(std::int32_t from, std::int32_t to, std::int64_t capacity);
  std::int64_t max_flow(std::int32_t source, std::int32_t sink);
  std::int64_t flow_on(std::int32_t arc) const;

 private:
  struct Arc {
    std::int32_t to;
    std::int64_t capacity;
  };
  bool build_levels(std::int32_t source, std::int32_t sink);
  std::int64_t push(std::int32_t v, std::int32_t sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::int64_t> original_;
  std::vector<std::vector<std::int32_t>> out_;
  std::vector<std::int32_t> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace broadcast
