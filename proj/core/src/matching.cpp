#include "broadcast/matching.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace broadcast {

namespace {

bool augment(std::int32_t r, const std::vector<std::vector<std::int32_t>>& options, std::vector<std::int32_t>& owner,
             std::vector<char>& visited) {
  for (std::int32_t l : options[static_cast<std::size_t>(r)]) {
    if (visited[static_cast<std::size_t>(l)]) continue;
    visited[static_cast<std::size_t>(l)] = 1;
    std::int32_t& slot = owner[static_cast<std::size_t>(l)];
    if (slot < 0 || augment(slot, options, owner, visited)) {
      slot = r;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<MatchedPair>> saturating_matching(std::span<const Vertex> left,
                                                            std::span<const Vertex> right,
                                                            std::span<const MatchedPair> edges) {
  if (right.size() > left.size()) return std::nullopt;
  std::unordered_map<Vertex, std::int32_t> left_index;
  std::unordered_map<Vertex, std::int32_t> right_index;
  for (std::size_t i = 0; i < left.size(); ++i) left_index.emplace(left[i], static_cast<std::int32_t>(i));
  for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(right[i], static_cast<std::int32_t>(i));
  std::vector<std::vector<std::int32_t>> options(right.size());
  for (const MatchedPair& e : edges) {
    auto l = left_index.find(e.left);
    auto r = right_index.find(e.right);
    if (l == left_index.end() || r == right_index.end()) continue;
    options[static_cast<std::size_t>(r->second)].push_back(l->second);
  }
  for (auto& row : options) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  std::vector<std::int32_t> owner(left.size(), -1);
  std::vector<char> visited(left.size());
  for (std::size_t r = 0; r < right.size(); ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(static_cast<std::int32_t>(r), options, owner, visited)) return std::nullopt;
  }
  std::vector<MatchedPair> out;
  out.reserve(right.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (owner[l] >= 0) out.push_back({left[l], right[static_cast<std::size_t>(owner[l])]});
  }
  std::sort(out.begin(), out.end(), [](const MatchedPair& a, const MatchedPair& b) { return a.right < b.right; });
  return out;
}

FlowNetwork::FlowNetwork(std::int32_t nodes) : out_(static_cast<std::size_t>(nodes)) {}

std::int32_t FlowNetwork::add_arc(std::int32_t from, std::int32_t to, std::int64_t capacity) {
  auto index = static_cast<std::int32_t>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  original_.push_back(capacity);
  original_.push_back(0);
  out_[static_cast<std::size_t>(from)].push_back(index);
  out_[static_cast<std::size_t>(to)].push_back(index + 1);
  return index;
}

bool FlowNetwork::build_levels(std::int32_t source, std::int32_t sink) {
  level_.assign(out_.size(), -1);
  level_[static_cast<std::size_t>(source)] = 0;
  std::vector<std::int32_t> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t v = queue[head];
    for (std::int32_t a : out_[static_cast<std::size_t>(v)]) {
      const Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.capacity > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t FlowNetwork::push(std::int32_t v, std::int32_t sink, std::int64_t limit) {
  if (v == sink) return limit;
  auto& edges = out_[static_cast<std::size_t>(v)];
  for (std::size_t& i = cursor_[static_cast<std::size_t>(v)]; i < edges.size(); ++i) {
    std::int32_t a = edges[i];
    Arc& arc = arcs_[static_cast<std::size_t>(a)];
    if (arc.capacity <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
    std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.capacity));
    if (pushed > 0) {
      arc.capacity -= pushed;
      arcs_[static_cast<std::size_t>(a ^ 1)].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(std::int32_t source, std::int32_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(out_.size(), 0);
    while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += pushed;
  }
  return total;
}

std::int64_t FlowNetwork::flow_on(std::int32_t arc) const {
  return original_[static_cast<std::size_t>(arc)] - arcs_[static_cast<std::size_t>(arc)].capacity;
}

}  // namespace broadcast
