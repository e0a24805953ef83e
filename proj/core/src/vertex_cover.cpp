#include "broadcast/vertex_cover.hpp"

#include <algorithm>
#include <limits>

#include "broadcast/exact_dp.hpp"
#include "broadcast/matching.hpp"

namespace broadcast {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Class members with s moved to the front.
std::vector<Vertex> representative_order(const std::vector<Vertex>& cls, Vertex s) {
  std::vector<Vertex> out(cls.begin(), cls.end());
  std::sort(out.begin(), out.end());
  auto it = std::find(out.begin(), out.end(), s);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

}  // namespace

void enumerate_prefix_guesses(std::span<const std::vector<Vertex>> classes, std::span<const Vertex> cover, Vertex s,
                              std::int32_t k, const std::function<bool(const PrefixGuess&)>& visit) {
  const std::int64_t cap = 2 * static_cast<std::int64_t>(k) * k;
  std::vector<std::vector<Vertex>> ordered;
  std::vector<std::int32_t> minimum;
  for (const auto& cls : classes) {
    ordered.push_back(representative_order(cls, s));
    minimum.push_back(std::find(cls.begin(), cls.end(), s) != cls.end() ? 1 : 0);
  }
  PrefixGuess guess;
  guess.counts.assign(classes.size(), 0);
  bool stop = false;
  auto rec = [&](std::size_t i, std::int64_t left, auto&& self) -> void {
    if (stop) return;
    if (i == classes.size()) {
      guess.prefix.assign(cover.begin(), cover.end());
      for (std::size_t c = 0; c < classes.size(); ++c) {
        guess.prefix.insert(guess.prefix.end(), ordered[c].begin(), ordered[c].begin() + guess.counts[c]);
      }
      std::sort(guess.prefix.begin(), guess.prefix.end());
      if (!visit(guess)) stop = true;
      return;
    }
    const auto top = static_cast<std::int32_t>(std::min<std::int64_t>(left, static_cast<std::int64_t>(ordered[i].size())));
    for (std::int32_t l = minimum[i]; l <= top && !stop; ++l) {
      guess.counts[i] = l;
      self(i + 1, left - l, self);
    }
    guess.counts[i] = 0;
  };
  rec(0, cap, rec);
}

bool prefix_feasible(const Graph& g, Vertex s, const PrefixGuess& guess, std::int32_t k) {
  if (!std::binary_search(guess.prefix.begin(), guess.prefix.end(), s)) return false;
  Subgraph sub = induced_subgraph(g, guess.prefix);
  if (!is_connected(sub.graph)) return false;
  return decide_exact(Instance{sub.graph, sub.from_parent[idx(s)], 2 * static_cast<Round>(k)});
}

TailSystem make_tail_system(const Graph& g, std::span<const Vertex> cover,
                            std::span<const std::vector<Vertex>> classes, const PrefixGuess& guess, Round budget,
                            std::int32_t k) {
  TailSystem sys;
  sys.senders = static_cast<std::int32_t>(cover.size());
  sys.classes = static_cast<std::int32_t>(classes.size());
  sys.capacity = budget - 2 * static_cast<Round>(k);
  sys.allowed.assign(cover.size() * classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sys.demand.push_back(static_cast<std::int64_t>(classes[i].size()) - guess.counts[i]);
    const Vertex member = classes[i].front();
    for (std::size_t v = 0; v < cover.size(); ++v) {
      sys.allowed[v * classes.size() + i] = g.has_edge(cover[v], member) ? 1 : 0;
    }
  }
  return sys;
}

std::optional<std::vector<std::int64_t>> solve_tail(const TailSystem& sys) {
  std::int64_t total = 0;
  for (std::int64_t dm : sys.demand) {
    if (dm < 0) return std::nullopt;
    total += dm;
  }
  std::vector<std::int64_t> x(static_cast<std::size_t>(sys.senders) * static_cast<std::size_t>(sys.classes), 0);
  if (total == 0) return x;
  if (sys.capacity <= 0) return std::nullopt;
  const std::int32_t source = 0;
  const std::int32_t sink = 1;
  auto sender_node = [](std::int32_t v) { return 2 + v; };
  auto class_node = [&](std::int32_t i) { return 2 + sys.senders + i; };
  FlowNetwork net(2 + sys.senders + sys.classes);
  std::vector<std::int32_t> arcs(x.size(), -1);
  for (std::int32_t v = 0; v < sys.senders; ++v) net.add_arc(source, sender_node(v), sys.capacity);
  for (std::int32_t v = 0; v < sys.senders; ++v) {
    for (std::int32_t i = 0; i < sys.classes; ++i) {
      if (sys.allows(v, i)) {
        arcs[static_cast<std::size_t>(v * sys.classes + i)] =
            net.add_arc(sender_node(v), class_node(i), std::numeric_limits<std::int64_t>::max() / 4);
      }
    }
  }
  for (std::int32_t i = 0; i < sys.classes; ++i) net.add_arc(class_node(i), sink, sys.demand[static_cast<std::size_t>(i)]);
  if (net.max_flow(source, sink) != total) return std::nullopt;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a] >= 0) x[a] = net.flow_on(arcs[a]);
  }
  return x;
}

bool tail_feasible(const TailSystem& sys) { return solve_tail(sys).has_value(); }

VertexCoverResult solve_vertex_cover_certified(const Instance& inst, std::int32_t k, const VertexCoverOptions& options) {
  const Graph& g = inst.graph;
  const Vertex n = g.num_vertices();
  const Vertex s = inst.source;
  VertexCoverResult result;
  if (k < 0) throw ParameterError("vertex cover parameter must be nonnegative");
  std::optional<std::vector<Vertex>> cover = min_vertex_cover_upto(g, k);
  if (!cover) throw ParameterError("graph has no vertex cover of size at most " + std::to_string(k));
  result.cover = *cover;
  std::vector<char> in_cover(idx(n), 0);
  for (Vertex v : result.cover) in_cover[idx(v)] = 1;
  std::vector<Vertex> independent;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_cover[idx(v)]) independent.push_back(v);
  }
  const std::int64_t cap = 2 * static_cast<std::int64_t>(k) * k;
  const bool small = static_cast<std::int64_t>(independent.size()) <= cap;

  auto solve_whole = [&]() {
    if (inst.budget >= n - 1) {
      result.decision = true;
      result.witness = extend_tree_protocol(g, BroadcastProtocol::singleton(n, s));
    } else if (decide_exact(inst)) {
      result.decision = true;
      result.witness = broadcast_time_exact(g, s).protocol;
    }
    return result;
  };
  if (inst.budget >= n - 1 || (small && !options.force_pipeline)) return solve_whole();
  if (inst.budget <= 2 * static_cast<Round>(k)) {
    if (!small) return result;
    return solve_whole();
  }

  std::vector<std::vector<Vertex>> classes = false_twin_classes(g, independent);
  std::optional<PrefixGuess> accepted;
  std::vector<std::int64_t> flow;
  enumerate_prefix_guesses(classes, result.cover, s, k, [&](const PrefixGuess& guess) {
    ++result.guesses_checked;
    std::optional<std::vector<std::int64_t>> x = solve_tail(make_tail_system(g, result.cover, classes, guess, inst.budget, k));
    if (!x || !prefix_feasible(g, s, guess, k)) return true;
    accepted = guess;
    flow = std::move(*x);
    return false;
  });
  if (!accepted) return result;

  Subgraph sub = induced_subgraph(g, accepted->prefix);
  ExactResult prefix = broadcast_time_exact(sub.graph, sub.from_parent[idx(s)]);
  BroadcastProtocol p = BroadcastProtocol::singleton(n, s);
  std::vector<Vertex> queue{sub.from_parent[idx(s)]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex lv = queue[head];
    for (Vertex lc : prefix.protocol.children_order[idx(lv)]) {
      p.append_child(sub.to_parent[idx(lv)], sub.to_parent[idx(lc)]);
      queue.push_back(lc);
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<Vertex> rest;
    for (Vertex v : representative_order(classes[i], s)) {
      if (!std::binary_search(accepted->prefix.begin(), accepted->prefix.end(), v)) rest.push_back(v);
    }
    std::size_t next = 0;
    for (std::size_t v = 0; v < result.cover.size(); ++v) {
      for (std::int64_t u = 0; u < flow[v * classes.size() + i]; ++u) p.append_child(result.cover[v], rest[next++]);
    }
  }
  if (Validation v = validate(g, s, inst.budget, p); !v) {
    throw std::logic_error("assembled vertex-cover witness is invalid: " + v.detail);
  }
  result.decision = true;
  result.witness = std::move(p);
  return result;
}

bool solve_vertex_cover_param(const Instance& inst, std::int32_t k) { return solve_vertex_cover_certified(inst, k).decision; }

}  // namespace broadcast
