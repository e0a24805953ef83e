#include "broadcast/cyclomatic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "broadcast/tree_broadcast.hpp"

namespace broadcast {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<char> membership(Vertex n, std::span<const Vertex> vertices) {
  std::vector<char> in(idx(n), 0);
  for (Vertex v : vertices) in[idx(v)] = 1;
  return in;
}

int end_index(const XYTree& tree, Vertex end) { return end == tree.x ? 0 : 1; }

Vertex local_to_global(const XYTree& tree, Vertex local) {
  if (local == 0) return tree.x;
  if (local == 1) return tree.y;
  return tree.vertices[idx(local - 2)];
}

/// Memoised tree subroutines on the F' graphs of one decomposition.
class TreeCache {
 public:
  explicit TreeCache(const AnchorDecomposition& d) : arrival_(d.xytrees.size()), delayed_(d.xytrees.size()) {
    views_.reserve(d.xytrees.size());
    for (const XYTree& t : d.xytrees) views_.emplace_back(t.local);
  }

  const TreeView& view(int tree) const { return views_[idx(tree)]; }

  /// b_{budget}(F', from, other end).
  ExtendedRounds arrival(int tree, int from, Round budget) {
    auto& slot = memo(arrival_[idx(tree)][idx(from)], budget);
    if (!slot) slot = constrained_time(views_[idx(tree)], from, 1 - from, budget);
    return *slot;
  }

  /// d_h(F', first, other end).
  Round delayed(int tree, int first, Round h) {
    auto& slot = memo(delayed_[idx(tree)][idx(first)], h);
    if (!slot) slot = ExtendedRounds(two_source_delayed(views_[idx(tree)], first, 1 - first, h));
    return slot->value();
  }

 private:
  static std::optional<ExtendedRounds>& memo(std::vector<std::optional<ExtendedRounds>>& table, Round key) {
    if (table.size() <= idx(static_cast<Vertex>(key))) table.resize(idx(static_cast<Vertex>(key)) + 1);
    return table[idx(static_cast<Vertex>(key))];
  }

  std::vector<TreeView> views_;
  std::vector<std::array<std::vector<std::optional<ExtendedRounds>>, 2>> arrival_;
  std::vector<std::array<std::vector<std::optional<ExtendedRounds>>, 2>> delayed_;
};

/// C(v) slots for an anchor informed in round r with `items` entries of R(v) and x-trees of the
/// given descending times; x-trees take the latest slots they can afford.
bool place_slots(Round r, std::size_t items, std::span<const Round> times, Round budget, std::vector<Round>& item_slot,
                 std::vector<Round>& xtree_slot) {
  const auto q = static_cast<Round>(times.size());
  const Round total = static_cast<Round>(items) + q;
  if (r + total > budget) return false;
  xtree_slot.assign(times.size(), 0);
  Round next = total + 1;
  for (Round i = q; i >= 1; --i) {
    Round h = std::min(next - 1, budget - r - times[idx(static_cast<Vertex>(i - 1))]);
    if (h < 1) return false;
    xtree_slot[idx(static_cast<Vertex>(i - 1))] = h;
    next = h;
  }
  std::vector<char> taken(static_cast<std::size_t>(total) + 1, 0);
  for (Round h : xtree_slot) taken[static_cast<std::size_t>(h)] = 1;
  item_slot.clear();
  for (Round slot = 1; slot <= total; ++slot) {
    if (!taken[static_cast<std::size_t>(slot)]) item_slot.push_back(slot);
  }
  return true;
}

std::vector<Round> xtree_times(const AnchorDecomposition& d, Vertex v) {
  std::vector<Round> times;
  for (int i : d.xtrees_at[idx(v)]) times.push_back(d.xtrees[idx(i)].time);
  return times;
}

/// Whether an unused (x,y)-tree is fully informed by `budget` given the rounds in which x' and y'
/// are informed (-1 when that end does not send into the tree).
bool unused_tree_fits(const XYTree& tree, int tree_index, Round ax, Round ay, Round budget, TreeCache& cache) {
  if (ax < 0 && ay < 0) return false;
  if (ay < 0) return ax + tree.time_from_x_attachment <= budget;
  if (ax < 0) return ay + tree.time_from_y_attachment <= budget;
  if (tree.x_attachment == tree.y_attachment) return false;
  if (ax <= ay) return ax - 1 + cache.delayed(tree_index, 0, ay - ax) <= budget;
  return ay - 1 + cache.delayed(tree_index, 1, ax - ay) <= budget;
}

struct Evaluation {
  std::vector<Round> round;                   // r(v) on anchors
  std::vector<std::vector<Vertex>> sends;     // C(v) in slot order on anchors
  std::vector<std::array<Round, 2>> attach;   // rounds in which x', y' are informed, -1 if unused
  std::vector<Round> path_budget;             // t' for T'' paths, -1 otherwise
};

bool evaluate(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme, Round budget, TreeCache& cache,
              Evaluation& ev) {
  const Vertex n = g.num_vertices();
  if (static_cast<Vertex>(scheme.parent.size()) != n || static_cast<Vertex>(scheme.order.size()) != n ||
      scheme.tree_use.size() != d.xytrees.size()) {
    return false;
  }
  if (scheme.parent[idx(d.source)] != d.source) return false;
  ev.round.assign(idx(n), kNotInformed);
  ev.sends.assign(idx(n), {});
  ev.attach.assign(d.xytrees.size(), {-1, -1});
  ev.path_budget.assign(d.xytrees.size(), -1);
  ev.round[idx(d.source)] = 0;
  std::vector<Vertex> queue{d.source};
  std::vector<Round> item_slot;
  std::vector<Round> xtree_slot;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Round r = ev.round[idx(v)];
    const auto& items = scheme.order[idx(v)];
    std::vector<Round> times = xtree_times(d, v);
    if (!place_slots(r, items.size(), times, budget, item_slot, xtree_slot)) return false;
    auto& sends = ev.sends[idx(v)];
    sends.assign(items.size() + times.size(), kNoVertex);
    for (std::size_t i = 0; i < times.size(); ++i) {
      sends[idx(static_cast<Vertex>(xtree_slot[i] - 1))] = d.xtrees[idx(d.xtrees_at[idx(v)][i])].attachment;
    }
    for (std::size_t j = 0; j < items.size(); ++j) {
      const SchemeItem& item = items[j];
      const Round slot = item_slot[j];
      sends[idx(static_cast<Vertex>(slot - 1))] = item.target;
      if (item.tree < 0) {
        Vertex w = item.target;
        if (w < 0 || w >= n || !d.is_anchor[idx(w)] || !g.has_edge(v, w) || scheme.parent[idx(w)] != v ||
            ev.round[idx(w)] != kNotInformed) {
          return false;
        }
        ev.round[idx(w)] = r + slot;
        queue.push_back(w);
        continue;
      }
      if (item.tree >= static_cast<int>(d.xytrees.size())) return false;
      const XYTree& tree = d.xytrees[idx(item.tree)];
      if ((v != tree.x && v != tree.y) || item.target != tree.attachment(v)) return false;
      const int end = end_index(tree, v);
      const TreeUse use = scheme.tree_use[idx(item.tree)];
      if (use == TreeUse::kPath) {
        Vertex o = tree.other_end(v);
        if (scheme.parent[idx(o)] != v || ev.round[idx(o)] != kNotInformed) return false;
        const Round local_budget = budget - r - slot + 1;
        ExtendedRounds arrive = cache.arrival(item.tree, end, local_budget);
        if (arrive.is_infinite()) return false;
        ev.round[idx(o)] = r + slot - 1 + arrive.value();
        ev.path_budget[idx(item.tree)] = local_budget;
        queue.push_back(o);
        continue;
      }
      const bool allowed = use == TreeUse::kBoth || (use == TreeUse::kFromX && end == 0) ||
                           (use == TreeUse::kFromY && end == 1);
      if (!allowed || ev.attach[idx(item.tree)][idx(end)] >= 0) return false;
      ev.attach[idx(item.tree)][idx(end)] = r + slot;
    }
  }
  for (Vertex a : d.anchors) {
    if (ev.round[idx(a)] == kNotInformed) return false;
  }
  for (std::size_t i = 0; i < d.xytrees.size(); ++i) {
    const TreeUse use = scheme.tree_use[i];
    if (use == TreeUse::kPath) {
      if (ev.path_budget[i] < 0) return false;
      continue;
    }
    const bool want_x = use != TreeUse::kFromY;
    const bool want_y = use != TreeUse::kFromX;
    if ((ev.attach[i][0] >= 0) != want_x || (ev.attach[i][1] >= 0) != want_y) return false;
    if (!unused_tree_fits(d.xytrees[i], static_cast<int>(i), ev.attach[i][0], ev.attach[i][1], budget, cache)) {
      return false;
    }
  }
  return true;
}

void schedule_component(const Graph& g, Vertex from, std::span<const Vertex> vertices, BroadcastProtocol& p) {
  std::vector<char> allowed = membership(g.num_vertices(), vertices);
  schedule_subtree(g, from, allowed, &p);
}

BroadcastProtocol assemble(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme, Round budget,
                           TreeCache& cache, const Evaluation& ev) {
  const Vertex n = g.num_vertices();
  BroadcastProtocol p = BroadcastProtocol::singleton(n, d.source);
  std::vector<Vertex> dropped_by(idx(n), kNoVertex);

  struct Split {
    int tree;
    Vertex first;  // the end whose attachment is informed no later
    DelayedPlan plan;
  };
  std::vector<Split> splits;
  for (std::size_t i = 0; i < d.xytrees.size(); ++i) {
    if (scheme.tree_use[i] != TreeUse::kBoth) continue;
    const XYTree& tree = d.xytrees[i];
    const bool x_first = ev.attach[i][0] <= ev.attach[i][1];
    const Vertex first = x_first ? tree.x : tree.y;
    const Vertex second = tree.other_end(first);
    const Round h = x_first ? ev.attach[i][1] - ev.attach[i][0] : ev.attach[i][0] - ev.attach[i][1];
    DelayedPlan plan = two_source_plan(cache.view(static_cast<int>(i)), tree.local_id(first), tree.local_id(second), h);
    if (!plan.cut) {
      dropped_by[idx(tree.attachment(second))] = second;
    } else {
      if (plan.cut->first == tree.local_id(first)) dropped_by[idx(tree.attachment(first))] = first;
      if (plan.cut->second == tree.local_id(second)) dropped_by[idx(tree.attachment(second))] = second;
    }
    splits.push_back({static_cast<int>(i), first, plan});
  }

  for (Vertex a : d.anchors) {
    for (Vertex c : ev.sends[idx(a)]) {
      if (dropped_by[idx(c)] != a) p.append_child(a, c);
    }
  }
  for (const XTree& xt : d.xtrees) schedule_component(g, xt.attachment, xt.vertices, p);

  for (std::size_t i = 0; i < d.xytrees.size(); ++i) {
    const XYTree& tree = d.xytrees[i];
    switch (scheme.tree_use[i]) {
      case TreeUse::kPath: {
        const Vertex from = scheme.parent[idx(tree.y)] == tree.x ? tree.x : tree.y;
        BroadcastProtocol local;
        constrained_time(cache.view(static_cast<int>(i)), tree.local_id(from), tree.local_id(tree.other_end(from)),
                         ev.path_budget[i], &local);
        for (Vertex lv = 2; lv < tree.local.num_vertices(); ++lv) {
          for (Vertex c : local.children_order[idx(lv)]) p.append_child(local_to_global(tree, lv), local_to_global(tree, c));
        }
        break;
      }
      case TreeUse::kFromX: schedule_component(g, tree.x_attachment, tree.vertices, p); break;
      case TreeUse::kFromY: schedule_component(g, tree.y_attachment, tree.vertices, p); break;
      case TreeUse::kBoth: break;
    }
  }

  for (const Split& split : splits) {
    const XYTree& tree = d.xytrees[idx(split.tree)];
    const Vertex second = tree.other_end(split.first);
    if (!split.plan.cut) {
      schedule_component(g, tree.attachment(split.first), tree.vertices, p);
      continue;
    }
    // Local component of the cut's first endpoint once the cut edge is removed.
    const Graph& local = tree.local;
    std::vector<char> near(idx(local.num_vertices()), 0);
    std::vector<Vertex> stack{split.plan.cut->first};
    near[idx(split.plan.cut->first)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : local.neighbors(v)) {
        if (near[idx(w)] || (v == split.plan.cut->first && w == split.plan.cut->second)) continue;
        near[idx(w)] = 1;
        stack.push_back(w);
      }
    }
    std::vector<Vertex> first_side;
    std::vector<Vertex> second_side;
    for (Vertex lv = 2; lv < local.num_vertices(); ++lv) {
      (near[idx(lv)] ? first_side : second_side).push_back(local_to_global(tree, lv));
    }
    if (!first_side.empty()) schedule_component(g, tree.attachment(split.first), first_side, p);
    if (!second_side.empty()) schedule_component(g, tree.attachment(second), second_side, p);
  }

  if (Validation v = validate(g, d.source, budget, p); !v) {
    throw std::logic_error("assembled cyclomatic witness is invalid: " + v.detail);
  }
  return p;
}

class SchemeSearch {
 public:
  SchemeSearch(const Graph& g, const AnchorDecomposition& d, Round budget, TreeCache& cache)
      : g_(g), d_(d), budget_(budget), cache_(cache) {}

  std::optional<Scheme> run() {
    const Vertex n = g_.num_vertices();
    State st;
    st.round.assign(idx(n), kNotInformed);
    st.expanded.assign(idx(n), 0);
    st.attach.assign(d_.xytrees.size(), {-1, -1});
    st.path.assign(d_.xytrees.size(), 0);
    st.scheme.parent.assign(idx(n), kNoVertex);
    st.scheme.order.assign(idx(n), {});
    st.scheme.tree_use.assign(d_.xytrees.size(), TreeUse::kFromX);
    st.round[idx(d_.source)] = 0;
    st.scheme.parent[idx(d_.source)] = d_.source;
    st.unreached = static_cast<int>(d_.anchors.size()) - 1;
    if (dfs(st)) return found_;
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<Round> round;
    std::vector<char> expanded;
    std::vector<std::array<Round, 2>> attach;
    std::vector<char> path;
    Scheme scheme;
    int unreached = 0;
  };

  enum class Kind { kDirect, kChild, kAttach };
  struct Candidate {
    SchemeItem item;
    Kind kind;
    bool mandatory;
    Vertex reaches = kNoVertex;  // anchor informed through this send
  };

  bool dfs(const State& st) {
    Vertex v = kNoVertex;
    for (Vertex a : d_.anchors) {
      if (st.round[idx(a)] == kNotInformed || st.expanded[idx(a)]) continue;
      if (v == kNoVertex || st.round[idx(a)] < st.round[idx(v)]) v = a;
    }
    if (v == kNoVertex) {
      if (st.unreached != 0) return false;
      found_ = st.scheme;
      return true;
    }
    const Round rem = budget_ - st.round[idx(v)];
    std::vector<Round> times = xtree_times(d_, v);
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] + static_cast<Round>(i + 1) > rem) return false;
    }
    const Round max_items = rem - static_cast<Round>(times.size());

    std::vector<Candidate> cands;
    for (const Edge& e : d_.anchor_edges) {
      Vertex w = e.first == v ? e.second : e.second == v ? e.first : kNoVertex;
      if (w != kNoVertex && st.round[idx(w)] == kNotInformed) cands.push_back({{w, -1}, Kind::kDirect, false, w});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.item < b.item; });
    std::vector<Candidate> attaches;
    for (int t : d_.xytrees_at[idx(v)]) {
      if (st.path[idx(t)]) continue;
      const XYTree& tree = d_.xytrees[idx(t)];
      const Vertex o = tree.other_end(v);
      const SchemeItem item{tree.attachment(v), t};
      if (!st.expanded[idx(o)]) {
        if (st.round[idx(o)] == kNotInformed) cands.push_back({item, Kind::kChild, false, o});
        attaches.push_back({item, Kind::kAttach, false});
      } else if (st.attach[idx(t)][idx(end_index(tree, o))] < 0) {
        attaches.push_back({item, Kind::kAttach, true});
      } else if (tree.x_attachment != tree.y_attachment) {
        attaches.push_back({item, Kind::kAttach, false});
      }
    }
    cands.insert(cands.end(), attaches.begin(), attaches.end());

    std::size_t mandatory = 0;
    for (const Candidate& c : cands) mandatory += c.mandatory ? 1 : 0;
    if (static_cast<Round>(mandatory) > max_items) return false;

    std::vector<char> taken(cands.size(), 0);
    std::vector<int> prefix;
    std::vector<char> tree_taken(d_.xytrees.size(), 0);
    std::vector<char> anchor_taken(idx(g_.num_vertices()), 0);
    auto extend = [&](auto&& self, std::size_t mandatory_in) -> bool {
      if (static_cast<Round>(prefix.size()) < max_items) {
        for (std::size_t c = 0; c < cands.size(); ++c) {
          const Candidate& cand = cands[c];
          if (taken[c] || (cand.item.tree >= 0 && tree_taken[idx(cand.item.tree)]) ||
              (cand.reaches != kNoVertex && anchor_taken[idx(cand.reaches)])) {
            continue;
          }
          taken[c] = 1;
          if (cand.item.tree >= 0) tree_taken[idx(cand.item.tree)] = 1;
          if (cand.reaches != kNoVertex) anchor_taken[idx(cand.reaches)] = 1;
          prefix.push_back(static_cast<int>(c));
          bool ok = self(self, mandatory_in + (cand.mandatory ? 1 : 0));
          prefix.pop_back();
          if (cand.item.tree >= 0) tree_taken[idx(cand.item.tree)] = 0;
          if (cand.reaches != kNoVertex) anchor_taken[idx(cand.reaches)] = 0;
          taken[c] = 0;
          if (ok) return true;
        }
      }
      return mandatory_in == mandatory && apply(st, v, cands, prefix, times);
    };
    return extend(extend, 0);
  }

  bool apply(const State& st, Vertex v, const std::vector<Candidate>& cands, const std::vector<int>& chosen,
             std::span<const Round> times) {
    const Round r = st.round[idx(v)];
    std::vector<Round> item_slot;
    std::vector<Round> xtree_slot;
    if (!place_slots(r, chosen.size(), times, budget_, item_slot, xtree_slot)) return false;
    State ns = st;
    ns.expanded[idx(v)] = 1;
    auto& order = ns.scheme.order[idx(v)];
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const Candidate& cand = cands[idx(chosen[j])];
      const Round slot = item_slot[j];
      order.push_back(cand.item);
      switch (cand.kind) {
        case Kind::kDirect:
          ns.round[idx(cand.item.target)] = r + slot;
          ns.scheme.parent[idx(cand.item.target)] = v;
          --ns.unreached;
          break;
        case Kind::kChild: {
          const XYTree& tree = d_.xytrees[idx(cand.item.tree)];
          const Vertex o = tree.other_end(v);
          ExtendedRounds arrive = cache_.arrival(cand.item.tree, end_index(tree, v), budget_ - r - slot + 1);
          if (arrive.is_infinite()) return false;
          ns.round[idx(o)] = r + slot - 1 + arrive.value();
          ns.scheme.parent[idx(o)] = v;
          ns.path[idx(cand.item.tree)] = 1;
          ns.scheme.tree_use[idx(cand.item.tree)] = TreeUse::kPath;
          --ns.unreached;
          break;
        }
        case Kind::kAttach: {
          const XYTree& tree = d_.xytrees[idx(cand.item.tree)];
          ns.attach[idx(cand.item.tree)][idx(end_index(tree, v))] = r + slot;
          break;
        }
      }
    }
    for (int t : d_.xytrees_at[idx(v)]) {
      const XYTree& tree = d_.xytrees[idx(t)];
      if (ns.path[idx(t)] || !ns.expanded[idx(tree.other_end(v))]) continue;
      const Round ax = ns.attach[idx(t)][0];
      const Round ay = ns.attach[idx(t)][1];
      if (!unused_tree_fits(tree, t, ax, ay, budget_, cache_)) return false;
      ns.scheme.tree_use[idx(t)] = ax >= 0 && ay >= 0 ? TreeUse::kBoth : ax >= 0 ? TreeUse::kFromX : TreeUse::kFromY;
    }
    // Each frontier anchor informed in round r can reach at most 2^(t-r) - 1 further vertices.
    std::int64_t capacity = 0;
    for (Vertex a : d_.anchors) {
      if (ns.round[idx(a)] == kNotInformed || ns.expanded[idx(a)]) continue;
      const Round left = budget_ - ns.round[idx(a)];
      capacity += left >= 40 ? (std::int64_t{1} << 40) : (std::int64_t{1} << left) - 1;
      if (capacity >= ns.unreached) break;
    }
    if (capacity < ns.unreached) return false;
    return dfs(ns);
  }

  const Graph& g_;
  const AnchorDecomposition& d_;
  Round budget_;
  TreeCache& cache_;
  std::optional<Scheme> found_;
};

void require_instance_source(const Graph& g, Vertex s) {
  if (s < 0 || s >= g.num_vertices()) throw GraphError("source out of range");
  if (!is_connected(g)) throw GraphError("graph is disconnected");
}

}  // namespace

AnchorDecomposition decompose_with_anchors(const Graph& g, Vertex s, std::span<const Vertex> anchors) {
  require_instance_source(g, s);
  const Vertex n = g.num_vertices();
  AnchorDecomposition d;
  d.source = s;
  d.cyclomatic = g.cyclomatic_number();
  d.anchors.assign(anchors.begin(), anchors.end());
  std::sort(d.anchors.begin(), d.anchors.end());
  d.anchors.erase(std::unique(d.anchors.begin(), d.anchors.end()), d.anchors.end());
  for (Vertex a : d.anchors) {
    if (a < 0 || a >= n) throw GraphError("anchor out of range");
  }
  d.is_anchor = membership(n, d.anchors);
  if (!d.is_anchor[idx(s)]) throw GraphError("anchor set must contain the source");
  d.xtrees_at.assign(idx(n), {});
  d.xytrees_at.assign(idx(n), {});
  for (const Edge& e : g.edges()) {
    if (d.is_anchor[idx(e.first)] && d.is_anchor[idx(e.second)]) d.anchor_edges.push_back(e);
  }

  std::vector<int> component(idx(n), -1);
  std::set<std::pair<Vertex, Vertex>> pairs;
  int next_component = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (d.is_anchor[idx(root)] || component[idx(root)] >= 0) continue;
    std::vector<Vertex> vertices{root};
    component[idx(root)] = next_component;
    std::int64_t degree_sum = 0;
    std::vector<std::pair<Vertex, Vertex>> contacts;  // (anchor, neighbour in component)
    for (std::size_t head = 0; head < vertices.size(); ++head) {
      Vertex v = vertices[head];
      for (Vertex w : g.neighbors(v)) {
        if (d.is_anchor[idx(w)]) {
          contacts.emplace_back(w, v);
          continue;
        }
        ++degree_sum;
        if (component[idx(w)] < 0) {
          component[idx(w)] = next_component;
          vertices.push_back(w);
        }
      }
    }
    ++next_component;
    std::sort(vertices.begin(), vertices.end());
    std::sort(contacts.begin(), contacts.end());
    if (degree_sum / 2 != static_cast<std::int64_t>(vertices.size()) - 1) {
      throw GraphError("component of G - U around vertex " + std::to_string(root) + " is not a tree");
    }
    for (std::size_t i = 1; i < contacts.size(); ++i) {
      if (contacts[i].first == contacts[i - 1].first) {
        throw GraphError("anchor " + std::to_string(contacts[i].first) + " has two neighbours in one component");
      }
    }
    std::vector<char> in = membership(n, vertices);
    if (contacts.size() == 1) {
      XTree xt;
      xt.anchor = contacts[0].first;
      xt.attachment = contacts[0].second;
      xt.vertices = vertices;
      xt.time = schedule_subtree(g, xt.attachment, in);
      d.xtrees_at[idx(xt.anchor)].push_back(static_cast<int>(d.xtrees.size()));
      d.xtrees.push_back(std::move(xt));
      continue;
    }
    if (contacts.size() != 2) throw GraphError("component of G - U must touch one or two anchors");
    XYTree tree;
    tree.x = contacts[0].first;
    tree.y = contacts[1].first;
    tree.x_attachment = contacts[0].second;
    tree.y_attachment = contacts[1].second;
    if (!pairs.emplace(tree.x, tree.y).second) {
      throw GraphError("two components share the anchor pair " + std::to_string(tree.x) + "," + std::to_string(tree.y));
    }
    tree.vertices = vertices;
    auto local_id = [&](Vertex v) {
      return static_cast<Vertex>(std::lower_bound(tree.vertices.begin(), tree.vertices.end(), v) - tree.vertices.begin()) + 2;
    };
    std::vector<Edge> local_edges{Edge::make(0, local_id(tree.x_attachment)), Edge::make(1, local_id(tree.y_attachment))};
    for (Vertex v : vertices) {
      for (Vertex w : g.neighbors(v)) {
        if (v < w && in[idx(w)]) local_edges.push_back(Edge::make(local_id(v), local_id(w)));
      }
    }
    tree.local = Graph(static_cast<Vertex>(vertices.size()) + 2, local_edges);
    tree.time_from_x_attachment = schedule_subtree(g, tree.x_attachment, in);
    tree.time_from_y_attachment = schedule_subtree(g, tree.y_attachment, in);
    const int index = static_cast<int>(d.xytrees.size());
    d.xytrees_at[idx(tree.x)].push_back(index);
    d.xytrees_at[idx(tree.y)].push_back(index);
    d.xytrees.push_back(std::move(tree));
  }
  for (auto& list : d.xtrees_at) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      const XTree& ta = d.xtrees[idx(a)];
      const XTree& tb = d.xtrees[idx(b)];
      return ta.time != tb.time ? ta.time > tb.time : ta.attachment < tb.attachment;
    });
  }
  return d;
}

AnchorDecomposition build_anchor_set(const Graph& g, Vertex s, std::span<const Edge> feedback) {
  require_instance_source(g, s);
  const Vertex n = g.num_vertices();
  std::vector<Edge> removed(feedback.begin(), feedback.end());
  for (Edge& e : removed) e = Edge::make(e.first, e.second);
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  if (removed.empty()) throw GraphError("graph has no feedback edges; use the tree solver");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  }
  if (kept.size() + removed.size() != g.num_edges() || !is_tree(Graph(n, kept))) {
    throw GraphError("feedback edges must be graph edges leaving a spanning tree");
  }
  std::vector<char> in_w(idx(n), 0);
  in_w[idx(s)] = 1;
  for (const Edge& e : removed) in_w[idx(e.first)] = in_w[idx(e.second)] = 1;
  std::vector<Vertex> degree(idx(n));
  std::vector<char> pruned(idx(n), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[idx(v)] = g.degree(v);
    if (!in_w[idx(v)] && degree[idx(v)] <= 1) {
      pruned[idx(v)] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (pruned[idx(w)]) continue;
      if (--degree[idx(w)] <= 1 && !in_w[idx(w)]) {
        pruned[idx(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> anchors;
  for (Vertex v = 0; v < n; ++v) {
    if (in_w[idx(v)] || (!pruned[idx(v)] && degree[idx(v)] >= 3)) anchors.push_back(v);
  }
  AnchorDecomposition d = decompose_with_anchors(g, s, anchors);
  d.feedback = removed;
  return d;
}

AnchorDecomposition build_anchor_set(const Graph& g, Vertex s) {
  require_instance_source(g, s);
  if (g.cyclomatic_number() == 0) throw GraphError("graph is a tree; use the tree solver");
  std::vector<Edge> feedback = feedback_edge_set(g, s);
  return build_anchor_set(g, s, feedback);
}

void enumerate_schemes(const AnchorDecomposition& d, const Graph& g, const std::function<bool(const Scheme&)>& visit) {
  const Vertex n = g.num_vertices();
  struct MultiEdge {
    Vertex u;
    Vertex w;
    int tree;
  };
  std::vector<MultiEdge> edges;
  for (const Edge& e : d.anchor_edges) edges.push_back({e.first, e.second, -1});
  for (std::size_t i = 0; i < d.xytrees.size(); ++i) edges.push_back({d.xytrees[i].x, d.xytrees[i].y, static_cast<int>(i)});
  std::vector<int> anchor_index(idx(n), -1);
  for (std::size_t i = 0; i < d.anchors.size(); ++i) anchor_index[idx(d.anchors[i])] = static_cast<int>(i);
  const std::size_t need = d.anchors.size() - 1;
  bool stop = false;
  std::vector<int> kept;

  auto find = [](std::vector<int>& parent, int v) {
    while (parent[idx(v)] != v) v = parent[idx(v)] = parent[idx(parent[idx(v)])];
    return v;
  };

  auto orderings = [&](Scheme& scheme, std::vector<std::vector<SchemeItem>>& sets, std::size_t anchor,
                       auto&& self) -> void {
    if (stop) return;
    if (anchor == d.anchors.size()) {
      for (Vertex a : d.anchors) scheme.order[idx(a)] = sets[idx(a)];
      if (!visit(scheme)) stop = true;
      return;
    }
    auto& set = sets[idx(d.anchors[anchor])];
    std::sort(set.begin(), set.end());
    do {
      self(scheme, sets, anchor + 1, self);
    } while (!stop && std::next_permutation(set.begin(), set.end()));
  };

  auto with_tree = [&]() {
    Scheme scheme;
    scheme.parent.assign(idx(n), kNoVertex);
    scheme.order.assign(idx(n), {});
    scheme.tree_use.assign(d.xytrees.size(), TreeUse::kFromX);
    std::vector<std::vector<std::pair<Vertex, int>>> adjacent(idx(n));
    for (int e : kept) {
      adjacent[idx(edges[idx(e)].u)].push_back({edges[idx(e)].w, edges[idx(e)].tree});
      adjacent[idx(edges[idx(e)].w)].push_back({edges[idx(e)].u, edges[idx(e)].tree});
    }
    std::vector<std::vector<SchemeItem>> children(idx(n));
    scheme.parent[idx(d.source)] = d.source;
    std::vector<Vertex> queue{d.source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (auto [w, tree] : adjacent[idx(v)]) {
        if (scheme.parent[idx(w)] != kNoVertex) continue;
        scheme.parent[idx(w)] = v;
        queue.push_back(w);
        if (tree < 0) {
          children[idx(v)].push_back({w, -1});
        } else {
          scheme.tree_use[idx(tree)] = TreeUse::kPath;
          children[idx(v)].push_back({d.xytrees[idx(tree)].attachment(v), tree});
        }
      }
    }
    std::vector<int> unused;
    for (std::size_t i = 0; i < d.xytrees.size(); ++i) {
      if (scheme.tree_use[i] != TreeUse::kPath) unused.push_back(static_cast<int>(i));
    }
    auto directions = [&](std::size_t pos, auto&& self) -> void {
      if (stop) return;
      if (pos == unused.size()) {
        std::vector<std::vector<SchemeItem>> sets = children;
        for (int t : unused) {
          const XYTree& tree = d.xytrees[idx(t)];
          if (scheme.tree_use[idx(t)] != TreeUse::kFromY) sets[idx(tree.x)].push_back({tree.x_attachment, t});
          if (scheme.tree_use[idx(t)] != TreeUse::kFromX) sets[idx(tree.y)].push_back({tree.y_attachment, t});
        }
        orderings(scheme, sets, 0, orderings);
        return;
      }
      const XYTree& tree = d.xytrees[idx(unused[pos])];
      for (TreeUse use : {TreeUse::kFromX, TreeUse::kFromY, TreeUse::kBoth}) {
        if (use == TreeUse::kBoth && tree.x_attachment == tree.y_attachment) continue;
        scheme.tree_use[idx(unused[pos])] = use;
        self(pos + 1, self);
      }
    };
    directions(0, directions);
  };

  auto choose = [&](std::size_t pos, std::vector<int> parent, auto&& self) -> void {
    if (stop) return;
    if (kept.size() == need) {
      with_tree();
      return;
    }
    if (edges.size() - pos < need - kept.size()) return;
    const MultiEdge& e = edges[pos];
    int a = find(parent, anchor_index[idx(e.u)]);
    int b = find(parent, anchor_index[idx(e.w)]);
    if (a != b) {
      std::vector<int> joined = parent;
      joined[idx(a)] = b;
      kept.push_back(static_cast<int>(pos));
      self(pos + 1, joined, self);
      kept.pop_back();
    }
    self(pos + 1, parent, self);
  };
  std::vector<int> parent(d.anchors.size());
  std::iota(parent.begin(), parent.end(), 0);
  choose(0, parent, choose);
}

bool verify_scheme(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme, Round budget) {
  TreeCache cache(d);
  Evaluation ev;
  return evaluate(g, d, scheme, budget, cache, ev);
}

std::optional<BroadcastProtocol> assemble_witness(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme,
                                                  Round budget) {
  TreeCache cache(d);
  Evaluation ev;
  if (!evaluate(g, d, scheme, budget, cache, ev)) return std::nullopt;
  return assemble(g, d, scheme, budget, cache, ev);
}

CyclomaticResult solve_with_decomposition(const Graph& g, const AnchorDecomposition& d, Round budget) {
  TreeCache cache(d);
  SchemeSearch search(g, d, budget, cache);
  CyclomaticResult result;
  result.scheme = search.run();
  if (!result.scheme) return result;
  Evaluation ev;
  if (!evaluate(g, d, *result.scheme, budget, cache, ev)) {
    throw std::logic_error("scheme search accepted a scheme that fails verification");
  }
  result.decision = true;
  result.witness = assemble(g, d, *result.scheme, budget, cache, ev);
  return result;
}

CyclomaticResult solve_cyclomatic_certified(const Instance& inst) {
  const Graph& g = inst.graph;
  const Vertex n = g.num_vertices();
  CyclomaticResult result;
  if (inst.budget >= n - 1) {
    result.decision = true;
    result.witness = extend_tree_protocol(g, BroadcastProtocol::singleton(n, inst.source));
    return result;
  }
  if (inst.budget < 40 && (std::int64_t{1} << inst.budget) < n) return result;
  if (g.cyclomatic_number() == 0) {
    TreeBroadcast tb = tree_broadcast_time(TreeView(g), inst.source);
    if (tb.time <= inst.budget) {
      result.decision = true;
      result.witness = std::move(tb.protocol);
    }
    return result;
  }
  return solve_with_decomposition(g, build_anchor_set(g, inst.source), inst.budget);
}

bool solve_cyclomatic(const Instance& inst) { return solve_cyclomatic_certified(inst).decision; }

}  // namespace broadcast
