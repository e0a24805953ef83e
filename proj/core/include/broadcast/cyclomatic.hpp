#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast {

/// Component of G - U adjacent to exactly one anchor.
struct XTree {
  Vertex anchor = kNoVertex;
  Vertex attachment = kNoVertex;  // the anchor's unique neighbour in the component
  std::vector<Vertex> vertices;   // ascending
  Round time = 0;                 // b(component, attachment)
};

/// Component F of G - U adjacent to exactly two anchors x < y.
struct XYTree {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  Vertex x_attachment = kNoVertex;  // x'
  Vertex y_attachment = kNoVertex;  // y'
  std::vector<Vertex> vertices;     // ascending
  /// F' = F plus x, y and the edges xx', yy'. Local id 0 is x, 1 is y, then `vertices` in order.
  Graph local;
  Round time_from_x_attachment = 0;  // b(F, x')
  Round time_from_y_attachment = 0;  // b(F, y')

  Vertex other_end(Vertex end) const { return end == x ? y : x; }
  Vertex attachment(Vertex end) const { return end == x ? x_attachment : y_attachment; }
  Vertex local_id(Vertex end) const { return end == x ? 0 : 1; }
};

struct AnchorDecomposition {
  Vertex source = 0;
  std::int64_t cyclomatic = 0;
  std::vector<Edge> feedback;         // empty when U was supplied directly
  std::vector<Vertex> anchors;        // U, ascending
  std::vector<char> is_anchor;        // per vertex
  std::vector<Edge> anchor_edges;     // edges of G[U]
  std::vector<XTree> xtrees;
  std::vector<std::vector<int>> xtrees_at;   // per vertex: xtree indices by (time desc, attachment asc)
  std::vector<XYTree> xytrees;
  std::vector<std::vector<int>> xytrees_at;  // per vertex: xytree indices, ascending
};

/// U from a BFS spanning tree rooted at s. Throws GraphError when g is a tree or disconnected.
AnchorDecomposition build_anchor_set(const Graph& g, Vertex s);
/// U from the given feedback edge set, which must leave a spanning tree.
AnchorDecomposition build_anchor_set(const Graph& g, Vertex s, std::span<const Edge> feedback);
/// Classifies G - U for a caller-chosen U containing s. Throws GraphError when some component
/// is not a tree, touches an anchor twice, has more than two anchors, or two components share
/// the same anchor pair.
AnchorDecomposition decompose_with_anchors(const Graph& g, Vertex s, std::span<const Vertex> anchors);

/// One entry of R(v): a send from v to `target`. With tree >= 0 the target is v's attachment
/// vertex in xytrees[tree]; otherwise it is an anchor adjacent to v.
struct SchemeItem {
  Vertex target = kNoVertex;
  int tree = -1;

  friend auto operator<=>(const SchemeItem&, const SchemeItem&) = default;
};

/// How an (x,y)-tree is informed: as the T'' path between its anchors, or from x', y' or both.
enum class TreeUse { kPath, kFromX, kFromY, kBoth };

struct Scheme {
  std::vector<Vertex> parent;                 // per vertex; p(s) = s, kNoVertex off U
  std::vector<std::vector<SchemeItem>> order;  // R(v) per vertex, empty off U
  std::vector<TreeUse> tree_use;              // per xytree

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

/// Visits every scheme: each spanning tree T'' of the anchor multigraph, each direction of the
/// unused (x,y)-trees and each ordering of every R(v). Stops early when `visit` returns false.
void enumerate_schemes(const AnchorDecomposition& d, const Graph& g, const std::function<bool(const Scheme&)>& visit);

/// True iff the scheme extends to a protocol finishing within `budget` rounds.
bool verify_scheme(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme, Round budget);

/// A validated protocol realising a scheme accepted by verify_scheme, nullopt otherwise.
std::optional<BroadcastProtocol> assemble_witness(const Graph& g, const AnchorDecomposition& d, const Scheme& scheme,
                                                  Round budget);

struct CyclomaticResult {
  bool decision = false;
  std::optional<BroadcastProtocol> witness;  // present iff decision
  std::optional<Scheme> scheme;              // the accepted scheme when the search ran
};

/// Searches for an accepted scheme of a fixed decomposition.
CyclomaticResult solve_with_decomposition(const Graph& g, const AnchorDecomposition& d, Round budget);

/// b(G, s) <= t with a witness, by scheme search over the BFS-tree anchor set.
CyclomaticResult solve_cyclomatic_certified(const Instance& inst);
bool solve_cyclomatic(const Instance& inst);

}  // namespace broadcast
