#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "broadcast/graph.hpp"

namespace broadcast {

/// Instance (G, s, k) asking whether b(G, s) <= n - k.
struct KernelInstance {
  Graph graph;
  Vertex source = 0;
  std::int64_t k = 0;
  std::vector<Vertex> original_ids;  // current id -> id in the input graph (kNoVertex for synthetic vertices)

  /// Validates source and connectivity; original ids start as the identity.
  static KernelInstance make(Graph graph, Vertex source, std::int64_t k);
  std::int64_t budget() const { return graph.num_vertices() - k; }
};

/// ({s}, {}, k = 0).
KernelInstance trivial_yes_instance();
/// ({s, v}, {sv}, k = 2), a no-instance since b = 1 > n - k = 0.
KernelInstance trivial_no_instance();

enum class RuleEffect { kNotApplicable, kReduced, kResolvedYes, kResolvedNo };

struct RuleResult {
  RuleEffect effect = RuleEffect::kNotApplicable;
  std::string target;  // vertex or edge acted on, in original ids
};

RuleResult rule_trivial(KernelInstance& ki);
RuleResult rule_reroot(KernelInstance& ki);
RuleResult rule_pendant(KernelInstance& ki);
RuleResult rule_bridge(KernelInstance& ki);
RuleResult rule_bfs_bound(KernelInstance& ki);
RuleResult rule_heavy_branch(KernelInstance& ki);

struct KernelStep {
  std::string rule;
  std::string target;
  Vertex n_before = 0;
  Vertex n_after = 0;
};

enum class KernelStatus { kReduced, kYes, kNo };

struct KernelOutcome {
  KernelStatus status = KernelStatus::kReduced;
  KernelInstance instance;  // the reduced instance, or the trivial instance of the resolution
  std::vector<KernelStep> trace;
};

/// Applies the six rules in order, restarting from the first after every change.
KernelOutcome kernelize(KernelInstance ki);

/// Upper bound 18k - 12 on the vertex count of a reduced instance.
inline std::int64_t kernel_size_bound(std::int64_t k) { return 18 * k - 12; }

}  // namespace broadcast
