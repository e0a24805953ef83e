#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "broadcast/graph.hpp"
#include "broadcast/protocol.hpp"

namespace broadcast::cli {

struct Verdict {
  bool decision = false;
  std::optional<BroadcastProtocol> witness;
};

/// The solvers compared by verify_suite; tests swap individual entries for mutants.
struct SolverSet {
  std::function<Round(const Graph&, Vertex)> oracle_time;
  std::function<Round(const Graph&, Vertex)> exact_time;
  std::function<Verdict(const Instance&)> exact;
  std::function<Verdict(const Instance&)> tree;
  std::function<Verdict(const Instance&)> cyclomatic;
  std::function<Verdict(const Instance&, std::int32_t)> vertex_cover;
  /// Kernelize at k = n - t, then decide the result exactly.
  std::function<Verdict(const Instance&)> kernel;

  static SolverSet defaults();
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::int32_t instances = 300;
  Vertex max_n = 10;
  std::int64_t cyclomatic_limit = 3;
  std::int32_t cover_limit = 3;
  std::size_t workers = 0;  // 0 = worker_count()
};

struct VerifyReport {
  std::string text;  // one line per instance plus one per disagreement and a summary
  std::int64_t instances = 0;
  std::int64_t comparisons = 0;
  std::int64_t disagreements = 0;
  bool ok() const noexcept { return disagreements == 0; }
};

/// Cross-checks every applicable solver against the oracle on a seeded corpus of random
/// connected graphs, trees, bounded-cyclomatic and bounded-cover graphs, at every budget.
VerifyReport verify_suite(const VerifyOptions& options, const SolverSet& solvers = SolverSet::defaults());

}  // namespace broadcast::cli
