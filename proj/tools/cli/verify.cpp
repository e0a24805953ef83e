#include "verify.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "broadcast/cyclomatic.hpp"
#include "broadcast/exact_dp.hpp"
#include "broadcast/generators.hpp"
#include "broadcast/kernel.hpp"
#include "broadcast/oracle.hpp"
#include "broadcast/tree_broadcast.hpp"
#include "broadcast/vertex_cover.hpp"
#include "thread_pool.hpp"

namespace broadcast::cli {

namespace {

constexpr const char* kFamilies[] = {"random", "tree", "cyclomatic", "cover"};

Graph generate(std::size_t family, Vertex n, std::mt19937_64& rng) {
  switch (family) {
    case 0: return random_connected_graph(n, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
    case 1: return random_tree(n, rng);
    case 2: return random_bounded_cyclomatic_graph(n, std::uniform_int_distribution<std::int64_t>(1, 3)(rng), rng);
    default:
      return random_bounded_cover_graph(n, std::uniform_int_distribution<Vertex>(1, std::min<Vertex>(3, n))(rng),
                                        std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
  }
}

struct InstanceReport {
  std::string text;
  std::int64_t comparisons = 0;
  std::int64_t disagreements = 0;
};

InstanceReport check_instance(std::size_t index, const VerifyOptions& options, const SolverSet& solvers) {
  std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + index);
  const std::size_t family = index % std::size(kFamilies);
  const Vertex n = std::uniform_int_distribution<Vertex>(1, options.max_n)(rng);
  Graph g = generate(family, n, rng);
  const Vertex s = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);

  InstanceReport r;
  std::ostringstream issues;
  auto disagree = [&](const std::string& what) {
    ++r.disagreements;
    issues << "  disagreement " << what << "\n";
  };
  const Round b = solvers.exact_time(g, s);
  if (n <= kOracleMaxVertices) {
    ++r.comparisons;
    const Round oracle = solvers.oracle_time(g, s);
    if (oracle != b) disagree("solver=oracle exact=" + std::to_string(b) + " oracle=" + std::to_string(oracle));
  }
  const bool tree = is_tree(g);
  const bool low_cyclomatic = !tree && g.cyclomatic_number() <= options.cyclomatic_limit;
  std::optional<std::vector<Vertex>> cover = min_vertex_cover_upto(g, options.cover_limit);
  std::int32_t k = 0;
  while (cover && !min_vertex_cover_upto(g, k)) ++k;

  for (Round t = 0; t < std::max<Round>(n, 1); ++t) {
    const Instance inst{g, s, t};
    const bool expected = b <= t;
    auto check = [&](const char* name, const Verdict& v) {
      ++r.comparisons;
      if (v.decision != expected) {
        disagree(std::string("solver=") + name + " t=" + std::to_string(t) + " expected=" + (expected ? "yes" : "no") +
                 " got=" + (v.decision ? "yes" : "no"));
      }
      if (v.witness) {
        ++r.comparisons;
        if (Validation val = validate(g, s, t, *v.witness); !val) {
          disagree(std::string("solver=") + name + " t=" + std::to_string(t) + " invalid witness: " + val.detail);
        }
      }
    };
    check("exact", solvers.exact(inst));
    if (tree) check("tree", solvers.tree(inst));
    if (low_cyclomatic) check("cyclomatic", solvers.cyclomatic(inst));
    if (cover) check("vertexcover", solvers.vertex_cover(inst, k));
    check("kernel", solvers.kernel(inst));
  }
  std::ostringstream line;
  line << "#" << index << " family=" << kFamilies[family] << " n=" << n << " m=" << g.num_edges() << " source=" << s
       << " b=" << b << " checks=" << r.comparisons << " " << (r.disagreements == 0 ? "agree" : "DISAGREE") << "\n"
       << issues.str();
  r.text = line.str();
  return r;
}

}  // namespace

SolverSet SolverSet::defaults() {
  SolverSet s;
  s.oracle_time = [](const Graph& g, Vertex v) { return brute_force_broadcast_time(g, v); };
  s.exact_time = [](const Graph& g, Vertex v) { return broadcast_time_exact(g, v).time; };
  s.exact = [](const Instance& inst) {
    Verdict v;
    v.decision = decide_exact(inst);
    if (v.decision) v.witness = broadcast_time_exact(inst.graph, inst.source).protocol;
    return v;
  };
  s.tree = [](const Instance& inst) {
    TreeBroadcast r = tree_broadcast_time(TreeView(inst.graph), inst.source);
    Verdict v{r.time <= inst.budget, std::nullopt};
    if (v.decision) v.witness = std::move(r.protocol);
    return v;
  };
  s.cyclomatic = [](const Instance& inst) {
    CyclomaticResult r = solve_cyclomatic_certified(inst);
    return Verdict{r.decision, std::move(r.witness)};
  };
  s.vertex_cover = [](const Instance& inst, std::int32_t k) {
    VertexCoverResult r = solve_vertex_cover_certified(inst, k);
    return Verdict{r.decision, std::move(r.witness)};
  };
  s.kernel = [](const Instance& inst) {
    const std::int64_t k = inst.graph.num_vertices() - inst.budget;
    KernelOutcome out = kernelize(KernelInstance::make(inst.graph, inst.source, k));
    if (out.status != KernelStatus::kReduced) return Verdict{out.status == KernelStatus::kYes, std::nullopt};
    const KernelInstance& ki = out.instance;
    return Verdict{ki.budget() >= 0 && decide_exact(Instance{ki.graph, ki.source, ki.budget()}), std::nullopt};
  };
  return s;
}

VerifyReport verify_suite(const VerifyOptions& options, const SolverSet& solvers) {
  const auto count = static_cast<std::size_t>(std::max(options.instances, 0));
  std::vector<InstanceReport> reports(count);
  parallel_for(count, [&](std::size_t i) { reports[i] = check_instance(i, options, solvers); },
               options.workers == 0 ? worker_count() : options.workers);
  VerifyReport report;
  std::ostringstream out;
  out << "verify seed=" << options.seed << " instances=" << count << " max_n=" << options.max_n << "\n";
  for (const InstanceReport& r : reports) {
    out << r.text;
    ++report.instances;
    report.comparisons += r.comparisons;
    report.disagreements += r.disagreements;
  }
  out << "summary instances=" << report.instances << " comparisons=" << report.comparisons
      << " disagreements=" << report.disagreements << " " << (report.ok() ? "PASS" : "FAIL") << "\n";
  report.text = out.str();
  return report;
}

}  // namespace broadcast::cli
