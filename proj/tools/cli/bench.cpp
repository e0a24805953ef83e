#include "bench.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "broadcast/cyclomatic.hpp"
#include "broadcast/exact_dp.hpp"
#include "broadcast/generators.hpp"
#include "broadcast/kernel.hpp"
#include "broadcast/tree_broadcast.hpp"
#include "broadcast/vertex_cover.hpp"
#include "output.hpp"
#include "thread_pool.hpp"

namespace broadcast::cli {

namespace {

struct Workload {
  std::string name;
  Graph graph;
  std::function<std::string(const Graph&)> run;
};

Round bfs_tree_time(const Graph& g) {
  BfsDecomposition bfs = bfs_decompose(g, 0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < g.num_vertices(); ++v) edges.push_back(Edge::make(v, bfs.parent[static_cast<std::size_t>(v)]));
  return tree_broadcast_time(TreeView(Graph(g.num_vertices(), edges)), 0).time;
}

}  // namespace

std::vector<BenchRecord> bench_suite(std::uint64_t seed, Vertex max_n, std::int32_t repeats) {
  std::mt19937_64 rng(seed);
  std::vector<Workload> workloads;
  for (Vertex n : {1000, 10'000, 100'000}) {
    workloads.push_back({"tree", random_tree(n, rng), [](const Graph& g) {
                           return std::to_string(tree_broadcast_time(TreeView(g), 0).time);
                         }});
  }
  for (Vertex n = 8; n <= std::min<Vertex>(max_n, kExactMaxVertices); n += 2) {
    workloads.push_back({"exact", random_connected_graph(n, 0.3, rng), [](const Graph& g) {
                           return std::to_string(broadcast_time_exact(g, 0).time);
                         }});
  }
  for (Vertex n : {10, 20, 40}) {
    Graph g = random_bounded_cyclomatic_graph(n, 3, rng);
    workloads.push_back({"cyclomatic", g, [](const Graph& h) {
                           return solve_cyclomatic(Instance{h, 0, bfs_tree_time(h) - 1}) ? "yes" : "no";
                         }});
  }
  for (Vertex n : {10, 20, 40}) {
    workloads.push_back({"vertexcover", random_bounded_cover_graph(n, 2, 0.6, rng), [](const Graph& g) {
                           Round t = g.num_vertices() / 2;
                           return solve_vertex_cover_param(Instance{g, 0, t}, 2) ? "yes" : "no";
                         }});
  }
  for (Vertex n : {50, 200, 1000}) {
    workloads.push_back({"kernel", random_connected_graph(n, 4.0 / n, rng), [](const Graph& g) {
                           KernelOutcome out = kernelize(KernelInstance::make(g, 0, 5));
                           return std::string(to_string(out.status)) + ":" + std::to_string(out.instance.graph.num_vertices());
                         }});
  }

  std::vector<BenchRecord> records(workloads.size());
  parallel_for(workloads.size(), [&](std::size_t i) {
    const Workload& w = workloads[i];
    BenchRecord& rec = records[i];
    rec.workload = w.name;
    rec.n = w.graph.num_vertices();
    rec.m = w.graph.num_edges();
    double best = 0.0;
    for (std::int32_t r = 0; r < std::max(repeats, 1); ++r) {
      auto start = std::chrono::steady_clock::now();
      rec.result = w.run(w.graph);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      best = r == 0 ? ms : std::min(best, ms);
    }
    rec.millis = best;
  });
  return records;
}

std::string render_bench(const std::vector<BenchRecord>& records, Format format) {
  if (format == Format::kJson) {
    Json rows = Json::array();
    for (const BenchRecord& r : records) {
      rows.push_back({{"workload", r.workload}, {"n", r.n}, {"m", r.m}, {"result", r.result}, {"millis", r.millis}});
    }
    return rows.dump() + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(12) << "workload" << std::right << std::setw(8) << "n" << std::setw(9) << "m"
      << std::setw(14) << "result" << std::setw(12) << "millis" << "\n";
  for (const BenchRecord& r : records) {
    out << std::left << std::setw(12) << r.workload << std::right << std::setw(8) << r.n << std::setw(9) << r.m
        << std::setw(14) << r.result << std::setw(12) << std::fixed << std::setprecision(3) << r.millis << "\n";
  }
  return out.str();
}

}  // namespace broadcast::cli
