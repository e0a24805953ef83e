#include "output.hpp"

#include <sstream>

namespace broadcast::cli {

Json protocol_to_json(const BroadcastProtocol& p) {
  Json children = Json::array();
  for (const auto& c : p.children_order) children.push_back(c);
  return Json{{"parent", p.parent}, {"children_order", children}};
}

std::string protocol_to_dot(const Graph& g, const BroadcastProtocol& p) {
  RoundSchedule schedule = simulate(g, p);
  std::ostringstream out;
  out << "digraph broadcast {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Round r = schedule.informed_round[static_cast<std::size_t>(v)];
    out << "  " << v << " [label=\"" << v << " @" << r << "\"" << (v == p.root ? ", shape=doublecircle" : "") << "];\n";
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex c : p.children_order[static_cast<std::size_t>(v)]) {
      out << "  " << v << " -> " << c << " [label=\"" << schedule.informed_round[static_cast<std::size_t>(c)] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json solve_to_json(const Graph& g, Vertex source, const SolveOutcome& outcome, std::optional<double> millis) {
  Json doc;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["source"] = source;
  doc["budget"] = outcome.budget;
  doc["decision"] = outcome.decision;
  doc["b"] = outcome.b ? Json(*outcome.b) : Json(nullptr);
  doc["witness"] = outcome.witness ? protocol_to_json(*outcome.witness) : Json(nullptr);
  doc["algorithm"] = std::string(algorithm_name(outcome.algorithm));
  doc["millis"] = millis ? Json(*millis) : Json(nullptr);
  return doc;
}

std::string render_solve(const Graph& g, Vertex source, const SolveOutcome& outcome, Format format,
                         std::optional<double> millis) {
  switch (format) {
    case Format::kJson:
      return solve_to_json(g, source, outcome, millis).dump() + "\n";
    case Format::kDot:
      if (!outcome.witness) return "digraph broadcast {\n}\n";
      return protocol_to_dot(g, *outcome.witness);
    case Format::kText:
      break;
  }
  std::ostringstream out;
  out << "decision: " << (outcome.decision ? "yes" : "no") << "\n";
  out << "budget: " << outcome.budget << "\n";
  out << "b: " << (outcome.b ? std::to_string(*outcome.b) : "unknown") << "\n";
  out << "algorithm: " << algorithm_name(outcome.algorithm) << "\n";
  if (outcome.witness) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto& children = outcome.witness->children_order[static_cast<std::size_t>(v)];
      if (children.empty()) continue;
      out << "C(" << v << "):";
      for (Vertex c : children) out << ' ' << c;
      out << "\n";
    }
  }
  return out.str();
}

std::string_view to_string(KernelStatus status) noexcept {
  switch (status) {
    case KernelStatus::kReduced: return "reduced";
    case KernelStatus::kYes: return "yes";
    case KernelStatus::kNo: return "no";
  }
  return "unknown";
}

Json kernel_step_to_json(const KernelStep& step) {
  return Json{{"rule", step.rule}, {"target", step.target}, {"n_before", step.n_before}, {"n_after", step.n_after}};
}

std::string trace_to_json_lines(const std::vector<KernelStep>& trace) {
  std::string out;
  for (const KernelStep& step : trace) out += kernel_step_to_json(step).dump() + "\n";
  return out;
}

std::string render_kernel(const KernelOutcome& outcome, Format format) {
  const KernelInstance& ki = outcome.instance;
  if (format == Format::kJson) {
    Json edges = Json::array();
    for (const Edge& e : ki.graph.edges()) edges.push_back({e.first, e.second});
    Json originals = Json::array();
    for (Vertex v : ki.original_ids) originals.push_back(v == kNoVertex ? Json(nullptr) : Json(v));
    Json trace = Json::array();
    for (const KernelStep& step : outcome.trace) trace.push_back(kernel_step_to_json(step));
    Json doc{{"status", std::string(to_string(outcome.status))},
             {"n", ki.graph.num_vertices()},
             {"m", ki.graph.num_edges()},
             {"source", ki.source},
             {"k", ki.k},
             {"budget", ki.budget()},
             {"edges", edges},
             {"original_ids", originals},
             {"trace", trace}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "# status: " << to_string(outcome.status) << "\n";
  out << "# source: " << ki.source << "\n";
  out << "# k: " << ki.k << "\n";
  std::istringstream trace(trace_to_json_lines(outcome.trace));
  for (std::string line; std::getline(trace, line);) out << "# " << line << "\n";
  out << format_graph(ki.graph);
  return out.str();
}

}  // namespace broadcast::cli
