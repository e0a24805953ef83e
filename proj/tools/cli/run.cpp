#include "run.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "bench.hpp"
#include "broadcast/oracle.hpp"
#include "broadcast/vertex_cover.hpp"
#include "output.hpp"
#include "solve.hpp"
#include "verify.hpp"

namespace broadcast::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RunOutput failure(const std::string& message) { return {kExitError, "", "error: " + message + "\n"}; }

RunOutput run_solve(const RunConfig& config, const Graph& g) {
  if (config.source < 0 || config.source >= g.num_vertices()) throw UsageError("source out of range");
  auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome = solve(g, config.source, config.budget, config.algorithm, config.k);
  std::optional<double> millis;
  if (config.timing) millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (outcome.witness) {
    if (Validation v = validate(g, config.source, outcome.budget, *outcome.witness); !v) {
      throw std::logic_error("solver produced an invalid witness: " + v.detail);
    }
  }
  return {outcome.decision ? kExitYes : kExitNo, render_solve(g, config.source, outcome, config.format, millis), ""};
}

RunOutput run_kernelize(const RunConfig& config, const Graph& g) {
  if (config.budget.has_value() == config.k.has_value()) throw UsageError("kernelize needs exactly one of --k or --budget");
  if (config.source < 0 || config.source >= g.num_vertices()) throw UsageError("source out of range");
  const std::int64_t k = config.k ? *config.k : g.num_vertices() - *config.budget;
  if (k < 0) throw UsageError("k must be nonnegative");
  KernelOutcome out = kernelize(KernelInstance::make(g, config.source, k));
  if (config.format == Format::kDot) throw UsageError("kernelize supports text and json output");
  return {out.status == KernelStatus::kNo ? kExitNo : kExitYes, render_kernel(out, config.format), ""};
}

RunOutput run_verify(const RunConfig& config) {
  if (config.max_n < 1 || config.max_n > kOracleMaxVertices) throw UsageError("verify supports --max-n in 1..14");
  if (config.instances < 0) throw UsageError("--instances must be nonnegative");
  VerifyOptions options;
  options.seed = config.seed;
  options.instances = config.instances;
  options.max_n = config.max_n;
  VerifyReport report = verify_suite(options);
  if (config.format == Format::kJson) {
    Json doc{{"seed", config.seed},
             {"instances", report.instances},
             {"comparisons", report.comparisons},
             {"disagreements", report.disagreements},
             {"ok", report.ok()},
             {"report", report.text}};
    return {report.ok() ? kExitYes : kExitNo, doc.dump() + "\n", ""};
  }
  return {report.ok() ? kExitYes : kExitNo, report.text, ""};
}

RunOutput run_bench(const RunConfig& config) {
  if (config.max_n < 1) throw UsageError("--max-n must be positive");
  return {kExitYes, render_bench(bench_suite(config.seed, config.max_n, 3), config.format), ""};
}

RunOutput dispatch(const RunConfig& config, const Graph* g) {
  switch (config.command) {
    case Command::kSolve: return run_solve(config, *g);
    case Command::kKernelize: return run_kernelize(config, *g);
    case Command::kVerify: return run_verify(config);
    case Command::kBench: return run_bench(config);
  }
  throw std::logic_error("unknown command");
}

bool needs_graph(Command c) { return c == Command::kSolve || c == Command::kKernelize; }

RunOutput guarded(const std::function<RunOutput()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return failure(std::string("parse error (") + std::string(to_string(e.kind())) + "): " + e.what());
  } catch (const CapacityError& e) {
    return failure(std::string("capacity exceeded: ") + e.what());
  } catch (const ParameterError& e) {
    return failure(std::string("parameter: ") + e.what());
  } catch (const std::exception& e) {
    return failure(e.what());
  }
}

}  // namespace

RunOutput run_with_input(const RunConfig& config, std::string_view graph_text) {
  return guarded([&] {
    if (!needs_graph(config.command)) return dispatch(config, nullptr);
    Graph g = parse_graph(graph_text);
    return dispatch(config, &g);
  });
}

RunOutput run(const RunConfig& config) {
  return guarded([&] {
    if (!needs_graph(config.command)) return dispatch(config, nullptr);
    if (!config.generate.empty()) {
      if (!config.input.empty()) throw UsageError("--input and --generate are exclusive");
      Graph g = generate_family(config.generate, config.seed);
      return dispatch(config, &g);
    }
    if (config.input.empty()) throw UsageError("an --input file or --generate family is required");
    std::string text;
    if (config.input == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      std::ifstream file(config.input, std::ios::binary);
      if (!file) throw UsageError("cannot read input file " + config.input);
      text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    Graph g = parse_graph(text);
    return dispatch(config, &g);
  });
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kAuto, Algorithm::kExact, Algorithm::kTree, Algorithm::kCyclomatic,
                      Algorithm::kVertexCover, Algorithm::kOracle}) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "dot") return Format::kDot;
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kExact: return "exact";
    case Algorithm::kTree: return "tree";
    case Algorithm::kCyclomatic: return "cyclomatic";
    case Algorithm::kVertexCover: return "vertexcover";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

}  // namespace broadcast::cli
