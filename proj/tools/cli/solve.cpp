#include "solve.hpp"

#include <charconv>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "broadcast/cyclomatic.hpp"
#include "broadcast/exact_dp.hpp"
#include "broadcast/generators.hpp"
#include "broadcast/oracle.hpp"
#include "broadcast/tree_broadcast.hpp"
#include "broadcast/vertex_cover.hpp"

namespace broadcast::cli {

namespace {

Round lower_bound_time(Vertex n) {
  Round t = 0;
  while ((std::int64_t{1} << t) < n) ++t;
  return t;
}

std::int32_t cover_parameter(const Graph& g, std::optional<std::int64_t> k) {
  if (k) {
    if (*k < 0 || *k > g.num_vertices()) throw ParameterError("vertex cover parameter out of range");
    return static_cast<std::int32_t>(*k);
  }
  for (std::int32_t c = 0;; ++c) {
    if (min_vertex_cover_upto(g, c)) return c;
  }
}

// Decision-only solvers searched upward from the doubling bound.
template <typename Decide>
SolveOutcome minimise(Vertex n, Decide&& decide) {
  for (Round t = lower_bound_time(n);; ++t) {
    SolveOutcome out = decide(t);
    if (out.decision) {
      out.b = t;
      return out;
    }
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::int64_t to_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw std::invalid_argument("bad number in generator family: " + std::string(text));
  }
  return value;
}

double to_probability(std::string_view text) {
  double value = std::stod(std::string(text));
  if (value < 0.0 || value > 1.0) throw std::invalid_argument("probability must lie in [0, 1]");
  return value;
}

}  // namespace

Algorithm choose_algorithm(const Graph& g) {
  if (is_tree(g)) return Algorithm::kTree;
  if (g.cyclomatic_number() <= kAutoCyclomaticLimit) return Algorithm::kCyclomatic;
  if (min_vertex_cover_upto(g, kAutoCoverLimit)) return Algorithm::kVertexCover;
  return Algorithm::kExact;
}

SolveOutcome solve(const Graph& g, Vertex s, std::optional<std::int64_t> budget, Algorithm algorithm,
                   std::optional<std::int64_t> k) {
  if (algorithm == Algorithm::kAuto) algorithm = choose_algorithm(g);
  Instance::make(g, s, budget.value_or(0));
  const Vertex n = g.num_vertices();
  SolveOutcome out;
  out.algorithm = algorithm;

  auto with_time = [&](Round b, std::optional<BroadcastProtocol> witness) {
    out.b = b;
    out.budget = budget.value_or(b);
    out.decision = b <= out.budget;
    if (out.decision) out.witness = std::move(witness);
    return out;
  };

  switch (algorithm) {
    case Algorithm::kExact: {
      ExactResult r = broadcast_time_exact(g, s);
      return with_time(r.time, std::move(r.protocol));
    }
    case Algorithm::kTree: {
      TreeBroadcast r = tree_broadcast_time(TreeView(g), s);
      return with_time(r.time, std::move(r.protocol));
    }
    case Algorithm::kOracle:
      return with_time(brute_force_broadcast_time(g, s), std::nullopt);
    case Algorithm::kCyclomatic: {
      auto decide = [&](Round t) {
        CyclomaticResult r = solve_cyclomatic_certified(Instance{g, s, t});
        SolveOutcome o{Algorithm::kCyclomatic, t, r.decision, std::nullopt, std::move(r.witness)};
        return o;
      };
      return budget ? decide(*budget) : minimise(n, decide);
    }
    case Algorithm::kVertexCover: {
      const std::int32_t cover = cover_parameter(g, k);
      auto decide = [&](Round t) {
        VertexCoverResult r = solve_vertex_cover_certified(Instance{g, s, t}, cover);
        SolveOutcome o{Algorithm::kVertexCover, t, r.decision, std::nullopt, std::move(r.witness)};
        return o;
      };
      return budget ? decide(*budget) : minimise(n, decide);
    }
    case Algorithm::kAuto:
      break;
  }
  throw std::logic_error("unreachable algorithm");
}

Graph generate_family(std::string_view text, std::uint64_t seed) {
  std::vector<std::string_view> parts = split(text, ':');
  const std::string_view family = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("generator family is missing an argument: " + std::string(text));
    return to_int(parts[i]);
  };
  auto vertices = [&](std::size_t i) {
    std::int64_t n = arg(i);
    if (n < 1 || n > 10'000'000) throw std::invalid_argument("generator size out of range");
    return static_cast<Vertex>(n);
  };
  std::mt19937_64 rng(seed);
  if (family == "path") return path_graph(vertices(1));
  if (family == "cycle") return cycle_graph(vertices(1));
  if (family == "complete") return complete_graph(vertices(1));
  if (family == "star") return star_graph(static_cast<Vertex>(arg(1)));
  if (family == "tree") return random_tree(vertices(1), rng);
  if (family == "bipartite") {
    std::vector<std::string_view> sides = split(parts.size() > 1 ? parts[1] : "", 'x');
    if (sides.size() != 2) throw std::invalid_argument("bipartite family must be bipartite:AxB");
    return complete_bipartite_graph(static_cast<Vertex>(to_int(sides[0])), static_cast<Vertex>(to_int(sides[1])));
  }
  if (family == "random") return random_connected_graph(vertices(1), parts.size() > 2 ? to_probability(parts[2]) : 0.3, rng);
  if (family == "cyclomatic") return random_bounded_cyclomatic_graph(vertices(1), arg(2), rng);
  if (family == "cover") {
    return random_bounded_cover_graph(vertices(1), static_cast<Vertex>(arg(2)),
                                      parts.size() > 3 ? to_probability(parts[3]) : 0.5, rng);
  }
  throw std::invalid_argument("unknown graph family: " + std::string(family));
}

}  // namespace broadcast::cli
