// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "broadcast/cyclomatic.hpp"
#include "broadcast/exact_dp.hpp"
#include "broadcast/generators.hpp"
#include "broadcast/kernel.hpp"
#include "broadcast/oracle.hpp"
#include "broadcast/tree_broadcast.hpp"
#include "broadcast/vertex_cover.hpp"
#include "reference.hpp"

namespace {

using namespace broadcast;
using Clock = std::chrono::steady_clock;

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Round ceil_log2(Vertex n) {
  Round t = 0;
  while ((Vertex{1} << t) < n) ++t;
  return t;
}

struct Result {
  bool pass = true;
  std::string detail;
};

// Witness and schedule checks shared by criteria 5 and 7.
struct Tally {
  std::int64_t witnesses = 0;
  std::int64_t invalid_witnesses = 0;
  std::int64_t schedules = 0;
  std::int64_t doubling_violations = 0;
  std::int64_t independent_checks = 0;
  std::int64_t independent_violations = 0;
};

Tally tally;

void check_schedule(const Graph& g, const BroadcastProtocol& p, const std::vector<Vertex>* cover) {
  RoundSchedule sched = simulate(g, p);
  ++tally.schedules;
  for (Round r = 0; r <= sched.makespan; ++r) {
    if (sched.informed_by(r) > (std::int64_t{1} << std::min<Round>(r, 62))) ++tally.doubling_violations;
  }
  if (!cover) return;
  ++tally.independent_checks;
  for (Round r = 1; r <= sched.makespan; ++r) {
    std::int64_t informed = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (std::binary_search(cover->begin(), cover->end(), v)) continue;
      const Round at = sched.informed_round[idx(v)];
      if (at != kNotInformed && at <= r) ++informed;
    }
    if (informed > r * static_cast<std::int64_t>(cover->size())) {
      ++tally.independent_violations;
      break;
    }
  }
}

void check_witness(const Graph& g, Vertex s, Round budget, const std::optional<BroadcastProtocol>& w, bool decision,
                   const std::vector<Vertex>* cover = nullptr) {
  if (!decision) return;
  ++tally.witnesses;
  if (!w || !validate(g, s, budget, *w)) {
    ++tally.invalid_witnesses;
    return;
  }
  check_schedule(g, *w, cover);
}

// Minimum budget accepted by a decision procedure.
Round minimum_time(Vertex n, const std::function<bool(Round)>& decide) {
  for (Round t = 0; t < n; ++t) {
    if (decide(t)) return t;
  }
  return n;
}

Result criterion1() {
  auto start = Clock::now();
  int mismatches = 0;
  int checks = 0;
  auto expect = [&](Round got, Round want) {
    ++checks;
    if (got != want) ++mismatches;
  };
  for (Vertex n = 1; n <= 10; ++n) {
    const Graph kn = complete_graph(n);
    const Graph pn = path_graph(n);
    const auto kn_cover = std::max<std::int32_t>(0, n - 1);
    const auto pn_cover = static_cast<std::int32_t>(n / 2);
    for (Vertex s = 0; s < n; ++s) {
      expect(brute_force_broadcast_time(kn, s), ceil_log2(n));
      expect(broadcast_time_exact(kn, s).time, ceil_log2(n));
      expect(minimum_time(n, [&](Round t) {
               CyclomaticResult r = solve_cyclomatic_certified(Instance::make(kn, s, t));
               check_witness(kn, s, t, r.witness, r.decision);
               return r.decision;
             }),
             ceil_log2(n));
      expect(minimum_time(n, [&](Round t) {
               VertexCoverResult r = solve_vertex_cover_certified(Instance::make(kn, s, t), kn_cover);
               check_witness(kn, s, t, r.witness, r.decision, &r.cover);
               return r.decision;
             }),
             ceil_log2(n));
    }
    expect(brute_force_broadcast_time(pn, 0), n - 1);
    expect(broadcast_time_exact(pn, 0).time, n - 1);
    expect(minimum_time(n, [&](Round t) {
             CyclomaticResult r = solve_cyclomatic_certified(Instance::make(pn, 0, t));
             check_witness(pn, 0, t, r.witness, r.decision);
             return r.decision;
           }),
           n - 1);
    expect(minimum_time(n, [&](Round t) {
             VertexCoverResult r = solve_vertex_cover_certified(Instance::make(pn, 0, t), pn_cover);
             check_witness(pn, 0, t, r.witness, r.decision, &r.cover);
             return r.decision;
           }),
           n - 1);
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs < 10.0,
          std::to_string(checks) + " closed-form checks, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(secs) + " s (limit 10 s)"};
}

Result criterion2() {
  auto start = Clock::now();
  std::int64_t pairs = 0;
  std::int64_t mismatches = 0;
  auto compare = [&](const Graph& g, Vertex s) {
    ++pairs;
    ExactResult r = broadcast_time_exact(g, s);
    if (r.time != brute_force_broadcast_time(g, s)) ++mismatches;
    std::vector<Vertex> cover = reference::min_vertex_cover_brute(g);
    check_witness(g, s, r.time, r.protocol, true, &cover);
  };
  std::int64_t exhaustive = 0;
  for (Vertex n = 1; n <= 6; ++n) {
    for (const Graph& g : reference::all_connected_graphs(n)) {
      ++exhaustive;
      for (Vertex s = 0; s < n; ++s) compare(g, s);
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Vertex n = 7 + i % 5;
    Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
    compare(g, static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs < 300.0,
          std::to_string(exhaustive) + " connected graphs with n <= 6 (all sources) + 500 random, " +
              std::to_string(pairs) + " comparisons, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(secs) + " s"};
}

Result criterion3() {
  auto start = Clock::now();
  std::mt19937_64 rng(77);
  std::int64_t cyc_checks = 0;
  std::int64_t cyc_bad = 0;
  for (int i = 0; i < 300; ++i) {
    const Vertex n = 2 + i % 9;
    Graph g = random_bounded_cyclomatic_graph(n, 1 + i % 3, rng);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    for (Round t = 0; t < n; ++t) {
      Instance inst = Instance::make(g, s, t);
      CyclomaticResult r = solve_cyclomatic_certified(inst);
      ++cyc_checks;
      if (r.decision != decide_exact(inst)) ++cyc_bad;
      check_witness(g, s, t, r.witness, r.decision);
    }
  }
  const double cyc_secs = seconds_since(start);
  auto vc_start = Clock::now();
  std::int64_t vc_checks = 0;
  std::int64_t vc_bad = 0;
  for (int i = 0; i < 300; ++i) {
    const Vertex n = 2 + i % 11;
    Graph g = random_bounded_cover_graph(n, std::min<Vertex>(n, 1 + i % 3), std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    const auto k = static_cast<std::int32_t>(reference::min_vertex_cover_brute(g).size());
    for (Round t = 0; t < n; ++t) {
      Instance inst = Instance::make(g, s, t);
      VertexCoverResult r = solve_vertex_cover_certified(inst, k);
      ++vc_checks;
      if (r.decision != decide_exact(inst)) ++vc_bad;
      check_witness(g, s, t, r.witness, r.decision, &r.cover);
    }
  }
  const double vc_secs = seconds_since(vc_start);
  return {cyc_bad == 0 && vc_bad == 0 && cyc_secs < 600.0 && vc_secs < 600.0,
          "cyclomatic " + std::to_string(cyc_checks) + " checks / " + std::to_string(cyc_bad) + " disagreements (" +
              std::to_string(cyc_secs) + " s); vertex cover " + std::to_string(vc_checks) + " checks / " +
              std::to_string(vc_bad) + " disagreements (" + std::to_string(vc_secs) + " s)"};
}

Result criterion4() {
  auto start = Clock::now();
  std::mt19937_64 rng(4242);
  std::int64_t checks = 0;
  std::int64_t wrong = 0;
  std::int64_t oversize = 0;
  std::int64_t reduced = 0;
  for (int i = 0; i < 500; ++i) {
    const Vertex n = 1 + i % 12;
    Graph g = i % 3 == 0 ? random_tree(n, rng) : random_connected_graph(n, std::uniform_real_distribution<double>(0.05, 0.6)(rng), rng);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      ++checks;
      const bool expected = n - k >= 0 && decide_exact(Instance::make(g, s, n - k));
      KernelOutcome out = kernelize(KernelInstance::make(g, s, k));
      bool got = out.status == KernelStatus::kYes;
      if (out.status == KernelStatus::kReduced) {
        ++reduced;
        const KernelInstance& ki = out.instance;
        got = ki.budget() >= 0 && decide_exact(Instance::make(ki.graph, ki.source, ki.budget()));
        if (ki.graph.num_vertices() > kernel_size_bound(ki.k)) ++oversize;
      }
      if (got != expected) ++wrong;
    }
  }
  const double secs = seconds_since(start);
  return {wrong == 0 && oversize == 0 && secs < 600.0,
          std::to_string(checks) + " (instance, k) pairs, " + std::to_string(reduced) + " reduced, " +
              std::to_string(wrong) + " answer changes, " + std::to_string(oversize) + " size-bound violations, " +
              std::to_string(secs) + " s"};
}

Result criterion5() {
  return {tally.witnesses > 0 && tally.invalid_witnesses == 0 && tally.doubling_violations == 0,
          std::to_string(tally.witnesses) + " witnesses, " + std::to_string(tally.invalid_witnesses) + " invalid; " +
              std::to_string(tally.schedules) + " schedules, " + std::to_string(tally.doubling_violations) +
              " doubling violations"};
}

Result criterion6() {
  auto start = Clock::now();
  std::mt19937_64 rng(606);
  std::int64_t checks = 0;
  std::int64_t wrong = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vertex n = 2 + i % 7;
    Graph g = random_tree(n, rng);
    TreeView t(g);
    for (Vertex s = 0; s < n; ++s) {
      ++checks;
      TreeBroadcast tb = tree_broadcast_time(t, s);
      if (tb.time != reference::tree_time_by_orderings(g, s) || !validate(g, s, tb.time, tb.protocol)) ++wrong;
    }
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (t.is_leaf(v)) leaves.push_back(v);
    }
    for (Vertex x : leaves) {
      // best[y][h]: earliest round of y over protocols from x with makespan <= h.
      std::vector<std::vector<ExtendedRounds>> best(idx(n), std::vector<ExtendedRounds>(idx(n) + 1, ExtendedRounds::infinity()));
      reference::for_each_tree_protocol(g, x, [&](const BroadcastProtocol& p) {
        RoundSchedule sched = simulate(g, p);
        for (Vertex y = 0; y < n; ++y) {
          for (Round h = sched.makespan; h <= n; ++h) {
            auto& cell = best[idx(y)][static_cast<std::size_t>(h)];
            cell = std::min(cell, ExtendedRounds(sched.informed_round[idx(y)]));
          }
        }
      });
      for (Vertex y : leaves) {
        if (y == x) continue;
        for (Round h = 0; h <= n; ++h) {
          checks += 2;
          if (constrained_time(t, x, y, h) != best[idx(y)][static_cast<std::size_t>(h)]) ++wrong;
          if (two_source_delayed(t, x, y, h) != reference::two_source_delayed_brute(g, x, y, h)) ++wrong;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  return {wrong == 0 && secs < 300.0,
          "1000 random Pruefer trees, " + std::to_string(checks) + " checks, " + std::to_string(wrong) + " mismatches, " +
              std::to_string(secs) + " s"};
}

Result criterion7() {
  auto start = Clock::now();
  std::int64_t systems = 0;
  std::int64_t wrong = 0;
  for (std::int32_t senders = 1; senders <= 6; ++senders) {
    for (std::int32_t classes = 1; senders * classes <= 6; ++classes) {
      const std::int32_t cells = senders * classes;
      std::int64_t demand_vectors = 1;
      for (std::int32_t c = 0; c < classes; ++c) demand_vectors *= 5;
      for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
        TailSystem sys;
        sys.senders = senders;
        sys.classes = classes;
        for (std::int32_t c = 0; c < cells; ++c) sys.allowed.push_back(static_cast<char>(mask >> c & 1));
        for (std::int64_t code = 0; code < demand_vectors; ++code) {
          sys.demand.clear();
          for (std::int64_t rest = code, c = 0; c < classes; ++c, rest /= 5) sys.demand.push_back(rest % 5);
          for (std::int64_t cap = 0; cap <= 4; ++cap) {
            sys.capacity = cap;
            ++systems;
            if (tail_feasible(sys) != reference::tail_feasible_brute(sys)) ++wrong;
          }
        }
      }
    }
  }
  const double secs = seconds_since(start);
  return {wrong == 0 && tally.independent_checks > 0 && tally.independent_violations == 0,
          std::to_string(tally.independent_checks) + " schedules checked for the independent-set growth bound, " +
              std::to_string(tally.independent_violations) + " violations; " + std::to_string(systems) +
              " tail systems vs enumeration, " + std::to_string(wrong) + " mismatches, " + std::to_string(secs) + " s"};
}

Result criterion8() {
  std::mt19937_64 rng(808);
  Graph tree = random_tree(100'000, rng);
  auto start = Clock::now();
  TreeBroadcast tb = tree_broadcast_time(TreeView(tree), 0);
  const double tree_secs = seconds_since(start);
  Graph g = random_connected_graph(18, 0.25, rng);
  start = Clock::now();
  ExactResult r = broadcast_time_exact(g, 0);
  const double exact_secs = seconds_since(start);
  const bool ok = tree_secs < 1.0 && exact_secs < 60.0 && validate(g, 0, r.time, r.protocol) &&
                  validate(tree, 0, tb.time, tb.protocol);
  return {ok, "tree n=100000: " + std::to_string(tree_secs) + " s (limit 1 s); exact n=18 m=" +
                  std::to_string(g.num_edges()) + ": " + std::to_string(exact_secs) + " s (limit 60 s), b=" +
                  std::to_string(r.time)};
}

}  // namespace

int main() {
  const std::pair<const char*, Result (*)()> criteria[] = {
      {"closed-form agreement", &criterion1},    {"oracle equivalence", &criterion2},
      {"fpt agreement", &criterion3},            {"kernel soundness and size", &criterion4},
      {"witness validity", &criterion5},         {"tree subroutine oracles", &criterion6},
      {"structural properties", &criterion7},   {"performance floor", &criterion8},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failures;
    std::printf("criterion %d (%s): %s - %s\n", number, name, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", number - failures, number);
  return failures == 0 ? 0 : 1;
}
