#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli/run.hpp"

namespace {

using broadcast::cli::Algorithm;
using broadcast::cli::Command;
using broadcast::cli::Format;

void add_graph_options(CLI::App& sub, broadcast::cli::RunConfig& config) {
  sub.add_option("--input,-i", config.input, "Edge-list file, '-' for stdin");
  sub.add_option("--generate,-g", config.generate,
                 "Built-in family: path:N cycle:N complete:N star:L bipartite:AxB tree:N random:N[:P] "
                 "cyclomatic:N:K cover:N:C[:P]");
  sub.add_option("--source,-s", config.source, "Source vertex")->capture_default_str();
  sub.add_option("--seed", config.seed, "Seed for generated graphs")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  broadcast::cli::RunConfig config;
  CLI::App app{"Minimum broadcast time under the telephone model"};
  app.require_subcommand(1, 1);

  const std::map<std::string, Algorithm> algorithms{{"auto", Algorithm::kAuto},
                                                    {"exact", Algorithm::kExact},
                                                    {"tree", Algorithm::kTree},
                                                    {"cyclomatic", Algorithm::kCyclomatic},
                                                    {"vertexcover", Algorithm::kVertexCover},
                                                    {"oracle", Algorithm::kOracle}};
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"dot", Format::kDot}};
  std::int64_t budget = -1;
  std::int64_t k = -1;

  CLI::App* solve = app.add_subcommand("solve", "Decide b(G, s) <= t, or compute b(G, s) without --budget");
  add_graph_options(*solve, config);
  solve->add_option("--algorithm,-a", config.algorithm, "auto|exact|tree|cyclomatic|vertexcover|oracle")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case).description(""))
      ->type_name("NAME");
  solve->add_option("--budget,-t", budget, "Round budget t")->check(CLI::NonNegativeNumber);
  solve->add_option("--k,-k", k, "Vertex-cover parameter for the vertexcover solver")->check(CLI::NonNegativeNumber);
  solve->add_option("--format,-f", config.format, "text|json|dot")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");
  solve->add_flag("!--no-timing", config.timing, "Emit millis as null");

  CLI::App* kernelize = app.add_subcommand("kernelize", "Reduce (G, s, k) asking b(G, s) <= n - k");
  add_graph_options(*kernelize, config);
  kernelize->add_option("--k,-k", k, "Parameter k = n - t")->check(CLI::NonNegativeNumber);
  kernelize->add_option("--budget,-t", budget, "Round budget t, converted to k = n - t")->check(CLI::NonNegativeNumber);
  kernelize->add_option("--format,-f", config.format, "text|json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  CLI::App* verify = app.add_subcommand("verify", "Cross-check all solvers on a seeded random corpus");
  verify->add_option("--seed", config.seed, "Corpus seed")->capture_default_str();
  verify->add_option("--instances", config.instances, "Number of instances")->capture_default_str();
  verify->add_option("--max-n", config.max_n, "Largest instance size")->capture_default_str();
  verify->add_option("--format,-f", config.format, "text|json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  CLI::App* bench = app.add_subcommand("bench", "Time every solver on seeded instances");
  bench->add_option("--seed", config.seed, "Corpus seed")->capture_default_str();
  bench->add_option("--max-n", config.max_n, "Largest exact-solver instance")->capture_default_str();
  bench->add_option("--format,-f", config.format, "text|json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->type_name("FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : broadcast::cli::kExitError;
  }
  if (solve->parsed()) config.command = Command::kSolve;
  if (kernelize->parsed()) config.command = Command::kKernelize;
  if (verify->parsed()) config.command = Command::kVerify;
  if (bench->parsed()) config.command = Command::kBench;
  if (budget >= 0) config.budget = budget;
  if (k >= 0) config.k = k;

  broadcast::cli::RunOutput out = broadcast::cli::run(config);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
