#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "broadcast/graph.hpp"

namespace broadcast::cli {

enum class Command { kSolve, kKernelize, kVerify, kBench };
enum class Algorithm { kAuto, kExact, kTree, kCyclomatic, kVertexCover, kOracle };
enum class Format { kText, kJson, kDot };

struct RunConfig {
  Command command = Command::kSolve;
  Algorithm algorithm = Algorithm::kAuto;
  std::string input;      // path, "-" for stdin; empty when `generate` is used
  std::string generate;   // built-in family such as "cycle:5"
  Vertex source = 0;
  std::optional<std::int64_t> budget;
  std::optional<std::int64_t> k;
  Format format = Format::kText;
  std::uint64_t seed = 1;
  std::int32_t instances = 300;   // verify/bench corpus size
  Vertex max_n = 10;              // verify/bench largest instance
  bool timing = true;             // false emits "millis": null for byte-stable output
};

struct RunOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 yes / kernel produced / verification passed, 1 no, 2 usage or input error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<Format> parse_format(std::string_view name);
std::string_view algorithm_name(Algorithm a) noexcept;

}  // namespace broadcast::cli
