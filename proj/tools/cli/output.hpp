#pragma once

#include <optional>
#include <string>

#include "broadcast/kernel.hpp"
#include "broadcast/protocol.hpp"
#include "json.hpp"
#include "run_config.hpp"
#include "solve.hpp"

namespace broadcast::cli {

using Json = nlohmann::ordered_json;

Json protocol_to_json(const BroadcastProtocol& p);
/// Witness tree with each edge labelled by the round in which the child is informed.
std::string protocol_to_dot(const Graph& g, const BroadcastProtocol& p);

/// {"n", "m", "source", "budget", "decision", "b", "witness", "algorithm", "millis"}.
Json solve_to_json(const Graph& g, Vertex source, const SolveOutcome& outcome, std::optional<double> millis);
std::string render_solve(const Graph& g, Vertex source, const SolveOutcome& outcome, Format format,
                         std::optional<double> millis);

std::string_view to_string(KernelStatus status) noexcept;
Json kernel_step_to_json(const KernelStep& step);
/// One JSON object per line.
std::string trace_to_json_lines(const std::vector<KernelStep>& trace);
/// Text output is itself a valid graph file: metadata and trace lines are '#' comments.
std::string render_kernel(const KernelOutcome& outcome, Format format);

}  // namespace broadcast::cli
