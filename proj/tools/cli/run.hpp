#pragma once

#include <string_view>

#include "run_config.hpp"

namespace broadcast::cli {

/// Executes one command. The graph comes from `config.generate`, else from `config.input`.
RunOutput run(const RunConfig& config);
/// Same, with the graph document supplied directly.
RunOutput run_with_input(const RunConfig& config, std::string_view graph_text);

}  // namespace broadcast::cli
