#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "broadcast/graph.hpp"
#include "run_config.hpp"

namespace broadcast::cli {

struct BenchRecord {
  std::string workload;
  Vertex n = 0;
  std::size_t m = 0;
  std::string result;
  double millis = 0.0;
};

/// Times each solver on seeded instances up to `max_n` vertices (trees scale further).
std::vector<BenchRecord> bench_suite(std::uint64_t seed, Vertex max_n, std::int32_t repeats);
std::string render_bench(const std::vector<BenchRecord>& records, Format format);

}  // namespace broadcast::cli
