#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "innercore/synthetic.hpp"

namespace innercore {

struct BenchConfig {
  SyntheticSpec spec;
  std::vector<std::string> algos{"innercore", "alphacore", "kcore"};
  double epsilon = 0.1;       // innercore threshold
  double alpha_start = 1.0;   // stepwise decomposition grid
  double alpha_step = 0.1;
  int repetitions = 3;
};

struct AlgoTiming {
  std::string name;
  std::vector<double> seconds;  // one per repetition, decomposition only
  double mean = 0.0, min = 0.0, max = 0.0;
};

struct BenchReport {
  BenchConfig config;
  std::uint64_t graph_nodes = 0;
  std::uint64_t graph_edges = 0;
  std::vector<AlgoTiming> timings;
  std::uint32_t innercore_iterations = 0;
  std::uint64_t innercore_members = 0;
  // "pass"/"mismatch" when both depth algorithms ran, else "n/a": does the
  // innermost stepwise level equal the single-threshold member set?
  std::string innermost_match = "n/a";
};

// Generates the graph once (generation and I/O excluded from timings), then times
// each requested decomposition `repetitions` times.
BenchReport run_bench(const BenchConfig& config);

std::string bench_report_json(const BenchReport& report);
std::string bench_report_csv(const BenchReport& report);

}  // namespace innercore
