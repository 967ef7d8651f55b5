#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "innercore/ingest.hpp"

namespace innercore {

// Everything the CLI can set. Defaults here are the effective defaults; a JSON
// config file (or the file named by INNERCORE_CONFIG) is applied on top, then
// command-line flags override individual fields.
struct RunConfig {
  // inputs
  std::string input;        // transfers CSV
  std::string cache;        // binary snapshot cache (read when present; written by ingest)
  std::string labels;       // address,label CSV
  std::string out_dir = "innercore_out";

  // ingestion
  CsvSchema schema;
  int tz_offset_minutes = 0;
  int decimals = 18;
  std::map<std::string, int> token_decimals;
  bool keep_zero_weight = false;
  double malformed_tolerance = 0.01;

  // decomposition
  std::vector<std::string> features{"deg_in", "deg_out", "S_in", "S_out"};
  double epsilon = 0.1;
  double alpha_start = 1.0;
  double alpha_step = 0.1;

  // temporal analytics
  int history = 1;
  int window = 7;
  double tau = 0.25;
  int lag = 7;
  bool normalized = false;

  // motifs + ranking
  std::string motif_days = "anomaly";  // or "all"
  bool combine_m5 = false;

  // bench
  std::uint32_t bench_nodes = 50000;
  std::uint64_t bench_edges = 250000;
  double bench_exponent = 1.0;
  double bench_wmu = 0.0;
  double bench_wsigma = 2.0;
  int bench_reps = 3;
  std::vector<std::string> bench_algos{"innercore", "alphacore", "kcore"};
  std::uint64_t seed = 1;

  // execution (excluded from the provenance echo so reruns stay byte-identical)
  int threads = 1;
  bool no_timestamp = false;
  bool json_mirror = false;  // also write .json next to each .csv
};

// JSON round-trip for config files. Unknown keys are rejected.
void config_apply_json_text(RunConfig& config, const std::string& json_text);
std::string config_json(const RunConfig& config);
// Echo used in output headers: config minus execution-only knobs.
std::string provenance_json(const RunConfig& config);
// Loads the file at path (or $INNERCORE_CONFIG when path is empty) if it exists.
void load_config_file(RunConfig& config, const std::string& path);

// Subcommand drivers. Each validates inputs, computes everything, then writes
// all outputs atomically at the end; errors abort with a stage-tagged message
// and leave no partial outputs behind.
void cmd_ingest(const RunConfig& config);
void cmd_innercore(const RunConfig& config);
void cmd_series(const RunConfig& config);
void cmd_patterns(const RunConfig& config);
void cmd_motifs(const RunConfig& config);
void cmd_rank(const RunConfig& config);
void cmd_pipeline(const RunConfig& config);
void cmd_bench(const RunConfig& config);

}  // namespace innercore
