#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "innercore/graph.hpp"

namespace innercore {

// Column names in the transfers CSV header.
struct CsvSchema {
  std::string from = "from_address";
  std::string to = "to_address";
  std::string value = "value";
  std::string timestamp = "timestamp";
  std::string token;  // optional; enables per-token decimals
};

struct IngestOptions {
  CsvSchema schema;
  int tz_offset_minutes = 0;                    // day buckets are [00:00, 24:00) local
  int default_decimals = 18;                    // weight = value / 10^decimals
  std::map<std::string, int> token_decimals;    // normalized token address -> decimals
  bool keep_zero_weight = false;
  double malformed_tolerance = 0.01;            // max tolerated malformed-row fraction
};

struct DayStat {
  Date day;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
};

struct IngestReport {
  std::uint64_t rows_total = 0;          // data rows seen
  std::uint64_t rows_ok = 0;
  std::uint64_t rows_zero_dropped = 0;
  std::uint64_t rows_malformed = 0;
  std::uint64_t precision_notes = 0;     // raw values above 2^53 subunits
  std::uint64_t first_malformed_line = 0;
  std::string first_malformed_reason;
  std::vector<DayStat> days;
};

// Parses a header-first transfers CSV into day-bucketed snapshots. Malformed rows
// are counted and skipped; exceeding the tolerance fraction raises InputError.
// Zero-weight rows are dropped (counted) unless keep_zero_weight.
TemporalGraph ingest_csv(const std::string& path, const IngestOptions& options,
                         IngestReport* report = nullptr);

// Header-first CSV with `address` and `label` columns.
LabelSet load_labels_csv(const std::string& path);

}  // namespace innercore
