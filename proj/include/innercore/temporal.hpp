#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "innercore/address.hpp"
#include "innercore/date.hpp"

namespace innercore {

// One day's core membership. Members sorted ascending.
struct DayCore {
  Date day;
  std::vector<NodeId> members;
};

enum class Level : std::uint8_t { Absent, Low, Mid, High };
enum class Pattern : std::uint8_t { Neutral, Hope, Despair, Uncertainty, Faith };

std::string_view level_name(Level l);
std::string_view pattern_name(Pattern p);

struct SeriesParams {
  int history = 1;               // i: days of membership history for expansion/decay
  int window = 7;                // w: trailing days feeding the median
  double tau = 0.25;             // relative band around the median
  int lag = 7;                   // max days between an E spike and a D spike
  double zero_median_high = 5.0; // absolute High threshold when the median is 0
};

struct SeriesRecord {
  Date day;
  std::uint64_t inner_size = 0;
  std::optional<std::uint64_t> expansion;  // absent on the first `history` days
  std::optional<std::uint64_t> decay;
  Level expansion_level = Level::Absent;
  Level decay_level = Level::Absent;
  Pattern pattern = Pattern::Neutral;
  bool anomaly = false;  // day participates in some (E spike, D spike) pair
};

struct ExpansionDecaySeries {
  std::vector<SeriesRecord> records;             // one per day, consecutive days
  std::vector<std::pair<Date, Date>> anomalies;  // (expansion day, decay day)
  SeriesParams params;
};

// |cores[t] \ union(cores[t-1..t-history])|: members new against the recent past.
// nullopt when fewer than `history` prior days exist.
std::optional<std::uint64_t> expansion(const std::vector<DayCore>& cores, std::size_t t,
                                       int history);
// |union(cores[t-1..t-history]) \ cores[t]|: recent members gone today.
std::optional<std::uint64_t> decay(const std::vector<DayCore>& cores, std::size_t t,
                                   int history);

// Full series: sizes, expansion/decay, pattern labels, anomaly candidates.
// `cores` must hold one record per consecutive calendar day (fill gaps with
// empty cores before calling).
ExpansionDecaySeries build_series(const std::vector<DayCore>& cores, const SeriesParams& params);

// Grades each day's E and D against the median of the `window` previous present
// values (High above (1+tau)*median, Low below (1-tau)*median, Mid otherwise;
// zero median: High iff value >= zero_median_high). Quadrants map to patterns:
// (High E, Low D) Hope, (Low, High) Despair, (High, High) Uncertainty,
// (Low, Low) Faith; anything Mid or ungradeable is Neutral.
void classify_patterns(ExpansionDecaySeries& series);

// Pairs every High-E day with every High-D day that follows within `lag` days,
// and flags the participating days.
void anomaly_candidates(ExpansionDecaySeries& series);

}  // namespace innercore
