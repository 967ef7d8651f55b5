#include "innercore/temporal.hpp"

#include <algorithm>
#include <unordered_set>

#include "innercore/errors.hpp"

namespace innercore {

std::string_view level_name(Level l) {
  switch (l) {
    case Level::Absent: return "absent";
    case Level::Low: return "low";
    case Level::Mid: return "mid";
    case Level::High: return "high";
  }
  throw InvariantViolation("level_name: bad enum value");
}

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::Neutral: return "Neutral";
    case Pattern::Hope: return "Hope";
    case Pattern::Despair: return "Despair";
    case Pattern::Uncertainty: return "Uncertainty";
    case Pattern::Faith: return "Faith";
  }
  throw InvariantViolation("pattern_name: bad enum value");
}

namespace {

std::unordered_set<NodeId> union_of_history(const std::vector<DayCore>& cores, std::size_t t,
                                            int history) {
  std::unordered_set<NodeId> prior;
  for (int j = 1; j <= history; ++j) {
    const auto& m = cores[t - static_cast<std::size_t>(j)].members;
    prior.insert(m.begin(), m.end());
  }
  return prior;
}

void check_args(const std::vector<DayCore>& cores, std::size_t t, int history) {
  if (history < 1) throw InputError("membership history must be >= 1");
  if (t >= cores.size()) throw InputError("day index out of range");
}

}  // namespace

std::optional<std::uint64_t> expansion(const std::vector<DayCore>& cores, std::size_t t,
                                       int history) {
  check_args(cores, t, history);
  if (static_cast<std::size_t>(history) > t) return std::nullopt;
  const auto prior = union_of_history(cores, t, history);
  std::uint64_t fresh = 0;
  for (NodeId v : cores[t].members)
    if (!prior.count(v)) ++fresh;
  return fresh;
}

std::optional<std::uint64_t> decay(const std::vector<DayCore>& cores, std::size_t t,
                                   int history) {
  check_args(cores, t, history);
  if (static_cast<std::size_t>(history) > t) return std::nullopt;
  const auto prior = union_of_history(cores, t, history);
  const std::unordered_set<NodeId> today(cores[t].members.begin(), cores[t].members.end());
  std::uint64_t gone = 0;
  for (NodeId v : prior)
    if (!today.count(v)) ++gone;
  return gone;
}

ExpansionDecaySeries build_series(const std::vector<DayCore>& cores, const SeriesParams& params) {
  if (params.history < 1 || params.window < 1 || params.lag < 1 || params.tau < 0.0)
    throw InputError("series parameters out of range");
  for (std::size_t t = 1; t < cores.size(); ++t)
    if (cores[t].day.days != cores[t - 1].day.days + 1)
      throw InputError(
          "series requires one record per consecutive day; fill gaps with empty cores");
  ExpansionDecaySeries series;
  series.params = params;
  series.records.reserve(cores.size());
  for (std::size_t t = 0; t < cores.size(); ++t) {
    SeriesRecord rec;
    rec.day = cores[t].day;
    rec.inner_size = cores[t].members.size();
    rec.expansion = expansion(cores, t, params.history);
    rec.decay = decay(cores, t, params.history);
    series.records.push_back(std::move(rec));
  }
  classify_patterns(series);
  anomaly_candidates(series);
  return series;
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Level grade(double value, double median, const SeriesParams& p) {
  if (median <= 0.0) return value >= p.zero_median_high ? Level::High : Level::Mid;
  if (value > (1.0 + p.tau) * median) return Level::High;
  if (value < (1.0 - p.tau) * median) return Level::Low;
  return Level::Mid;
}

Pattern quadrant(Level e, Level d) {
  if (e == Level::High && d == Level::Low) return Pattern::Hope;
  if (e == Level::Low && d == Level::High) return Pattern::Despair;
  if (e == Level::High && d == Level::High) return Pattern::Uncertainty;
  if (e == Level::Low && d == Level::Low) return Pattern::Faith;
  return Pattern::Neutral;
}

}  // namespace

void classify_patterns(ExpansionDecaySeries& series) {
  auto& recs = series.records;
  const SeriesParams& p = series.params;
  const std::size_t w = static_cast<std::size_t>(p.window);
  for (std::size_t t = 0; t < recs.size(); ++t) {
    recs[t].expansion_level = Level::Absent;
    recs[t].decay_level = Level::Absent;
    recs[t].pattern = Pattern::Neutral;
    if (!recs[t].expansion || !recs[t].decay) continue;
    // trailing window: the w most recent prior days with measures present
    std::vector<double> es, ds;
    for (std::size_t back = 1; back <= t && es.size() < w; ++back) {
      const SeriesRecord& prev = recs[t - back];
      if (prev.expansion && prev.decay) {
        es.push_back(static_cast<double>(*prev.expansion));
        ds.push_back(static_cast<double>(*prev.decay));
      }
    }
    if (es.size() < w) continue;  // not enough history yet
    recs[t].expansion_level = grade(static_cast<double>(*recs[t].expansion), median_of(es), p);
    recs[t].decay_level = grade(static_cast<double>(*recs[t].decay), median_of(ds), p);
    recs[t].pattern = quadrant(recs[t].expansion_level, recs[t].decay_level);
  }
}

void anomaly_candidates(ExpansionDecaySeries& series) {
  auto& recs = series.records;
  series.anomalies.clear();
  for (auto& r : recs) r.anomaly = false;
  const std::size_t lag = static_cast<std::size_t>(series.params.lag);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].expansion_level != Level::High) continue;
    for (std::size_t j = i + 1; j < recs.size() && j - i <= lag; ++j) {
      if (recs[j].decay_level == Level::High) {
        series.anomalies.emplace_back(recs[i].day, recs[j].day);
        recs[i].anomaly = true;
        recs[j].anomaly = true;
      }
    }
  }
}

}  // namespace innercore
