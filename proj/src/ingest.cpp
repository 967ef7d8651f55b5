#include "innercore/ingest.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>

#include "innercore/errors.hpp"

namespace innercore {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool parse_number(const std::string& s, long double& v) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  v = std::strtold(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(static_cast<double>(v));
}

struct HeaderIndex {
  std::size_t from = 0, to = 0, value = 0, timestamp = 0;
  std::size_t token = SIZE_MAX;
  std::size_t required_fields = 0;
};

HeaderIndex resolve_header(const std::vector<std::string>& header, const CsvSchema& schema) {
  auto find = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw InputError("missing schema column '" + name + "' in CSV header");
  };
  HeaderIndex idx;
  idx.from = find(schema.from);
  idx.to = find(schema.to);
  idx.value = find(schema.value);
  idx.timestamp = find(schema.timestamp);
  idx.required_fields = std::max({idx.from, idx.to, idx.value, idx.timestamp}) + 1;
  if (!schema.token.empty()) {
    idx.token = find(schema.token);
    idx.required_fields = std::max(idx.required_fields, idx.token + 1);
  }
  return idx;
}

}  // namespace

TemporalGraph ingest_csv(const std::string& path, const IngestOptions& options,
                         IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError("input file has no header row: " + path);
  strip_cr(line);
  const HeaderIndex idx = resolve_header(split_csv_line(line), options.schema);

  // normalized token -> decimals, resolved once
  std::map<std::string, int> token_decimals;
  for (const auto& [token, dec] : options.token_decimals)
    token_decimals[normalize_address(token)] = dec;
  std::map<int, long double> scale_cache;
  auto scale_for = [&](int decimals) {
    auto it = scale_cache.find(decimals);
    if (it == scale_cache.end())
      it = scale_cache.emplace(decimals, std::pow(10.0L, static_cast<long double>(decimals)))
               .first;
    return it->second;
  };

  AddressBook book;
  std::map<Date, std::vector<Edge>> by_day;
  IngestReport rep;
  std::uint64_t line_no = 1;

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    ++rep.rows_total;
    auto malformed = [&](const char* why) {
      ++rep.rows_malformed;
      if (rep.first_malformed_line == 0) {
        rep.first_malformed_line = line_no;
        rep.first_malformed_reason = why;
      }
    };

    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() < idx.required_fields) {
      malformed("too few fields");
      continue;
    }
    if (f[idx.from].empty() || f[idx.to].empty()) {
      malformed("empty address");
      continue;
    }
    long double ts_val = 0;
    if (!parse_number(f[idx.timestamp], ts_val)) {
      malformed("bad timestamp");
      continue;
    }
    long double raw_value = 0;
    if (!parse_number(f[idx.value], raw_value) || raw_value < 0) {
      malformed("bad value");
      continue;
    }

    int decimals = options.default_decimals;
    if (idx.token != SIZE_MAX && !f[idx.token].empty()) {
      auto it = token_decimals.find(normalize_address(f[idx.token]));
      if (it != token_decimals.end()) decimals = it->second;
    }
    if (raw_value > static_cast<long double>(kExactIntegerLimit)) ++rep.precision_notes;
    const double weight = static_cast<double>(raw_value / scale_for(decimals));
    if (weight == 0.0 && !options.keep_zero_weight) {
      ++rep.rows_zero_dropped;
      continue;
    }

    const std::int64_t ts = static_cast<std::int64_t>(ts_val);
    const Date day = day_of_timestamp(ts, options.tz_offset_minutes);
    by_day[day].push_back({book.intern(f[idx.from]), book.intern(f[idx.to]), weight, ts});
    ++rep.rows_ok;
  }

  if (rep.rows_total > 0) {
    const double frac =
        static_cast<double>(rep.rows_malformed) / static_cast<double>(rep.rows_total);
    if (frac > options.malformed_tolerance)
      throw InputError("malformed rows exceed tolerance (" + std::to_string(rep.rows_malformed) +
                       "/" + std::to_string(rep.rows_total) + "; first at line " +
                       std::to_string(rep.first_malformed_line) + ": " +
                       rep.first_malformed_reason + ")");
  }

  std::vector<SnapshotGraph> snaps;
  snaps.reserve(by_day.size());
  for (auto& [day, edges] : by_day) {
    snaps.emplace_back(day, std::move(edges));
    rep.days.push_back({day, snaps.back().node_count(), snaps.back().edge_count()});
  }
  if (report) *report = rep;
  return TemporalGraph(std::move(book), std::move(snaps));
}

LabelSet load_labels_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open labels file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InputError("labels file has no header row: " + path);
  strip_cr(line);
  const std::vector<std::string> header = split_csv_line(line);
  std::size_t addr_col = SIZE_MAX, label_col = SIZE_MAX;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "address") addr_col = i;
    if (header[i] == "label") label_col = i;
  }
  if (addr_col == SIZE_MAX || label_col == SIZE_MAX)
    throw InputError("labels file needs 'address' and 'label' columns: " + path);
  LabelSet labels;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() <= std::max(addr_col, label_col) || f[addr_col].empty()) continue;
    labels.add(f[addr_col], f[label_col]);
  }
  return labels;
}

}  // namespace innercore
