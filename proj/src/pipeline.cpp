#include "innercore/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "innercore/bench.hpp"
#include "innercore/cache.hpp"
#include "innercore/core.hpp"
#include "innercore/emit.hpp"
#include "innercore/errors.hpp"
#include "innercore/motif.hpp"
#include "innercore/parallel.hpp"
#include "innercore/ranking.hpp"
#include "innercore/temporal.hpp"

namespace innercore {

namespace {

using nlohmann::json;

// Rethrows with a stage tag so failures say which part of the run died.
template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(name) + ": " + e.what());
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(std::string(name) + ": " + e.what());
  }
}

json config_as_json(const RunConfig& c) {
  json j;
  j["input"] = c.input;
  j["cache"] = c.cache;
  j["labels"] = c.labels;
  j["out_dir"] = c.out_dir;
  j["schema"] = {{"from", c.schema.from},
                 {"to", c.schema.to},
                 {"value", c.schema.value},
                 {"timestamp", c.schema.timestamp},
                 {"token", c.schema.token}};
  j["tz_offset_minutes"] = c.tz_offset_minutes;
  j["decimals"] = c.decimals;
  j["token_decimals"] = c.token_decimals;
  j["keep_zero_weight"] = c.keep_zero_weight;
  j["malformed_tolerance"] = c.malformed_tolerance;
  j["features"] = c.features;
  j["epsilon"] = c.epsilon;
  j["alpha_start"] = c.alpha_start;
  j["alpha_step"] = c.alpha_step;
  j["history"] = c.history;
  j["window"] = c.window;
  j["tau"] = c.tau;
  j["lag"] = c.lag;
  j["normalized"] = c.normalized;
  j["motif_days"] = c.motif_days;
  j["combine_m5"] = c.combine_m5;
  j["bench_nodes"] = c.bench_nodes;
  j["bench_edges"] = c.bench_edges;
  j["bench_exponent"] = c.bench_exponent;
  j["bench_wmu"] = c.bench_wmu;
  j["bench_wsigma"] = c.bench_wsigma;
  j["bench_reps"] = c.bench_reps;
  j["bench_algos"] = c.bench_algos;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["no_timestamp"] = c.no_timestamp;
  j["json_mirror"] = c.json_mirror;
  return j;
}

void apply_json(RunConfig& c, const json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "input") c.input = value.get<std::string>();
    else if (key == "cache") c.cache = value.get<std::string>();
    else if (key == "labels") c.labels = value.get<std::string>();
    else if (key == "out_dir") c.out_dir = value.get<std::string>();
    else if (key == "schema") {
      for (const auto& [sk, sv] : value.items()) {
        if (sk == "from") c.schema.from = sv.get<std::string>();
        else if (sk == "to") c.schema.to = sv.get<std::string>();
        else if (sk == "value") c.schema.value = sv.get<std::string>();
        else if (sk == "timestamp") c.schema.timestamp = sv.get<std::string>();
        else if (sk == "token") c.schema.token = sv.get<std::string>();
        else throw InputError("unknown schema key '" + sk + "'");
      }
    } else if (key == "tz_offset_minutes") c.tz_offset_minutes = value.get<int>();
    else if (key == "decimals") c.decimals = value.get<int>();
    else if (key == "token_decimals") c.token_decimals = value.get<std::map<std::string, int>>();
    else if (key == "keep_zero_weight") c.keep_zero_weight = value.get<bool>();
    else if (key == "malformed_tolerance") c.malformed_tolerance = value.get<double>();
    else if (key == "features") c.features = value.get<std::vector<std::string>>();
    else if (key == "epsilon") c.epsilon = value.get<double>();
    else if (key == "alpha_start") c.alpha_start = value.get<double>();
    else if (key == "alpha_step") c.alpha_step = value.get<double>();
    else if (key == "history") c.history = value.get<int>();
    else if (key == "window") c.window = value.get<int>();
    else if (key == "tau") c.tau = value.get<double>();
    else if (key == "lag") c.lag = value.get<int>();
    else if (key == "normalized") c.normalized = value.get<bool>();
    else if (key == "motif_days") c.motif_days = value.get<std::string>();
    else if (key == "combine_m5") c.combine_m5 = value.get<bool>();
    else if (key == "bench_nodes") c.bench_nodes = value.get<std::uint32_t>();
    else if (key == "bench_edges") c.bench_edges = value.get<std::uint64_t>();
    else if (key == "bench_exponent") c.bench_exponent = value.get<double>();
    else if (key == "bench_wmu") c.bench_wmu = value.get<double>();
    else if (key == "bench_wsigma") c.bench_wsigma = value.get<double>();
    else if (key == "bench_reps") c.bench_reps = value.get<int>();
    else if (key == "bench_algos") c.bench_algos = value.get<std::vector<std::string>>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "threads") c.threads = value.get<int>();
    else if (key == "no_timestamp") c.no_timestamp = value.get<bool>();
    else if (key == "json_mirror") c.json_mirror = value.get<bool>();
    else throw InputError("unknown config key '" + key + "'");
  }
}

std::vector<Property> props_of(const RunConfig& c) {
  if (c.features.empty()) throw InputError("feature list is empty");
  std::vector<Property> props;
  props.reserve(c.features.size());
  for (const auto& name : c.features) props.push_back(parse_property(name));
  return props;
}

IngestOptions ingest_options(const RunConfig& c) {
  IngestOptions o;
  o.schema = c.schema;
  o.tz_offset_minutes = c.tz_offset_minutes;
  o.default_decimals = c.decimals;
  o.token_decimals = c.token_decimals;
  o.keep_zero_weight = c.keep_zero_weight;
  o.malformed_tolerance = c.malformed_tolerance;
  return o;
}

TemporalGraph load_graph(const RunConfig& c, IngestReport* report = nullptr) {
  if (!c.cache.empty() && std::filesystem::exists(c.cache))
    return stage("cache", [&] { return read_cache(c.cache); });
  if (c.input.empty())
    throw InputError("load: no input (pass --input transfers.csv or --cache with an existing cache)");
  return stage("ingest", [&] { return ingest_csv(c.input, ingest_options(c), report); });
}

SeriesParams series_params(const RunConfig& c) {
  SeriesParams p;
  p.history = c.history;
  p.window = c.window;
  p.tau = c.tau;
  p.lag = c.lag;
  return p;
}

// --- compute chain shared by the analysis subcommands ---

struct Chain {
  TemporalGraph tg;
  std::vector<Property> props;
  std::vector<InnerCoreResult> per_snapshot;  // aligned with tg.snapshots()
  std::vector<DayCore> cores;                 // one per calendar day, gaps empty
  ExpansionDecaySeries series;
  std::vector<Date> motif_day_list;
  std::vector<MotifCounts> motifs;            // aligned with motif_day_list
  NfIafTable table;
  PercentileTable pct;
  LabelSet labels;
  LabelPartition partition;
};

void compute_cores(Chain& ch, const RunConfig& c) {
  const auto& snaps = ch.tg.snapshots();
  ch.per_snapshot.assign(snaps.size(), {});
  stage("innercore", [&] {
    for_each_index(snaps.size(), c.threads,
                   [&](std::size_t i) { ch.per_snapshot[i] = inner_core(snaps[i], ch.props, c.epsilon); });
    return 0;
  });
  ch.cores.clear();
  if (snaps.empty()) return;
  const std::int32_t d0 = ch.tg.first_day().days, d1 = ch.tg.last_day().days;
  ch.cores.reserve(static_cast<std::size_t>(d1 - d0 + 1));
  std::size_t si = 0;
  for (std::int32_t d = d0; d <= d1; ++d) {
    DayCore dc;
    dc.day = Date{d};
    if (si < snaps.size() && snaps[si].day().days == d) dc.members = ch.per_snapshot[si++].members;
    ch.cores.push_back(std::move(dc));
  }
}

void compute_series(Chain& ch, const RunConfig& c) {
  ch.series = stage("series", [&] { return build_series(ch.cores, series_params(c)); });
}

void compute_motifs(Chain& ch, const RunConfig& c) {
  std::set<std::int32_t> days;
  if (c.motif_days == "all") {
    for (const auto& r : ch.series.records) days.insert(r.day.days);
  } else if (c.motif_days == "anomaly") {
    for (const auto& [e, d] : ch.series.anomalies)
      for (std::int32_t x = e.days; x <= d.days; ++x) days.insert(x);
  } else {
    throw InputError("motifs: motif_days must be 'all' or 'anomaly'");
  }
  ch.motif_day_list.clear();
  for (std::int32_t d : days) ch.motif_day_list.push_back(Date{d});
  ch.motifs.assign(ch.motif_day_list.size(), {});
  stage("motifs", [&] {
    const std::int32_t base = ch.cores.empty() ? 0 : ch.cores.front().day.days;
    for_each_index(ch.motif_day_list.size(), c.threads, [&](std::size_t i) {
      const Date day = ch.motif_day_list[i];
      const DayCore& core = ch.cores[static_cast<std::size_t>(day.days - base)];
      ch.motifs[i] = enumerate_centers(induced_subgraph(ch.tg.on(day), core.members));
      ch.motifs[i].day = day;
    });
    return 0;
  });
}

void compute_rank(Chain& ch, const RunConfig& c) {
  stage("rank", [&] {
    if (!ch.motifs.empty()) {
      ch.table = nf_iaf(ch.motifs, NfIafOptions{c.combine_m5});
      if (!ch.table.entries.empty()) ch.pct = percentile_ranks(ch.table);
    }
    return 0;
  });
  if (!c.labels.empty()) ch.labels = stage("labels", [&] { return load_labels_csv(c.labels); });
  ch.partition = partition_by_label(ch.table, ch.labels, ch.tg.book());
}

Chain run_chain(const RunConfig& c, int depth) {
  Chain ch;
  ch.props = stage("config", [&] { return props_of(c); });
  ch.tg = load_graph(c);
  compute_cores(ch, c);
  if (depth >= 1) compute_series(ch, c);
  if (depth >= 2) compute_motifs(ch, c);
  if (depth >= 3) compute_rank(ch, c);
  return ch;
}

// --- emission ---

std::string output_header(const RunConfig& c) {
  std::string h = "# config: " + provenance_json(c) + "\n";
  if (!c.no_timestamp) h += "# generated: " + utc_now_iso8601() + "\n";
  return h;
}

std::string series_csv(const RunConfig& c, const ExpansionDecaySeries& s) {
  std::string out = output_header(c);
  out += "day,inner_size,expansion,decay";
  if (c.normalized) out += ",expansion_norm,decay_norm";
  out += ",pattern,anomaly\n";
  for (const auto& r : s.records) {
    out += to_string(r.day) + ',' + std::to_string(r.inner_size) + ',';
    if (r.expansion) out += std::to_string(*r.expansion);
    out += ',';
    if (r.decay) out += std::to_string(*r.decay);
    if (c.normalized) {
      out += ',';
      if (r.expansion && r.inner_size > 0)
        out += format_fixed(static_cast<double>(*r.expansion) / static_cast<double>(r.inner_size), 6);
      out += ',';
      if (r.decay && r.inner_size > 0)
        out += format_fixed(static_cast<double>(*r.decay) / static_cast<double>(r.inner_size), 6);
    }
    out += ',';
    out += pattern_name(r.pattern);
    out += ',';
    out += r.anomaly ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string anomalies_csv(const RunConfig& c, const ExpansionDecaySeries& s) {
  std::string out = output_header(c) + "expansion_day,decay_day\n";
  for (const auto& [e, d] : s.anomalies) out += to_string(e) + ',' + to_string(d) + '\n';
  return out;
}

std::string members_csv(const RunConfig& c, const Chain& ch) {
  std::string out = output_header(c) + "day,address\n";
  for (const auto& dc : ch.cores) {
    std::vector<std::string> addrs;
    addrs.reserve(dc.members.size());
    for (NodeId v : dc.members) addrs.push_back(ch.tg.book().raw(v));
    std::sort(addrs.begin(), addrs.end());
    for (const auto& a : addrs) out += to_string(dc.day) + ',' + csv_field(a) + '\n';
  }
  return out;
}

std::string innercore_results_json(const RunConfig& c, const Chain& ch) {
  json arr = json::array();
  const auto& snaps = ch.tg.snapshots();
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const InnerCoreResult& r = ch.per_snapshot[i];
    json trace = json::array();
    for (const auto& it : r.per_iteration)
      trace.push_back({{"removed", it.removed}, {"max_depth", it.max_remaining_depth}});
    json members = json::array();
    for (NodeId v : r.members) members.push_back(ch.tg.book().raw(v));
    arr.push_back({{"day", to_string(snaps[i].day())},
                   {"epsilon", r.epsilon},
                   {"nodes", snaps[i].node_count()},
                   {"edges", snaps[i].edge_count()},
                   {"member_count", r.members.size()},
                   {"members", members},
                   {"iterations", r.iterations},
                   {"trace", trace},
                   {"ridge_used", r.ridge_used},
                   {"elapsed_seconds", r.elapsed.count()}});
  }
  json j;
  j["config"] = json::parse(provenance_json(c));
  if (!c.no_timestamp) j["generated"] = utc_now_iso8601();
  j["results"] = arr;
  return j.dump(2) + "\n";
}

std::string motifs_csv(const RunConfig& c, const Chain& ch) {
  std::string out = output_header(c) + "day,center_role,address,count\n";
  for (const auto& mc : ch.motifs) {
    for (std::size_t r = 0; r < kRoleCount; ++r) {
      std::vector<std::pair<std::string, std::uint64_t>> rows;
      rows.reserve(mc.counts[r].size());
      for (const auto& [node, cnt] : mc.counts[r])
        rows.emplace_back(ch.tg.book().raw(node), cnt);
      std::sort(rows.begin(), rows.end());
      for (const auto& [addr, cnt] : rows)
        out += to_string(mc.day) + ',' + std::string(role_name(static_cast<CenterRole>(r))) +
               ',' + csv_field(addr) + ',' + std::to_string(cnt) + '\n';
    }
  }
  return out;
}

std::string ranked_csv(const RunConfig& c, const Chain& ch) {
  std::string out =
      output_header(c) + "center_role,day,address,count,nf,iaf,nf_iaf,percentile,label\n";
  for (std::size_t i = 0; i < ch.table.entries.size(); ++i) {
    const NfIafEntry& e = ch.table.entries[i];
    const std::string addr = ch.tg.book().raw(e.node);
    const auto label = ch.labels.lookup(addr);
    out += std::string(role_key_name(e.role)) + ',' + to_string(e.day) + ',' + csv_field(addr) +
           ',' + std::to_string(e.count) + ',' + format_fixed(e.nf, 6) + ',' +
           format_fixed(e.iaf, 6) + ',' + format_fixed(e.nf_iaf, 6) + ',' +
           format_fixed(ch.pct.percentile.empty() ? 50.0 : ch.pct.percentile[i], 1) + ',' +
           csv_field(label ? *label : std::string_view{}) + '\n';
  }
  return out;
}

std::string label_summary_csv(const RunConfig& c, const Chain& ch) {
  std::string out = output_header(c) + "center_role,unique_addresses,labeled_addresses\n";
  for (const auto& row : ch.partition.summary)
    out += std::string(role_key_name(row.role)) + ',' + std::to_string(row.unique_addresses) +
           ',' + std::to_string(row.labeled_addresses) + '\n';
  return out;
}

// Mirrors a CSV artifact as {"config":…, "columns":…, "rows":…} for --json runs.
std::string csv_as_json(const std::string& csv) {
  json j;
  json rows = json::array();
  std::vector<std::string> columns;
  std::size_t start = 0;
  bool have_header = false;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string::npos) end = csv.size();
    const std::string line = csv.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      if (line.rfind("# config:", 0) == 0)
        j["config"] = json::parse(line.substr(colon + 1));
      else if (line.rfind("# generated:", 0) == 0)
        j["generated"] = line.substr(colon + 2);
      continue;
    }
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') { cur += '"'; ++i; }
          else quoted = false;
        } else cur += ch;
      } else if (ch == '"') quoted = true;
      else if (ch == ',') { cells.push_back(std::move(cur)); cur.clear(); }
      else cur += ch;
    }
    cells.push_back(std::move(cur));
    if (!have_header) {
      columns = std::move(cells);
      have_header = true;
    } else {
      rows.push_back(cells);
    }
  }
  j["columns"] = columns;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

struct OutputSet {
  std::vector<std::pair<std::string, std::string>> files;  // path -> content

  void add(const RunConfig& c, const std::string& name, std::string content, bool mirror) {
    files.emplace_back(c.out_dir + "/" + name, std::move(content));
    if (mirror && c.json_mirror) {
      const std::string base = name.substr(0, name.rfind('.'));
      files.emplace_back(c.out_dir + "/" + base + ".json", csv_as_json(files.back().second));
    }
  }

  void write_all() const {
    for (const auto& [path, content] : files) atomic_write_file(path, content);
  }
};

}  // namespace

void config_apply_json_text(RunConfig& config, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  apply_json(config, j);
}

std::string config_json(const RunConfig& config) { return config_as_json(config).dump(); }

std::string provenance_json(const RunConfig& config) {
  json j = config_as_json(config);
  j.erase("threads");
  j.erase("no_timestamp");
  j.erase("json_mirror");
  return j.dump();
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::string resolved = path;
  if (resolved.empty()) {
    const char* env = std::getenv("INNERCORE_CONFIG");
    if (env && *env) resolved = env;
  }
  if (resolved.empty()) return;
  std::ifstream in(resolved);
  if (!in) throw InputError("cannot open config file: " + resolved);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  config_apply_json_text(config, text);
}

void cmd_ingest(const RunConfig& config) {
  if (config.input.empty()) throw InputError("ingest: pass --input transfers.csv");
  IngestReport rep;
  TemporalGraph tg =
      stage("ingest", [&] { return ingest_csv(config.input, ingest_options(config), &rep); });
  const std::string cache_path =
      config.cache.empty() ? config.out_dir + "/snapshots.icache" : config.cache;
  stage("cache", [&] {
    write_cache(cache_path, tg);
    return 0;
  });

  json j;
  j["rows_total"] = rep.rows_total;
  j["rows_ok"] = rep.rows_ok;
  j["rows_zero_dropped"] = rep.rows_zero_dropped;
  j["rows_malformed"] = rep.rows_malformed;
  j["precision_notes"] = rep.precision_notes;
  if (rep.rows_malformed > 0) {
    j["first_malformed_line"] = rep.first_malformed_line;
    j["first_malformed_reason"] = rep.first_malformed_reason;
  }
  j["cache"] = cache_path;
  json days = json::array();
  for (const auto& d : rep.days)
    days.push_back({{"day", to_string(d.day)}, {"nodes", d.nodes}, {"edges", d.edges}});
  j["days"] = days;
  stage("report", [&] {
    atomic_write_file(config.out_dir + "/ingest_report.json", j.dump(2) + "\n");
    return 0;
  });

  std::printf("ingested %llu/%llu rows into %zu day snapshot(s)\n",
              static_cast<unsigned long long>(rep.rows_ok),
              static_cast<unsigned long long>(rep.rows_total), rep.days.size());
  std::printf("dropped: %llu zero-weight, %llu malformed\n",
              static_cast<unsigned long long>(rep.rows_zero_dropped),
              static_cast<unsigned long long>(rep.rows_malformed));
  if (rep.precision_notes > 0)
    std::printf("note: %llu values above 2^53 subunits lost integer precision\n",
                static_cast<unsigned long long>(rep.precision_notes));
  for (const auto& d : rep.days)
    std::printf("%s: %llu nodes, %llu edges\n", to_string(d.day).c_str(),
                static_cast<unsigned long long>(d.nodes),
                static_cast<unsigned long long>(d.edges));
  std::printf("cache written: %s\n", cache_path.c_str());
  if (tg.empty()) std::fprintf(stderr, "warning: no data rows ingested\n");
}

void cmd_innercore(const RunConfig& config) {
  Chain ch = run_chain(config, 0);
  OutputSet out;
  out.files.emplace_back(config.out_dir + "/innercore_results.json",
                         innercore_results_json(config, ch));
  out.add(config, "innercore_members.csv", members_csv(config, ch), true);
  out.write_all();
}

void cmd_series(const RunConfig& config) {
  Chain ch = run_chain(config, 1);
  OutputSet out;
  out.add(config, "series.csv", series_csv(config, ch.series), true);
  out.write_all();
}

void cmd_patterns(const RunConfig& config) {
  Chain ch = run_chain(config, 1);
  OutputSet out;
  out.add(config, "series.csv", series_csv(config, ch.series), true);
  out.add(config, "anomalies.csv", anomalies_csv(config, ch.series), true);
  out.write_all();
}

void cmd_motifs(const RunConfig& config) {
  Chain ch = run_chain(config, 2);
  OutputSet out;
  out.add(config, "motifs.csv", motifs_csv(config, ch), true);
  out.write_all();
}

void cmd_rank(const RunConfig& config) {
  Chain ch = run_chain(config, 3);
  OutputSet out;
  out.add(config, "ranked.csv", ranked_csv(config, ch), true);
  out.add(config, "label_summary.csv", label_summary_csv(config, ch), true);
  out.write_all();
}

void cmd_pipeline(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  Chain ch = run_chain(config, 3);
  OutputSet out;
  out.add(config, "series.csv", series_csv(config, ch.series), true);
  out.add(config, "anomalies.csv", anomalies_csv(config, ch.series), true);
  out.add(config, "motifs.csv", motifs_csv(config, ch), true);
  out.add(config, "ranked.csv", ranked_csv(config, ch), true);
  out.add(config, "label_summary.csv", label_summary_csv(config, ch), true);

  json j;
  j["snapshots"] = ch.tg.snapshots().size();
  j["calendar_days"] = ch.cores.size();
  j["anomaly_pairs"] = ch.series.anomalies.size();
  j["motif_days"] = ch.motif_day_list.size();
  j["ranked_entries"] = ch.table.entries.size();
  j["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  j["config"] = config_as_json(config);
  if (!config.no_timestamp) j["generated"] = utc_now_iso8601();
  out.files.emplace_back(config.out_dir + "/run_report.json", j.dump(2) + "\n");
  out.write_all();
}

void cmd_bench(const RunConfig& config) {
  BenchConfig bc;
  bc.spec.nodes = config.bench_nodes;
  bc.spec.edges = config.bench_edges;
  bc.spec.attachment_exponent = config.bench_exponent;
  bc.spec.weight_log_mean = config.bench_wmu;
  bc.spec.weight_log_sigma = config.bench_wsigma;
  bc.spec.seed = config.seed;
  bc.algos = config.bench_algos;
  bc.epsilon = config.epsilon;
  bc.alpha_start = config.alpha_start;
  bc.alpha_step = config.alpha_step;
  bc.repetitions = config.bench_reps;
  const BenchReport rep = stage("bench", [&] { return run_bench(bc); });
  OutputSet out;
  out.files.emplace_back(config.out_dir + "/bench.json", bench_report_json(rep));
  out.files.emplace_back(config.out_dir + "/bench.csv", bench_report_csv(rep));
  out.write_all();
  for (const auto& t : rep.timings)
    std::printf("%s: mean %.4fs min %.4fs max %.4fs over %zu rep(s)\n", t.name.c_str(), t.mean,
                t.min, t.max, t.seconds.size());
  std::printf("graph: %llu nodes, %llu edges; innermost match: %s\n",
              static_cast<unsigned long long>(rep.graph_nodes),
              static_cast<unsigned long long>(rep.graph_edges), rep.innermost_match.c_str());
}

}  // namespace innercore
