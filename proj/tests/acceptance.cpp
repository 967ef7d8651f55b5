// Acceptance gate: prints one verdict line per criterion and exits nonzero if
// any non-skipped criterion fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixture_two_day.hpp"
#include "innercore/core.hpp"
#include "innercore/depth.hpp"
#include "innercore/errors.hpp"
#include "innercore/ingest.hpp"
#include "innercore/motif.hpp"
#include "innercore/pipeline.hpp"
#include "innercore/ranking.hpp"
#include "innercore/synthetic.hpp"
#include "innercore/temporal.hpp"
#include "oracles.hpp"

using namespace innercore;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1. golden occurrence fixture ---------------------------------------

Verdict criterion_scores() {
  const auto t0 = std::chrono::steady_clock::now();
  const NodeId v1 = 1, v2 = 2, v3 = 3;
  std::vector<MotifCounts> days(3);
  for (int t = 0; t < 3; ++t) days[t].day = Date{t};
  auto& m4_0 = days[0].counts[static_cast<std::size_t>(CenterRole::C4)];
  auto& m4_1 = days[1].counts[static_cast<std::size_t>(CenterRole::C4)];
  auto& m4_2 = days[2].counts[static_cast<std::size_t>(CenterRole::C4)];
  m4_0[v1] = 5;  m4_1[v1] = 4;  m4_2[v1] = 3;
  m4_0[v2] = 15;                m4_2[v2] = 9;
  auto& m5_0 = days[0].counts[static_cast<std::size_t>(CenterRole::C5a)];
  auto& m5_1 = days[1].counts[static_cast<std::size_t>(CenterRole::C5a)];
  auto& m5_2 = days[2].counts[static_cast<std::size_t>(CenterRole::C5a)];
  m5_0[v1] = 25;
  m5_1[v2] = 7;  m5_2[v2] = 13;
  m5_1[v3] = 23; m5_2[v3] = 35;

  NfIafOptions opt;
  opt.combine_m5 = true;
  const NfIafTable table = nf_iaf(days, opt);

  const RoleKey m4 = static_cast<RoleKey>(CenterRole::C4);
  const RoleKey m5 = kRoleC5Merged;
  struct Want {
    RoleKey role;
    std::int32_t day;
    NodeId node;
    double score;
  };
  const std::vector<Want> wants = {
      {m4, 0, v1, 0.0},  {m4, 1, v1, 0.0},  {m4, 2, v1, 0.0},
      {m4, 0, v2, 0.13}, {m4, 2, v2, 0.13}, {m5, 0, v1, 0.48},
      {m5, 1, v2, 0.04}, {m5, 2, v2, 0.05}, {m5, 1, v3, 0.14},
      {m5, 2, v3, 0.13},
  };
  Verdict v;
  v.pass = true;
  for (const auto& w : wants) {
    bool found = false;
    for (const auto& e : table.entries) {
      if (e.role == w.role && e.day.days == w.day && e.node == w.node) {
        found = true;
        if (std::fabs(e.nf_iaf - w.score) >= 0.005) v.pass = false;
      }
    }
    if (!found) v.pass = false;
  }
  bool nf_found = false;
  for (const auto& e : table.entries)
    if (e.role == m4 && e.day.days == 0 && e.node == v1) {
      nf_found = true;
      if (std::fabs(e.nf - 0.25) >= 1e-12) v.pass = false;
    }
  if (!nf_found) v.pass = false;
  const double dt = seconds_since(t0);
  if (dt >= 1.0) v.pass = false;
  char buf[128];
  std::snprintf(buf, sizeof buf, "10 scores within 0.005, nf 0.25, %.3fs", dt);
  v.detail = buf;
  return v;
}

// --- 2. two-day membership golden ----------------------------------------

Verdict criterion_two_day() {
  const fs::path dir = fs::temp_directory_path() / "accept_two_day";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path csv = dir / "transfers.csv";
  {
    std::ofstream out(csv);
    out << kTwoDayCsv;
  }
  IngestOptions opt;
  opt.default_decimals = 0;
  const TemporalGraph tg = ingest_csv(csv.string(), opt, nullptr);
  const auto props = default_properties();
  std::vector<DayCore> cores;
  for (const auto& snap : tg.snapshots())
    cores.push_back({snap.day(), inner_core(snap, props, 0.1).members});
  SeriesParams params;  // history i = 1
  params.window = 1;
  const auto series = build_series(cores, params);
  Verdict v;
  v.pass = series.records.size() == 2 && series.records[1].expansion.has_value() &&
           series.records[1].expansion.value() == 5 && series.records[1].decay.has_value() &&
           series.records[1].decay.value() == 2;
  std::ostringstream ss;
  if (series.records.size() == 2 && series.records[1].expansion) {
    ss << "expansion " << *series.records[1].expansion << ", decay "
       << *series.records[1].decay << " with history 1";
  } else {
    ss << "series malformed";
  }
  v.detail = ss.str();
  return v;
}

// --- 3. depth analytics ----------------------------------------------------

Verdict criterion_depth() {
  Verdict v;
  v.pass = true;
  Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
  Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(3, 3);
  if (mhdo(Eigen::VectorXd::Zero(3).eval(), id3) != 1.0) v.pass = false;
  Eigen::Vector2d x34(3.0, 4.0);
  if (std::fabs(mhdo(x34, id2) - 1.0 / 26.0) >= 1e-12) v.pass = false;

  std::mt19937 rng(4242);
  Eigen::MatrixXd rows(60, 4);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < 4; ++j) rows(i, j) = u(rng);
  const auto inv = inverse_covariance(rows, RidgePolicy{});
  std::uniform_real_distribution<double> c(1.0, 50.0);
  for (int t = 0; t < 1000; ++t) {
    Eigen::Vector4d x(u(rng), u(rng), u(rng), u(rng));
    const double z = mhdo(x, inv.matrix);
    if (!(z > 0.0 && z <= 1.0)) v.pass = false;
    if (mhdo((c(rng) * x).eval(), inv.matrix) > z + 1e-15) v.pass = false;
    if (std::fabs(mhdo((-x).eval(), inv.matrix) - z) > 1e-12 * z) v.pass = false;
  }
  v.detail = "origin exact, (3,4) at 1/26, 1000 samples in (0,1] with ray/sign laws";
  return v;
}

// --- 4. boundary epsilons ----------------------------------------------------

Verdict criterion_boundary() {
  Verdict v;
  v.pass = true;
  const auto props = default_properties();
  std::mt19937 rng(77);
  int full = 0, shrunk = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 5 + rng() % 40;
    SnapshotGraph g(Date{0}, oracle::random_edges(rng, n, 4 * n, false));
    try {
      const auto all = inner_core(g, props, 1.0);
      if (all.members != g.nodes()) v.pass = false;
      else ++full;
    } catch (const NumericalError&) {
    }
    try {
      const auto one = inner_core(g, props, 1e-12);
      if (one.members.size() > 1) v.pass = false;
      else ++shrunk;
    } catch (const NumericalError&) {
    }
  }
  if (full < 40 || shrunk < 40) v.pass = false;  // nearly all runs must be comparable
  char buf[96];
  std::snprintf(buf, sizeof buf, "eps 1 kept all on %d graphs; eps 1e-12 kept <=1 on %d",
                full, shrunk);
  v.detail = buf;
  return v;
}

// --- 5. k-core oracle ---------------------------------------------------------

Verdict criterion_kcore() {
  Verdict v;
  v.pass = true;
  std::mt19937 rng(88);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 2 + rng() % 39;
    const auto edges = oracle::random_edges(rng, n, 1 + rng() % (4 * n), true);
    SnapshotGraph g(Date{0}, edges);
    const auto got = k_core(g, true);
    const auto ref = oracle::coreness_ref(g.nodes(), edges, true);
    for (std::size_t i = 0; i < got.node_ids.size(); ++i)
      if (got.coreness[i] != ref.at(got.node_ids[i])) v.pass = false;
  }
  v.detail = "100 random multigraphs, exact coreness match";
  return v;
}

// --- 6. motif oracle ----------------------------------------------------------

Verdict criterion_motifs() {
  Verdict v;
  v.pass = true;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 3 + rng() % 13;
    auto edges = oracle::random_edges(rng, n, 1 + rng() % 40, true);
    SnapshotGraph g(Date{0}, edges);
    const auto got = enumerate_centers(g);
    const auto ref = oracle::motifs_ref(g.nodes(), edges);
    for (NodeId node : g.nodes()) {
      for (int r = 0; r < static_cast<int>(kRoleCount); ++r) {
        std::uint64_t want = 0;
        if (const auto it = ref.find(node); it != ref.end())
          if (const auto rit = it->second.find(r); rit != it->second.end()) want = rit->second;
        const auto& m = got.counts[static_cast<std::size_t>(r)];
        const auto mit = m.find(node);
        const std::uint64_t have = mit == m.end() ? 0 : mit->second;
        if (have != want) v.pass = false;
      }
    }
    // duplicating every edge must not change any count
    auto doubled = edges;
    for (const auto& e : edges) doubled.push_back({e.src, e.dst, e.weight, e.timestamp + 1});
    const auto dup = enumerate_centers(SnapshotGraph(Date{0}, doubled));
    for (std::size_t r = 0; r < kRoleCount; ++r)
      if (dup.counts[r] != got.counts[r]) v.pass = false;
  }
  v.detail = "100 random digraphs vs all-triples classifier; duplication invariant";
  return v;
}

// --- 7. alpha nestedness and cross-check ---------------------------------------

Verdict criterion_alpha() {
  Verdict v;
  v.pass = true;
  const auto props = default_properties();
  std::mt19937 rng(111);
  int agree = 0, differ = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 10 + rng() % 90;
    SnapshotGraph g(Date{0}, oracle::random_edges(rng, n, 3 * n, false));
    AlphaDecomposition d;
    InnerCoreResult direct;
    try {
      d = alpha_core(g, props, 1.0, 0.1);
      direct = inner_core(g, props, 0.1);
    } catch (const NumericalError&) {
      continue;
    }
    std::vector<NodeId> prev = d.members_at_least(0.0);
    for (double floor : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      const auto cur = d.members_at_least(floor);
      if (!std::includes(prev.begin(), prev.end(), cur.begin(), cur.end())) v.pass = false;
      prev = cur;
    }
    (d.innermost == direct.members ? agree : differ) += 1;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "nestedness held; innermost vs direct peel: %d match, %d differ (reported only)",
                agree, differ);
  v.detail = buf;
  return v;
}

// --- 8. relative performance ----------------------------------------------------

Verdict criterion_performance() {
  Verdict v;
  SyntheticSpec spec;
  spec.nodes = 50000;
  spec.edges = 250000;
  spec.seed = 1;
  const SnapshotGraph g = generate(spec);
  const auto props = default_properties();

  const auto t0 = std::chrono::steady_clock::now();
  const auto inner = inner_core(g, props, 0.1);
  const double inner_s = seconds_since(t0);

  const auto t1 = std::chrono::steady_clock::now();
  const auto alpha = alpha_core(g, props, 1.0, 0.1);
  const double alpha_s = seconds_since(t1);

  v.pass = inner_s < 30.0 && inner.iterations <= 10 && inner_s < alpha_s;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "innercore %.2fs in %u iterations (%zu members); alphacore %.2fs", inner_s,
                inner.iterations, inner.members.size(), alpha_s);
  v.detail = buf;
  return v;
}

// --- 9. pipeline determinism across thread counts -------------------------------

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "accept_det";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "transfers.csv");
    out << kTwoDayCsv;
  }
  RunConfig c;
  c.input = (dir / "transfers.csv").string();
  c.out_dir = (dir / "out").string();
  c.decimals = 0;
  c.window = 1;
  c.no_timestamp = true;
  c.motif_days = "all";

  c.threads = 4;
  cmd_pipeline(c);
  const std::vector<std::string> artifacts = {"series.csv", "anomalies.csv", "motifs.csv",
                                              "ranked.csv", "label_summary.csv"};
  std::vector<std::string> first;
  for (const auto& a : artifacts) first.push_back(read_file(dir / "out" / a));

  fs::remove_all(dir / "out");
  c.threads = 1;
  cmd_pipeline(c);
  Verdict v;
  v.pass = true;
  for (std::size_t i = 0; i < artifacts.size(); ++i)
    if (read_file(dir / "out" / artifacts[i]) != first[i]) v.pass = false;
  v.detail = "threads 4 vs 1: all five CSV artifacts byte-identical";
  return v;
}

// --- 10. optional dataset replication --------------------------------------------

Verdict criterion_dataset() {
  Verdict v;
  const char* path = std::getenv("INNERCORE_DATASET");
  if (!path || !*path) {
    v.skipped = true;
    v.detail = "INNERCORE_DATASET not set";
    return v;
  }
  IngestOptions opt;  // stablecoin networks ship 18-decimal raw values
  const TemporalGraph tg = ingest_csv(path, opt, nullptr);
  const auto props = default_properties();
  std::vector<DayCore> cores;
  const std::int32_t d0 = tg.first_day().days, d1 = tg.last_day().days;
  for (std::int32_t d = d0; d <= d1; ++d) {
    DayCore dc;
    dc.day = Date{d};
    if (tg.has_day(Date{d})) dc.members = inner_core(tg.on(Date{d}), props, 0.1).members;
    cores.push_back(std::move(dc));
  }
  const auto series = build_series(cores, SeriesParams{});
  const Date peak = parse_date("2022-05-13");
  std::uint64_t peak_decay = 0;
  bool have_peak = false;
  std::uint64_t window_max = 0;
  double before = 0.0, after = 0.0;
  int nb = 0, na = 0;
  for (const auto& r : series.records) {
    const int delta = r.day.days - peak.days;
    if (delta == 0 && r.decay) {
      peak_decay = *r.decay;
      have_peak = true;
    }
    if (delta >= -7 && delta <= 7 && r.decay) window_max = std::max(window_max, *r.decay);
    if (delta >= -14 && delta < 0 && r.expansion) {
      before += static_cast<double>(*r.expansion);
      ++nb;
    }
    if (delta > 0 && delta <= 14 && r.expansion) {
      after += static_cast<double>(*r.expansion);
      ++na;
    }
  }
  if (!have_peak || nb == 0 || na == 0) {
    v.pass = false;
    v.detail = "dataset does not cover 2022-05-13 with surrounding weeks";
    return v;
  }
  before /= nb;
  after /= na;
  v.pass = peak_decay == window_max && after < before;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "decay %llu (window max %llu); mean expansion %.1f before vs %.1f after",
                static_cast<unsigned long long>(peak_decay),
                static_cast<unsigned long long>(window_max), before, after);
  v.detail = buf;
  return v;
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Verdict (*fn)();
  };
  const std::vector<Row> rows = {
      {"1. golden occurrence scores", criterion_scores},
      {"2. two-day expansion/decay", criterion_two_day},
      {"3. depth analytics", criterion_depth},
      {"4. boundary epsilon behavior", criterion_boundary},
      {"5. k-core oracle equivalence", criterion_kcore},
      {"6. motif oracle equivalence", criterion_motifs},
      {"7. alpha nestedness and cross-check", criterion_alpha},
      {"8. relative performance", criterion_performance},
      {"9. pipeline determinism", criterion_determinism},
      {"10. dataset replication", criterion_dataset},
  };
  int failures = 0;
  for (const auto& row : rows) {
    Verdict v;
    try {
      v = row.fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const char* tag = v.skipped ? "[SKIP]" : (v.pass ? "[PASS]" : "[FAIL]");
    std::printf("%s %s: %s\n", tag, row.name, v.detail.c_str());
    if (!v.skipped && !v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
