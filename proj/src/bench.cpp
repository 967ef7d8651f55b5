#include "innercore/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <json.hpp>

#include "innercore/core.hpp"
#include "innercore/emit.hpp"
#include "innercore/errors.hpp"

namespace innercore {

namespace {

double time_once(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AlgoTiming summarize(std::string name, std::vector<double> samples) {
  AlgoTiming t;
  t.name = std::move(name);
  t.seconds = std::move(samples);
  t.min = *std::min_element(t.seconds.begin(), t.seconds.end());
  t.max = *std::max_element(t.seconds.begin(), t.seconds.end());
  double sum = 0.0;
  for (double s : t.seconds) sum += s;
  t.mean = sum / static_cast<double>(t.seconds.size());
  return t;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.repetitions < 1) throw InputError("bench: repetitions must be >= 1");
  for (const auto& a : config.algos)
    if (a != "innercore" && a != "alphacore" && a != "kcore")
      throw InputError("bench: unknown algorithm '" + a + "'");

  BenchReport rep;
  rep.config = config;
  const SnapshotGraph g = generate(config.spec);  // excluded from timings
  rep.graph_nodes = g.node_count();
  rep.graph_edges = g.edge_count();
  const std::vector<Property> props = default_properties();

  auto wants = [&](const char* name) {
    return std::find(config.algos.begin(), config.algos.end(), name) != config.algos.end();
  };

  InnerCoreResult last_inner;
  AlphaDecomposition last_alpha;
  if (wants("innercore")) {
    std::vector<double> samples;
    for (int r = 0; r < config.repetitions; ++r)
      samples.push_back(
          time_once([&] { last_inner = inner_core(g, props, config.epsilon); }));
    rep.timings.push_back(summarize("innercore", std::move(samples)));
    rep.innercore_iterations = last_inner.iterations;
    rep.innercore_members = last_inner.members.size();
  }
  if (wants("alphacore")) {
    std::vector<double> samples;
    for (int r = 0; r < config.repetitions; ++r)
      samples.push_back(time_once(
          [&] { last_alpha = alpha_core(g, props, config.alpha_start, config.alpha_step); }));
    rep.timings.push_back(summarize("alphacore", std::move(samples)));
  }
  if (wants("kcore")) {
    std::vector<double> samples;
    KCoreResult kc;
    for (int r = 0; r < config.repetitions; ++r)
      samples.push_back(time_once([&] { kc = k_core(g); }));
    rep.timings.push_back(summarize("kcore", std::move(samples)));
  }

  if (wants("innercore") && wants("alphacore"))
    rep.innermost_match = last_inner.members == last_alpha.innermost ? "pass" : "mismatch";
  return rep;
}

std::string bench_report_json(const BenchReport& report) {
  nlohmann::json j;
  j["graph"] = {{"nodes", report.graph_nodes},
                {"edges", report.graph_edges},
                {"spec",
                 {{"nodes", report.config.spec.nodes},
                  {"edges", report.config.spec.edges},
                  {"attachment_exponent", report.config.spec.attachment_exponent},
                  {"weight_log_mean", report.config.spec.weight_log_mean},
                  {"weight_log_sigma", report.config.spec.weight_log_sigma},
                  {"seed", report.config.spec.seed}}}};
  j["epsilon"] = report.config.epsilon;
  j["alpha_start"] = report.config.alpha_start;
  j["alpha_step"] = report.config.alpha_step;
  j["repetitions"] = report.config.repetitions;
  j["innermost_match"] = report.innermost_match;
  j["innercore_iterations"] = report.innercore_iterations;
  j["innercore_members"] = report.innercore_members;
  nlohmann::json algos = nlohmann::json::array();
  for (const auto& t : report.timings) {
    algos.push_back({{"name", t.name},
                     {"seconds", t.seconds},
                     {"mean", t.mean},
                     {"min", t.min},
                     {"max", t.max}});
  }
  j["timings"] = algos;
  return j.dump(2) + "\n";
}

std::string bench_report_csv(const BenchReport& report) {
  std::string out = "algo,rep,seconds\n";
  for (const auto& t : report.timings)
    for (std::size_t r = 0; r < t.seconds.size(); ++r)
      out += t.name + "," + std::to_string(r) + "," + format_fixed(t.seconds[r], 6) + "\n";
  return out;
}

}  // namespace innercore
