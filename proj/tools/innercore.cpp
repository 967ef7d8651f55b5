#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "innercore/errors.hpp"
#include "innercore/pipeline.hpp"

namespace ic = innercore;

int main(int argc, char** argv) {
  ic::RunConfig cfg;

  // The config file (or INNERCORE_CONFIG) seeds the defaults; flags parsed
  // afterwards override it.
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    const std::string_view a = argv[i] ? argv[i] : "";
    if (a == "--config" && i + 1 < argc) config_path = argv[i + 1];
    else if (a.rfind("--config=", 0) == 0) config_path = std::string(a.substr(9));
  }
  try {
    ic::load_config_file(cfg, config_path);
  } catch (const ic::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ic::kExitInputError;
  }

  CLI::App app{"Data-depth cores, expansion/decay patterns, and motif ranking "
               "for temporal transaction graphs"};
  app.require_subcommand(1);
  std::string config_opt;
  app.add_option("--config", config_opt,
                 "JSON config file; command-line flags override it "
                 "(INNERCORE_CONFIG is the fallback)");

  std::vector<std::string> token_decimals_kv;

  auto add_out = [&](CLI::App* s) {
    s->fallthrough();
    s->add_option("--out-dir", cfg.out_dir, "output directory")->capture_default_str();
    s->add_option("--threads", cfg.threads, "worker threads for per-day stages (1 = sequential)")
        ->capture_default_str();
    s->add_flag("--no-timestamp", cfg.no_timestamp,
                "omit the generated-at header line from outputs");
    s->add_flag("--json", cfg.json_mirror, "mirror CSV outputs as JSON files");
  };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", cfg.input, "transfer CSV with a header row");
    s->add_option("--cache", cfg.cache,
                  "binary snapshot cache; read when it exists, written by ingest");
    s->add_option("--col-from", cfg.schema.from, "sender column name")->capture_default_str();
    s->add_option("--col-to", cfg.schema.to, "receiver column name")->capture_default_str();
    s->add_option("--col-value", cfg.schema.value, "amount column name")->capture_default_str();
    s->add_option("--col-timestamp", cfg.schema.timestamp, "unix-seconds column name")
        ->capture_default_str();
    s->add_option("--col-token", cfg.schema.token,
                  "token symbol column (empty = single-token input)");
    s->add_option("--tz-offset-minutes", cfg.tz_offset_minutes,
                  "minutes added to timestamps before day bucketing")
        ->capture_default_str();
    s->add_option("--decimals", cfg.decimals, "token decimals used to scale raw values")
        ->capture_default_str();
    s->add_option("--token-decimals", token_decimals_kv,
                  "per-token decimals override as SYMBOL=N (repeatable)");
    s->add_flag("--keep-zero-weight", cfg.keep_zero_weight, "keep zero-amount transfers");
    s->add_option("--malformed-tolerance", cfg.malformed_tolerance,
                  "max tolerated fraction of malformed rows")
        ->capture_default_str();
  };
  auto add_core = [&](CLI::App* s) {
    s->add_option("--features", cfg.features, "node feature columns, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    s->add_option("--epsilon", cfg.epsilon, "depth threshold in (0,1]")->capture_default_str();
  };
  auto add_series = [&](CLI::App* s) {
    s->add_option("--history", cfg.history, "days of history for expansion/decay")
        ->capture_default_str();
    s->add_option("--window", cfg.window, "trailing days used to grade levels")
        ->capture_default_str();
    s->add_option("--tau", cfg.tau, "relative band around the median for MID")
        ->capture_default_str();
    s->add_option("--lag", cfg.lag, "max days between paired expansion/decay highs")
        ->capture_default_str();
    s->add_flag("--normalized", cfg.normalized,
                "append expansion_norm/decay_norm columns (counts divided by inner size)");
  };
  auto add_motif = [&](CLI::App* s) {
    s->add_option("--motif-days", cfg.motif_days,
                  "'anomaly' = days inside anomaly windows, 'all' = every day")
        ->capture_default_str();
  };
  auto add_rank = [&](CLI::App* s) {
    s->add_flag("--combine-m5", cfg.combine_m5, "pool C5a and C5b into one C5 role");
    s->add_option("--labels", cfg.labels, "address,label CSV used to annotate rankings");
  };

  CLI::App* ingest =
      app.add_subcommand("ingest", "parse a transfer CSV into day snapshots and cache them");
  add_out(ingest);
  add_input(ingest);

  CLI::App* inner =
      app.add_subcommand("innercore", "per-day InnerCore membership and peel traces");
  add_out(inner);
  add_input(inner);
  add_core(inner);

  CLI::App* series =
      app.add_subcommand("series", "daily inner-core expansion/decay series");
  add_out(series);
  add_input(series);
  add_core(series);
  add_series(series);

  CLI::App* patterns =
      app.add_subcommand("patterns", "series plus pattern labels and anomaly day pairs");
  add_out(patterns);
  add_input(patterns);
  add_core(patterns);
  add_series(patterns);

  CLI::App* motifs =
      app.add_subcommand("motifs", "centered 3-node motif counts on InnerCore subgraphs");
  add_out(motifs);
  add_input(motifs);
  add_core(motifs);
  add_series(motifs);
  add_motif(motifs);

  CLI::App* rank = app.add_subcommand("rank", "NF-IAF scores and percentile ranks per role");
  add_out(rank);
  add_input(rank);
  add_core(rank);
  add_series(rank);
  add_motif(rank);
  add_rank(rank);

  CLI::App* pipeline =
      app.add_subcommand("pipeline", "full run: cores, series, anomalies, motifs, rankings");
  add_out(pipeline);
  add_input(pipeline);
  add_core(pipeline);
  add_series(pipeline);
  add_motif(pipeline);
  add_rank(pipeline);

  CLI::App* bench =
      app.add_subcommand("bench", "time core algorithms on a synthetic heavy-tail graph");
  add_out(bench);
  bench->add_option("--nodes", cfg.bench_nodes, "synthetic node count")->capture_default_str();
  bench->add_option("--edges", cfg.bench_edges, "synthetic edge count")->capture_default_str();
  bench->add_option("--exponent", cfg.bench_exponent, "preferential-attachment exponent")
      ->capture_default_str();
  bench->add_option("--wmu", cfg.bench_wmu, "log-normal weight mu")->capture_default_str();
  bench->add_option("--wsigma", cfg.bench_wsigma, "log-normal weight sigma")
      ->capture_default_str();
  bench->add_option("--reps", cfg.bench_reps, "timed repetitions per algorithm")
      ->capture_default_str();
  bench->add_option("--algos", cfg.bench_algos, "innercore, alphacore, kcore")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  bench->add_option("--epsilon", cfg.epsilon, "InnerCore depth threshold")->capture_default_str();
  bench->add_option("--alpha-start", cfg.alpha_start, "AlphaCore first level")
      ->capture_default_str();
  bench->add_option("--alpha-step", cfg.alpha_step, "AlphaCore level step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ic::kExitInputError;
  }

  try {
    for (const auto& kv : token_decimals_kv) {
      const auto eq = kv.find('=');
      int dec = 0;
      bool ok = eq != std::string::npos && eq > 0;
      if (ok) {
        try {
          dec = std::stoi(kv.substr(eq + 1));
        } catch (...) {
          ok = false;
        }
      }
      if (!ok) throw ic::InputError("--token-decimals expects SYMBOL=N, got '" + kv + "'");
      cfg.token_decimals[kv.substr(0, eq)] = dec;
    }

    if (ingest->parsed()) ic::cmd_ingest(cfg);
    else if (inner->parsed()) ic::cmd_innercore(cfg);
    else if (series->parsed()) ic::cmd_series(cfg);
    else if (patterns->parsed()) ic::cmd_patterns(cfg);
    else if (motifs->parsed()) ic::cmd_motifs(cfg);
    else if (rank->parsed()) ic::cmd_rank(cfg);
    else if (pipeline->parsed()) ic::cmd_pipeline(cfg);
    else if (bench->parsed()) ic::cmd_bench(cfg);
    return ic::kExitOk;
  } catch (const ic::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ic::kExitInputError;
  } catch (const ic::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return ic::kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return ic::kExitInternal;
  }
}
