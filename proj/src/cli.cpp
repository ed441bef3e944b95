#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "flock/config_io.hpp"

namespace flock {

namespace {

void print_summary_line(const SeedSummary& s, std::size_t steps) {
  std::printf("seed=%llu steps=%zu final_components=%d final_edges=%d",
              static_cast<unsigned long long>(s.seed), steps, s.final_components,
              s.final_edges);
  if (s.mean_conn_dist_last10)
    std::printf(" mean_conn_dist_last10s=%.6f", *s.mean_conn_dist_last10);
  std::printf(" max_abs_sep_error_end=%.6f violation_edges_last10s=%d\n",
              s.max_abs_sep_error_end, s.violation_edges_last10);
}

}  // namespace

int run_main(int argc, const char* const* argv) {
  CLI::App app{"flocksim: gradient-based lattice flocking with local negotiation of "
               "heterogeneous separation parameters"};

  std::string scenario;
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  double duration = 0.0;
  double dt = 0.0;
  bool no_negotiation = false;
  int sweep_seeds = 0;
  int threads = 1;

  auto* opt_scenario =
      app.add_option("--scenario", scenario, "Preset: homogeneous or heterogeneous");
  auto* opt_config = app.add_option("--config", config_path, "Configuration file (key = value)");
  auto* opt_seed = app.add_option("--seed", seed, "RNG seed");
  auto* opt_duration = app.add_option("--duration", duration, "Simulated time [s]");
  auto* opt_dt = app.add_option("--dt", dt, "Sample time [s]");
  app.add_option("--out", out_dir, "Output directory for metrics/heatmap/state/config files");
  app.add_flag("--no-negotiation", no_negotiation, "Freeze every agent's desired separation");
  app.add_option("--sweep-seeds", sweep_seeds, "Run N consecutive seeds and write a summary");
  app.add_option("--threads", threads, "Worker threads for --sweep-seeds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    ScenarioConfig cfg = preset(opt_scenario->count() ? scenario : "homogeneous");
    if (opt_config->count())
      cfg = load_config_file(config_path, cfg,
                             /*honor_scenario_key=*/!opt_scenario->count());
    if (opt_seed->count()) cfg.seed = seed;
    if (opt_duration->count()) cfg.duration = duration;
    if (opt_dt->count()) cfg.dt = dt;
    if (no_negotiation) cfg.negotiation_enabled = false;
    validate_config(cfg);

    if (sweep_seeds > 0) {
      if (out_dir.empty()) throw ConfigError("--sweep-seeds requires --out");
      const auto summaries = run_sweep(cfg, sweep_seeds, threads, out_dir);
      for (const SeedSummary& s : summaries) print_summary_line(s, step_count(cfg));
      std::printf("wrote %d seed bundles and summary.csv under %s\n", sweep_seeds,
                  out_dir.c_str());
      return 0;
    }

    const RunRecord record = run_scenario(cfg, {});
    print_summary_line(summarize(cfg, record), record.frames.size());
    if (!out_dir.empty()) {
      write_bundle(cfg, record, out_dir);
      std::printf("wrote %s\n", out_dir.c_str());
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "flocksim: config error: " << e.what() << "\n";
    return 1;
  } catch (const SimError& e) {
    std::cerr << "flocksim: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "flocksim: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace flock
