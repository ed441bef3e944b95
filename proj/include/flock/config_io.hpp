#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "flock/engine.hpp"
#include "flock/metrics.hpp"
#include "flock/model.hpp"

namespace flock {

/// Named scenario presets: "homogeneous" (30 agents, fixed d = 10) and
/// "heterogeneous" (7 agents, drawn separations and bounds, negotiation on).
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// Applies `key = value` pairs (with [d0] / [d_min] / [d_max] sections for
/// the distributions) on top of `base`. Unknown keys are errors. A
/// `scenario` key switches the base preset before the remaining keys apply;
/// pass honor_scenario_key = false when a command-line flag already fixed
/// the preset.
ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base,
                            bool honor_scenario_key = true);
ScenarioConfig load_config_file(const std::filesystem::path& path, const ScenarioConfig& base,
                                bool honor_scenario_key = true);

/// Canonical echo of a resolved config, reloadable via parse_config to
/// reproduce the run exactly (epsilon resolved, values round-trip safe).
std::string serialize_config(const ScenarioConfig& cfg);

/// FNV-1a over the canonical echo; identifies a resolved config.
std::uint64_t config_hash(const ScenarioConfig& cfg);

/// run() plus the config hash stamped into the record.
RunRecord run_scenario(const ScenarioConfig& cfg, const MetricsSink& sink = {});

/// Metrics time series, one row per step: fixed 6-decimal values, absent
/// fields empty, locale-independent.
void write_metrics(std::span<const MetricsFrame> frames, std::ostream& out);

/// Separation-error matrix: header row of column times, then one row per
/// pair (first column the pair ordinal), out-of-range cells empty.
void write_heatmap(const HeatmapMatrix& matrix, std::ostream& out);

/// Final per-agent snapshot: position, velocity, and realized parameters.
void write_final_state(const FlockState& state, std::ostream& out);

/// Per-run output files inside `dir`: metrics.csv, heatmap.csv,
/// final_state.csv, resolved_config.ini.
void write_bundle(const ScenarioConfig& cfg, const RunRecord& record,
                  const std::filesystem::path& dir);

/// Aggregates used by the seed-sweep summary.
struct SeedSummary {
  std::uint64_t seed = 0;
  int final_components = 0;
  int final_edges = 0;
  std::optional<double> mean_conn_dist_last10;  // time-avg over final 10 s
  double max_abs_sep_error_end = 0.0;           // over pairs active at run end
  int violation_edges_last10 = 0;               // summed over final 10 s
};

SeedSummary summarize(const ScenarioConfig& cfg, const RunRecord& record);
void write_summary(std::span<const SeedSummary> rows, std::ostream& out);

/// Runs `n_seeds` consecutive seeds starting at cfg.seed, writing one bundle
/// per seed under out_dir plus summary.csv. Seeds may run in parallel;
/// outputs are identical regardless of thread count.
std::vector<SeedSummary> run_sweep(const ScenarioConfig& cfg, int n_seeds, int threads,
                                   const std::filesystem::path& out_dir);

/// Full command-line entry point; returns the process exit code.
int run_main(int argc, const char* const* argv);

}  // namespace flock
