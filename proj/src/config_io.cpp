#include "flock/config_io.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace flock {

namespace {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& value, int line) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw ConfigError("config line " + std::to_string(line) + ": expected a number, got '" +
                      value + "'");
  return v;
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config line " + std::to_string(line) + ": expected true/false, got '" +
                    value + "'");
}

struct ConfigEntry {
  std::string section;  // "" for global scope
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<ConfigEntry> read_entries(std::istream& in) {
  std::vector<ConfigEntry> entries;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']')
        throw ConfigError("config line " + std::to_string(line) + ": malformed section header");
      section = trim(text.substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line) + ": expected key = value");
    entries.push_back({section, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line});
  }
  return entries;
}

void apply_distribution_key(Distribution& dist, const ConfigEntry& e) {
  if (e.key == "kind") {
    if (e.value == "fixed")
      dist.kind = Distribution::Kind::Fixed;
    else if (e.value == "uniform")
      dist.kind = Distribution::Kind::Uniform;
    else
      throw ConfigError("config line " + std::to_string(e.line) +
                        ": distribution kind must be fixed or uniform");
  } else if (e.key == "value") {
    dist.a = dist.b = parse_double(e.value, e.line);
  } else if (e.key == "lo") {
    dist.a = parse_double(e.value, e.line);
  } else if (e.key == "hi") {
    dist.b = parse_double(e.value, e.line);
  } else {
    throw ConfigError("config line " + std::to_string(e.line) + ": unknown key '" + e.key +
                      "' in section [" + e.section + "]");
  }
}

void apply_global_key(ScenarioConfig& cfg, const ConfigEntry& e) {
  const auto num = [&] { return parse_double(e.value, e.line); };
  if (e.key == "n_agents")
    cfg.n_agents = static_cast<int>(num());
  else if (e.key == "dt")
    cfg.dt = num();
  else if (e.key == "duration")
    cfg.duration = num();
  else if (e.key == "seed")
    cfg.seed = static_cast<std::uint64_t>(std::strtoull(e.value.c_str(), nullptr, 10));
  else if (e.key == "init_box")
    cfg.init_box = num();
  else if (e.key == "spawn_min_sep")
    cfg.spawn_min_sep = num();
  else if (e.key == "negotiation_enabled")
    cfg.negotiation_enabled = parse_bool(e.value, e.line);
  else if (e.key == "sensing_range")
    cfg.sensing_range = num();
  else if (e.key == "k_c")
    cfg.k_c = num();
  else if (e.key == "k_a")
    cfg.k_a = num();
  else if (e.key == "k_nx")
    cfg.k_nx = num();
  else if (e.key == "k_nv")
    cfg.k_nv = num();
  else if (e.key == "k_d")
    cfg.k_d = num();
  else if (e.key == "tau")
    cfg.tau = num();
  else if (e.key == "p")
    cfg.p = num();
  else if (e.key == "epsilon")
    cfg.epsilon = num();
  else if (e.key == "beta")
    cfg.beta = num();
  else if (e.key == "v_max")
    cfg.v_max = num();
  else if (e.key == "ref_x")
    cfg.reference.x_r.x = num();
  else if (e.key == "ref_y")
    cfg.reference.x_r.y = num();
  else if (e.key == "ref_vx")
    cfg.reference.v_r.x = num();
  else if (e.key == "ref_vy")
    cfg.reference.v_r.y = num();
  else
    throw ConfigError("config line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
}

void write_distribution(std::ostream& out, const char* name, const Distribution& d) {
  out << "\n[" << name << "]\n";
  if (d.kind == Distribution::Kind::Fixed) {
    out << "kind = fixed\n";
    out << "value = " << fmt_g17(d.a) << "\n";
  } else {
    out << "kind = uniform\n";
    out << "lo = " << fmt_g17(d.a) << "\n";
    out << "hi = " << fmt_g17(d.b) << "\n";
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot open output file: " + path.string());
  return out;
}

}  // namespace

std::vector<std::string> preset_names() { return {"homogeneous", "heterogeneous"}; }

ScenarioConfig preset(const std::string& name) {
  ScenarioConfig cfg;  // defaults already encode the 30-agent homogeneous setup
  if (name == "homogeneous") return cfg;
  if (name == "heterogeneous") {
    cfg.n_agents = 7;
    cfg.duration = 120.0;
    cfg.init_box = 40.0;
    cfg.spawn_min_sep = 5.0;
    cfg.negotiation_enabled = true;
    cfg.d0 = Distribution::uniform(5.0, 13.0);
    cfg.d_min = Distribution::uniform(5.0, 7.0);
    cfg.d_max = Distribution::uniform(9.0, 13.0);
    return cfg;
  }
  std::string valid;
  for (const std::string& p : preset_names()) valid += (valid.empty() ? "" : ", ") + p;
  throw ConfigError("unknown scenario '" + name + "'; valid scenarios: " + valid);
}

ScenarioConfig parse_config(std::istream& in, const ScenarioConfig& base,
                            bool honor_scenario_key) {
  const auto entries = read_entries(in);

  ScenarioConfig cfg = base;
  if (honor_scenario_key)
    for (const ConfigEntry& e : entries)
      if (e.section.empty() && e.key == "scenario") cfg = preset(e.value);

  for (const ConfigEntry& e : entries) {
    if (e.section.empty()) {
      if (e.key == "scenario") continue;
      apply_global_key(cfg, e);
    } else if (e.section == "d0") {
      apply_distribution_key(cfg.d0, e);
    } else if (e.section == "d_min") {
      apply_distribution_key(cfg.d_min, e);
    } else if (e.section == "d_max") {
      apply_distribution_key(cfg.d_max, e);
    } else {
      throw ConfigError("config line " + std::to_string(e.line) + ": unknown section [" +
                        e.section + "]");
    }
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::filesystem::path& path, const ScenarioConfig& base,
                                bool honor_scenario_key) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  return parse_config(in, base, honor_scenario_key);
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "# flocksim scenario (resolved)\n";
  out << "n_agents = " << cfg.n_agents << "\n";
  out << "dt = " << fmt_g17(cfg.dt) << "\n";
  out << "duration = " << fmt_g17(cfg.duration) << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "init_box = " << fmt_g17(cfg.init_box) << "\n";
  out << "spawn_min_sep = " << fmt_g17(cfg.spawn_min_sep) << "\n";
  out << "negotiation_enabled = " << (cfg.negotiation_enabled ? "true" : "false") << "\n";
  out << "sensing_range = " << fmt_g17(cfg.sensing_range) << "\n";
  out << "k_c = " << fmt_g17(cfg.k_c) << "\n";
  out << "k_a = " << fmt_g17(cfg.k_a) << "\n";
  out << "k_nx = " << fmt_g17(cfg.k_nx) << "\n";
  out << "k_nv = " << fmt_g17(cfg.k_nv) << "\n";
  out << "k_d = " << fmt_g17(cfg.k_d) << "\n";
  out << "tau = " << fmt_g17(cfg.tau) << "\n";
  out << "p = " << fmt_g17(cfg.p) << "\n";
  out << "epsilon = " << fmt_g17(cfg.resolved_epsilon()) << "\n";
  out << "beta = " << fmt_g17(cfg.beta) << "\n";
  out << "v_max = " << fmt_g17(cfg.v_max) << "\n";
  out << "ref_x = " << fmt_g17(cfg.reference.x_r.x) << "\n";
  out << "ref_y = " << fmt_g17(cfg.reference.x_r.y) << "\n";
  out << "ref_vx = " << fmt_g17(cfg.reference.v_r.x) << "\n";
  out << "ref_vy = " << fmt_g17(cfg.reference.v_r.y) << "\n";
  write_distribution(out, "d0", cfg.d0);
  write_distribution(out, "d_min", cfg.d_min);
  write_distribution(out, "d_max", cfg.d_max);
  return out.str();
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char c : serialize_config(cfg)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

RunRecord run_scenario(const ScenarioConfig& cfg, const MetricsSink& sink) {
  RunRecord record = run(cfg, sink);
  record.config_hash = config_hash(cfg);
  return record;
}

void write_metrics(std::span<const MetricsFrame> frames, std::ostream& out) {
  out << "time,n_edges,n_components,mean_all_dist,mean_conn_dist,min_conn_dist,"
         "max_conn_dist,n_violation_edges\n";
  const auto opt6 = [](const std::optional<double>& v) { return v ? fmt_fixed6(*v) : ""; };
  for (const MetricsFrame& f : frames) {
    out << fmt_fixed6(f.time) << ',' << f.n_edges << ',' << f.n_components << ','
        << opt6(f.mean_all_dist) << ',' << opt6(f.mean_conn_dist) << ','
        << opt6(f.min_conn_dist) << ',' << opt6(f.max_conn_dist) << ','
        << f.n_violation_edges << '\n';
  }
}

void write_heatmap(const HeatmapMatrix& matrix, std::ostream& out) {
  out << "pair";
  for (const double t : matrix.times) out << ',' << fmt_fixed6(t);
  out << '\n';
  for (int r = 0; r < matrix.rows(); ++r) {
    out << r;
    for (int c = 0; c < matrix.cols(); ++c) {
      const double v = matrix.at(r, c);
      out << ',';
      if (!std::isnan(v)) out << fmt_fixed6(v);
    }
    out << '\n';
  }
}

void write_final_state(const FlockState& state, std::ostream& out) {
  out << "agent,x,y,vx,vy,d_min,d_max,d_init\n";
  for (int i = 0; i < state.n(); ++i) {
    const AgentState& a = state.agents[i];
    const AgentParams& p = state.params[i];
    out << i << ',' << fmt_fixed6(a.position.x) << ',' << fmt_fixed6(a.position.y) << ','
        << fmt_fixed6(a.velocity.x) << ',' << fmt_fixed6(a.velocity.y) << ','
        << fmt_fixed6(p.d_min) << ',' << fmt_fixed6(p.d_max) << ','
        << fmt_fixed6(state.initial_sep[i]) << '\n';
  }
}

void write_bundle(const ScenarioConfig& cfg, const RunRecord& record,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_output(dir / "metrics.csv");
    write_metrics(record.frames, out);
  }
  {
    auto out = open_output(dir / "heatmap.csv");
    write_heatmap(heatmap(record), out);
  }
  {
    auto out = open_output(dir / "final_state.csv");
    write_final_state(record.final_state, out);
  }
  {
    auto out = open_output(dir / "resolved_config.ini");
    out << serialize_config(cfg);
  }
}

SeedSummary summarize(const ScenarioConfig& cfg, const RunRecord& record) {
  SeedSummary s;
  s.seed = record.seed;
  if (record.frames.empty()) return s;

  const MetricsFrame& last = record.frames.back();
  s.final_components = last.n_components;
  s.final_edges = last.n_edges;
  for (const auto& [id, e_s] : last.sep_error_row)
    s.max_abs_sep_error_end = std::max(s.max_abs_sep_error_end, std::abs(e_s));

  const double cutoff = last.time - 10.0 + 1e-9;
  double conn_sum = 0.0;
  int conn_count = 0;
  for (const MetricsFrame& f : record.frames) {
    if (f.time < cutoff) continue;
    s.violation_edges_last10 += f.n_violation_edges;
    if (f.mean_conn_dist) {
      conn_sum += *f.mean_conn_dist;
      ++conn_count;
    }
  }
  if (conn_count > 0) s.mean_conn_dist_last10 = conn_sum / conn_count;
  (void)cfg;
  return s;
}

void write_summary(std::span<const SeedSummary> rows, std::ostream& out) {
  out << "seed,final_components,final_edges,mean_conn_dist_last10,max_abs_sep_error_end,"
         "violation_edges_last10\n";
  for (const SeedSummary& s : rows) {
    out << s.seed << ',' << s.final_components << ',' << s.final_edges << ','
        << (s.mean_conn_dist_last10 ? fmt_fixed6(*s.mean_conn_dist_last10) : "") << ','
        << fmt_fixed6(s.max_abs_sep_error_end) << ',' << s.violation_edges_last10 << '\n';
  }
}

std::vector<SeedSummary> run_sweep(const ScenarioConfig& cfg, int n_seeds, int threads,
                                   const std::filesystem::path& out_dir) {
  if (n_seeds < 1) throw ConfigError("sweep-seeds must be at least 1");
  std::filesystem::create_directories(out_dir);

  std::vector<SeedSummary> summaries(n_seeds);
  std::vector<std::exception_ptr> errors(n_seeds);
  std::atomic<int> next{0};

  const auto worker = [&] {
    for (int k = next.fetch_add(1); k < n_seeds; k = next.fetch_add(1)) {
      try {
        ScenarioConfig seeded = cfg;
        seeded.seed = cfg.seed + static_cast<std::uint64_t>(k);
        const RunRecord record = run_scenario(validate_config(seeded), {});
        write_bundle(seeded, record, out_dir / ("seed_" + std::to_string(seeded.seed)));
        summaries[k] = summarize(seeded, record);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  const int pool = std::clamp(threads, 1, n_seeds);
  std::vector<std::thread> workers;
  workers.reserve(pool);
  for (int t = 0; t < pool; ++t) workers.emplace_back(worker);
  for (std::thread& t : workers) t.join();

  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  auto out = open_output(out_dir / "summary.csv");
  write_summary(summaries, out);
  return summaries;
}

}  // namespace flock
