#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace corbit {

struct AgentMetrics {
  double x, y, psi, z;
  double v_cmd, omega_cmd;
  double gamma_a, s_a, d_s;
};

struct OrbitMetrics {
  double center_x, center_y;
  double tilt;
  double a, b;
  double velocity_x, velocity_y;
};

/// One row per control tick.
struct MetricsRecord {
  double t;
  std::vector<AgentMetrics> agents;
  OrbitMetrics orbit;
};

/// Protocol flags per tick; kept alongside the metrics for summaries but not
/// part of the CSV schema.
struct FlagsRecord {
  double t;
  std::vector<std::uint8_t> fl_r, fl_h, fl_o;
};

/// CSV with a fixed column order: t, per-agent blocks in index order, then
/// the orbit block. Values are serialized with 17 significant digits so a
/// parse recovers every double bit-exactly.
void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRecord>& records);

/// Parse an emitted metrics file. Throws std::runtime_error naming the row
/// on malformed input.
std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path);

/// JSON-lines mirror of the CSV (one record object per line).
void write_metrics_jsonl(const std::filesystem::path& path,
                         const std::vector<MetricsRecord>& records);

struct RunSummary {
  std::string scenario;
  long ticks = 0;
  double dt = 0.0;
  double duration = 0.0;
  double time_all_on_orbit = -1.0;
  double time_all_ready = -1.0;
  double time_all_height = -1.0;
  double settle_time = -1.0;  // all flags set and every |D_s| < d_th
  double max_gamma_err_post_settle = -1.0;
  double max_ds_post_settle = -1.0;
  long constraint_violations = 0;
};

RunSummary summarize_run(const std::string& scenario, const std::vector<MetricsRecord>& records,
                         const std::vector<FlagsRecord>& flags, double v_a_min, double v_a_max,
                         double omega_max, double d_th, double dt);

void write_summary(const std::filesystem::path& path, const RunSummary& summary);
RunSummary read_summary(const std::filesystem::path& path);

}  // namespace corbit
