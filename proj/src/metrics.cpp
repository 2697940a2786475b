#include "corbit/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace corbit {
namespace {

constexpr const char* kAgentFields[] = {"x",         "y",     "psi", "z",  "v_cmd",
                                        "omega_cmd", "gamma", "s",   "d_s"};
constexpr int kAgentFieldCount = 9;
constexpr const char* kOrbitHeader =
    "orbit_cx,orbit_cy,orbit_tilt,orbit_a,orbit_b,orbit_vx,orbit_vy";
constexpr int kOrbitFieldCount = 7;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string header_for(int agent_count) {
  std::string h = "t";
  for (int i = 1; i <= agent_count; ++i) {
    for (const char* f : kAgentFields) {
      h += ",a" + std::to_string(i) + "_" + f;
    }
  }
  h += ",";
  h += kOrbitHeader;
  return h;
}

std::vector<double> parse_row(const std::string& line, std::size_t row, std::size_t expected) {
  std::vector<double> out;
  out.reserve(expected);
  const char* p = line.c_str();
  while (true) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) {
      throw std::runtime_error("metrics csv: row " + std::to_string(row) + ": bad number");
    }
    out.push_back(v);
    p = end;
    if (*p == '\0') break;
    if (*p != ',') {
      throw std::runtime_error("metrics csv: row " + std::to_string(row) + ": bad separator");
    }
    ++p;
  }
  if (out.size() != expected) {
    throw std::runtime_error("metrics csv: row " + std::to_string(row) + ": expected " +
                             std::to_string(expected) + " fields, got " +
                             std::to_string(out.size()));
  }
  return out;
}

}  // namespace

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  const int agent_count = records.empty() ? 0 : static_cast<int>(records.front().agents.size());
  out << header_for(agent_count) << "\n";
  for (const auto& rec : records) {
    out << format_double(rec.t);
    for (const auto& a : rec.agents) {
      const double vals[] = {a.x, a.y, a.psi, a.z, a.v_cmd, a.omega_cmd, a.gamma_a, a.s_a, a.d_s};
      for (double v : vals) out << ',' << format_double(v);
    }
    const auto& o = rec.orbit;
    const double ovals[] = {o.center_x, o.center_y, o.tilt, o.a, o.b, o.velocity_x, o.velocity_y};
    for (double v : ovals) out << ',' << format_double(v);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open metrics csv: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("metrics csv: missing header");
  // infer the agent count from the column layout
  int columns = 1;
  for (char c : line) columns += c == ',';
  const int agent_cols = columns - 1 - kOrbitFieldCount;
  if (agent_cols < 0 || agent_cols % kAgentFieldCount != 0) {
    throw std::runtime_error("metrics csv: unexpected column count in header");
  }
  const int agent_count = agent_cols / kAgentFieldCount;
  if (line != header_for(agent_count)) {
    throw std::runtime_error("metrics csv: header does not match the fixed schema");
  }
  std::vector<MetricsRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto vals = parse_row(line, row, static_cast<std::size_t>(columns));
    MetricsRecord rec;
    rec.t = vals[0];
    std::size_t k = 1;
    rec.agents.resize(agent_count);
    for (auto& a : rec.agents) {
      a.x = vals[k++];
      a.y = vals[k++];
      a.psi = vals[k++];
      a.z = vals[k++];
      a.v_cmd = vals[k++];
      a.omega_cmd = vals[k++];
      a.gamma_a = vals[k++];
      a.s_a = vals[k++];
      a.d_s = vals[k++];
    }
    rec.orbit.center_x = vals[k++];
    rec.orbit.center_y = vals[k++];
    rec.orbit.tilt = vals[k++];
    rec.orbit.a = vals[k++];
    rec.orbit.b = vals[k++];
    rec.orbit.velocity_x = vals[k++];
    rec.orbit.velocity_y = vals[k++];
    records.push_back(std::move(rec));
  }
  return records;
}

void write_metrics_jsonl(const std::filesystem::path& path,
                         const std::vector<MetricsRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  for (const auto& rec : records) {
    out << "{\"t\":" << format_double(rec.t) << ",\"agents\":[";
    for (std::size_t i = 0; i < rec.agents.size(); ++i) {
      const auto& a = rec.agents[i];
      if (i) out << ',';
      out << "{\"x\":" << format_double(a.x) << ",\"y\":" << format_double(a.y)
          << ",\"psi\":" << format_double(a.psi) << ",\"z\":" << format_double(a.z)
          << ",\"v_cmd\":" << format_double(a.v_cmd)
          << ",\"omega_cmd\":" << format_double(a.omega_cmd)
          << ",\"gamma\":" << format_double(a.gamma_a) << ",\"s\":" << format_double(a.s_a)
          << ",\"d_s\":" << format_double(a.d_s) << "}";
    }
    const auto& o = rec.orbit;
    out << "],\"orbit\":{\"cx\":" << format_double(o.center_x)
        << ",\"cy\":" << format_double(o.center_y) << ",\"tilt\":" << format_double(o.tilt)
        << ",\"a\":" << format_double(o.a) << ",\"b\":" << format_double(o.b)
        << ",\"vx\":" << format_double(o.velocity_x) << ",\"vy\":" << format_double(o.velocity_y)
        << "}}\n";
  }
}

RunSummary summarize_run(const std::string& scenario, const std::vector<MetricsRecord>& records,
                         const std::vector<FlagsRecord>& flags, double v_a_min, double v_a_max,
                         double omega_max, double d_th, double dt) {
  RunSummary s;
  s.scenario = scenario;
  s.ticks = static_cast<long>(records.size());
  s.dt = dt;
  s.duration = static_cast<double>(s.ticks) * dt;
  const bool have_agents = !records.empty() && !records.front().agents.empty();

  for (const auto& rec : records) {
    for (const auto& a : rec.agents) {
      if (a.v_cmd < v_a_min || a.v_cmd > v_a_max || std::abs(a.omega_cmd) > omega_max) {
        ++s.constraint_violations;
      }
    }
  }
  if (!have_agents || flags.size() != records.size()) return s;

  const auto all_set = [](const std::vector<std::uint8_t>& v) {
    for (auto b : v) {
      if (!b) return false;
    }
    return true;
  };
  std::size_t settle_idx = records.size();
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& fl = flags[k];
    if (s.time_all_on_orbit < 0.0 && all_set(fl.fl_o)) s.time_all_on_orbit = records[k].t;
    if (s.time_all_ready < 0.0 && all_set(fl.fl_r)) s.time_all_ready = records[k].t;
    if (s.time_all_height < 0.0 && all_set(fl.fl_h)) s.time_all_height = records[k].t;
    if (s.settle_time < 0.0 && all_set(fl.fl_r) && all_set(fl.fl_h) && all_set(fl.fl_o)) {
      bool spaced = true;
      for (const auto& a : records[k].agents) spaced = spaced && std::abs(a.d_s) < d_th;
      if (spaced) {
        s.settle_time = records[k].t;
        settle_idx = k;
      }
    }
  }
  if (settle_idx < records.size()) {
    double g = 0.0, ds = 0.0;
    for (std::size_t k = settle_idx; k < records.size(); ++k) {
      for (const auto& a : records[k].agents) {
        g = std::max(g, std::abs(a.gamma_a - 1.0));
        ds = std::max(ds, std::abs(a.d_s));
      }
    }
    s.max_gamma_err_post_settle = g;
    s.max_ds_post_settle = ds;
  }
  return s;
}

void write_summary(const std::filesystem::path& path, const RunSummary& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "scenario: " << s.scenario << "\n";
  out << "ticks: " << s.ticks << "\n";
  out << "dt: " << format_double(s.dt) << "\n";
  out << "duration: " << format_double(s.duration) << "\n";
  out << "time_all_on_orbit: " << format_double(s.time_all_on_orbit) << "\n";
  out << "time_all_ready: " << format_double(s.time_all_ready) << "\n";
  out << "time_all_height: " << format_double(s.time_all_height) << "\n";
  out << "settle_time: " << format_double(s.settle_time) << "\n";
  out << "max_gamma_err_post_settle: " << format_double(s.max_gamma_err_post_settle) << "\n";
  out << "max_ds_post_settle: " << format_double(s.max_ds_post_settle) << "\n";
  out << "constraint_violations: " << s.constraint_violations << "\n";
}

RunSummary read_summary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open summary: " + path.string());
  RunSummary s;
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 2);
    if (key == "scenario") s.scenario = value;
    else if (key == "ticks") s.ticks = std::stol(value);
    else if (key == "dt") s.dt = std::stod(value);
    else if (key == "duration") s.duration = std::stod(value);
    else if (key == "time_all_on_orbit") s.time_all_on_orbit = std::stod(value);
    else if (key == "time_all_ready") s.time_all_ready = std::stod(value);
    else if (key == "time_all_height") s.time_all_height = std::stod(value);
    else if (key == "settle_time") s.settle_time = std::stod(value);
    else if (key == "max_gamma_err_post_settle") s.max_gamma_err_post_settle = std::stod(value);
    else if (key == "max_ds_post_settle") s.max_ds_post_settle = std::stod(value);
    else if (key == "constraint_violations") s.constraint_violations = std::stol(value);
  }
  return s;
}

}  // namespace corbit
