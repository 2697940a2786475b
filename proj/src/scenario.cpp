#include "corbit/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "corbit/speed_control.hpp"

namespace corbit {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw std::runtime_error("scenario: " + field + ": " + message);
}

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) fail(context.empty() ? item.key() : context + "." + item.key(), "unknown key");
  }
}

const json& require(const json& obj, const std::string& context, const char* key) {
  if (!obj.contains(key)) fail(context.empty() ? key : context + "." + key, "missing");
  return obj.at(key);
}

double number(const json& obj, const std::string& context, const char* key) {
  const json& v = require(obj, context, key);
  if (!v.is_number()) fail(context + "." + key, "must be a number");
  return v.get<double>();
}

int integer(const json& obj, const std::string& context, const char* key) {
  const json& v = require(obj, context, key);
  if (!v.is_number_integer()) fail(context + "." + key, "must be an integer");
  return v.get<int>();
}

std::string text(const json& obj, const std::string& context, const char* key) {
  const json& v = require(obj, context, key);
  if (!v.is_string()) fail(context + "." + key, "must be a string");
  return v.get<std::string>();
}

std::vector<Eigen::Vector2d> point_list(const json& arr, const std::string& context) {
  if (!arr.is_array()) fail(context, "must be an array of [x, y] pairs");
  std::vector<Eigen::Vector2d> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      fail(context, "must be an array of [x, y] pairs");
    }
    out.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return out;
}

SpeedProfile parse_speed_profile(const json& obj, const std::string& context) {
  check_keys(obj, context, {"kind", "v", "amplitude", "period"});
  SpeedProfile profile;
  const std::string kind = text(obj, context, "kind");
  if (kind == "stationary") {
    profile.kind = SpeedProfile::Kind::stationary;
  } else if (kind == "constant") {
    profile.kind = SpeedProfile::Kind::constant;
    profile.v = number(obj, context, "v");
    if (profile.v < 0.0) fail(context + ".v", "must be >= 0");
  } else if (kind == "sinusoid") {
    profile.kind = SpeedProfile::Kind::sinusoid;
    profile.v = number(obj, context, "v");
    profile.amplitude = number(obj, context, "amplitude");
    profile.period = number(obj, context, "period");
    if (profile.period <= 0.0) fail(context + ".period", "must be > 0");
    if (profile.v - std::abs(profile.amplitude) < 0.0) {
      fail(context + ".amplitude", "speed profile dips below zero");
    }
  } else {
    fail(context + ".kind", "must be stationary, constant or sinusoid");
  }
  return profile;
}

ConvoyModel parse_convoy(const json& obj, double v_t_max) {
  check_keys(obj, "convoy", {"n_t", "spacing", "path", "speed_profile"});
  ConvoyModel model;
  model.vehicle_count = integer(obj, "convoy", "n_t");
  if (model.vehicle_count < 2) fail("convoy.n_t", "need at least 2 vehicles");

  const json& path = require(obj, "convoy", "path");
  const std::string kind = text(path, "convoy.path", "kind");
  if (kind == "stationary") {
    check_keys(path, "convoy.path", {"kind", "positions"});
    model.kind = PathKind::stationary;
    model.fixed_positions = point_list(require(path, "convoy.path", "positions"),
                                       "convoy.path.positions");
    if (static_cast<int>(model.fixed_positions.size()) != model.vehicle_count) {
      fail("convoy.path.positions", "size must equal n_t");
    }
  } else if (kind == "curve") {
    check_keys(path, "convoy.path", {"kind", "amplitude", "wavelength", "start_param"});
    model.kind = PathKind::curve;
    model.curve_amplitude = number(path, "convoy.path", "amplitude");
    model.curve_wavelength = number(path, "convoy.path", "wavelength");
    model.start_param = number(path, "convoy.path", "start_param");
    if (model.curve_wavelength <= 0.0) fail("convoy.path.wavelength", "must be > 0");
  } else if (kind == "lissajous") {
    check_keys(path, "convoy.path", {"kind", "amplitude_x", "amplitude_y", "start_param"});
    model.kind = PathKind::lissajous;
    model.liss_ax = number(path, "convoy.path", "amplitude_x");
    model.liss_ay = number(path, "convoy.path", "amplitude_y");
    model.start_param = number(path, "convoy.path", "start_param");
    if (model.liss_ax <= 0.0) fail("convoy.path.amplitude_x", "must be > 0");
    if (model.liss_ay <= 0.0) fail("convoy.path.amplitude_y", "must be > 0");
  } else if (kind == "waypoints") {
    check_keys(path, "convoy.path", {"kind", "points", "loop", "start_param"});
    model.kind = PathKind::waypoints;
    model.waypoints = point_list(require(path, "convoy.path", "points"), "convoy.path.points");
    if (model.waypoints.empty()) fail("convoy.path.points", "waypoint list is empty");
    if (model.waypoints.size() < 2) fail("convoy.path.points", "need at least 2 waypoints");
    const json& loop = require(path, "convoy.path", "loop");
    if (!loop.is_boolean()) fail("convoy.path.loop", "must be a boolean");
    model.loop = loop.get<bool>();
    model.start_param = number(path, "convoy.path", "start_param");
  } else {
    fail("convoy.path.kind", "must be stationary, curve, lissajous or waypoints");
  }

  if (model.kind != PathKind::stationary) {
    model.spacing = number(obj, "convoy", "spacing");
    if (model.spacing <= 0.0) fail("convoy.spacing", "must be > 0");
  } else if (obj.contains("spacing")) {
    model.spacing = number(obj, "convoy", "spacing");
  }

  model.speed = parse_speed_profile(require(obj, "convoy", "speed_profile"),
                                    "convoy.speed_profile");
  if (model.speed.peak() > v_t_max) {
    fail("convoy.speed_profile", "peak speed exceeds v_t_max");
  }
  if (model.kind == PathKind::stationary &&
      model.speed.kind != SpeedProfile::Kind::stationary) {
    fail("convoy.speed_profile.kind", "stationary path requires a stationary profile");
  }
  return model;
}

AgentInitConfig parse_init(const json& obj, int agent_count) {
  check_keys(obj, "agents.init", {"kind", "seed", "half_extent", "poses"});
  AgentInitConfig init;
  const std::string kind = text(obj, "agents.init", "kind");
  if (kind == "random_box") {
    init.kind = AgentInitConfig::Kind::random_box;
    const json& seed = require(obj, "agents.init", "seed");
    if (!seed.is_number_unsigned()) fail("agents.init.seed", "must be a non-negative integer");
    init.seed = seed.get<std::uint64_t>();
    init.half_extent = number(obj, "agents.init", "half_extent");
    if (init.half_extent <= 0.0) fail("agents.init.half_extent", "must be > 0");
  } else if (kind == "poses") {
    init.kind = AgentInitConfig::Kind::poses;
    const json& poses = require(obj, "agents.init", "poses");
    if (!poses.is_array()) fail("agents.init.poses", "must be an array of [x, y, psi]");
    for (const auto& p : poses) {
      if (!p.is_array() || p.size() != 3) fail("agents.init.poses", "entries must be [x, y, psi]");
      init.poses.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    if (static_cast<int>(init.poses.size()) != agent_count) {
      fail("agents.init.poses", "size must equal n_a");
    }
  } else {
    fail("agents.init.kind", "must be random_box or poses");
  }
  return init;
}

ScenarioConfig parse(const json& root) {
  check_keys(root, "", {"name", "convoy", "v_t_max", "agents", "gains", "guidance_law",
                        "thresholds", "loop", "estimation", "planner", "output_dir"});
  ScenarioConfig cfg;
  cfg.name = text(root, "", "name");
  if (cfg.name.empty()) fail("name", "must be non-empty");

  cfg.v_t_max = number(root, "", "v_t_max");
  if (cfg.v_t_max < 0.0) fail("v_t_max", "must be >= 0");
  cfg.convoy = parse_convoy(require(root, "", "convoy"), cfg.v_t_max);

  const json& agents = require(root, "", "agents");
  check_keys(agents, "agents", {"n_a", "v_a_min", "v_a_max", "omega_max", "d_c",
                                "mission_altitude", "altitude_step", "init"});
  cfg.agent_count = integer(agents, "agents", "n_a");
  if (cfg.agent_count < 0) fail("agents.n_a", "must be >= 0");
  cfg.v_a_min = number(agents, "agents", "v_a_min");
  cfg.v_a_max = number(agents, "agents", "v_a_max");
  cfg.omega_max = number(agents, "agents", "omega_max");
  if (cfg.omega_max <= 0.0) fail("agents.omega_max", "must be > 0");
  const int d_c = integer(agents, "agents", "d_c");
  if (d_c != -1 && d_c != 1) fail("agents.d_c", "must be -1 or 1");
  cfg.direction = d_c == 1 ? Direction::counter_clockwise : Direction::clockwise;
  cfg.mission_altitude = number(agents, "agents", "mission_altitude");
  cfg.altitude_step = number(agents, "agents", "altitude_step");
  if (cfg.altitude_step < 0.0) fail("agents.altitude_step", "must be >= 0");
  if (cfg.agent_count > 0) cfg.init = parse_init(require(agents, "agents", "init"),
                                                 cfg.agent_count);

  const json& gains = require(root, "", "gains");
  check_keys(gains, "gains", {"k_s", "k_psi", "k_gamma", "delta"});
  cfg.k_s = number(gains, "gains", "k_s");
  cfg.k_psi = number(gains, "gains", "k_psi");
  cfg.k_gamma = number(gains, "gains", "k_gamma");
  cfg.delta = number(gains, "gains", "delta");
  if (cfg.k_s <= 0.0) fail("gains.k_s", "must be > 0");
  if (cfg.k_psi <= 0.0) fail("gains.k_psi", "must be > 0");
  if (cfg.k_gamma <= 0.0) fail("gains.k_gamma", "must be > 0");
  if (!(cfg.delta > 0.0 && cfg.delta <= 1.0)) fail("gains.delta", "must lie in (0, 1]");

  if (root.contains("guidance_law")) {
    const std::string law = text(root, "", "guidance_law");
    if (law == "curvature_weighted") cfg.guidance_law = GuidanceLaw::curvature_weighted;
    else if (law == "constant_gain") cfg.guidance_law = GuidanceLaw::constant_gain;
    else fail("guidance_law", "must be curvature_weighted or constant_gain");
  }

  const json& thresholds = require(root, "", "thresholds");
  check_keys(thresholds, "thresholds", {"gamma_th", "d_th"});
  cfg.gamma_th = number(thresholds, "thresholds", "gamma_th");
  cfg.d_th = number(thresholds, "thresholds", "d_th");
  if (cfg.gamma_th <= 0.0) fail("thresholds.gamma_th", "must be > 0");
  if (cfg.d_th <= 0.0) fail("thresholds.d_th", "must be > 0");

  const json& loop = require(root, "", "loop");
  check_keys(loop, "loop", {"dt", "duration", "integrator"});
  cfg.dt = number(loop, "loop", "dt");
  cfg.duration = number(loop, "loop", "duration");
  if (cfg.dt <= 0.0) fail("loop.dt", "must be > 0");
  if (cfg.duration < 0.0) fail("loop.duration", "must be >= 0");
  if (loop.contains("integrator")) {
    const std::string integ = text(loop, "loop", "integrator");
    if (integ == "rk4") cfg.integrator = Integrator::rk4;
    else if (integ == "euler") cfg.integrator = Integrator::euler;
    else fail("loop.integrator", "must be rk4 or euler");
  }

  const json& estimation = require(root, "", "estimation");
  check_keys(estimation, "estimation", {"filter_alpha", "k_z"});
  cfg.filter_alpha = number(estimation, "estimation", "filter_alpha");
  cfg.k_z = number(estimation, "estimation", "k_z");
  if (!(cfg.filter_alpha > 0.0 && cfg.filter_alpha <= 1.0)) {
    fail("estimation.filter_alpha", "must lie in (0, 1]");
  }
  if (cfg.k_z <= 0.0) fail("estimation.k_z", "must be > 0");

  if (root.contains("planner")) {
    const json& planner = root.at("planner");
    check_keys(planner, "planner", {"paper_literal_b_term", "axis_smoothing"});
    if (planner.contains("paper_literal_b_term")) {
      const json& v = planner.at("paper_literal_b_term");
      if (!v.is_boolean()) fail("planner.paper_literal_b_term", "must be a boolean");
      cfg.paper_literal_b_term = v.get<bool>();
    }
    if (planner.contains("axis_smoothing")) {
      cfg.axis_smoothing = number(planner, "planner", "axis_smoothing");
      if (cfg.axis_smoothing < 0.0 || cfg.axis_smoothing > 1.0) {
        fail("planner.axis_smoothing", "must lie in [0, 1]");
      }
    }
  }
  if (root.contains("output_dir")) cfg.output_dir = text(root, "", "output_dir");

  // the speed-advantage assumption; build_envelope carries the exact check
  try {
    build_envelope(cfg.v_a_min, cfg.v_a_max, cfg.v_t_max, cfg.delta);
  } catch (const std::invalid_argument& e) {
    fail("agents.v_a_min/v_a_max", e.what());
  }
  return cfg;
}

}  // namespace

ScenarioConfig scenario_from_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("scenario: parse failure: ") + e.what());
  }
  if (!root.is_object()) throw std::runtime_error("scenario: top level must be an object");
  return parse(root);
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scenario: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_text(buffer.str());
}

}  // namespace corbit
