#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "corbit/convoy.hpp"
#include "corbit/ellipse.hpp"
#include "corbit/guidance.hpp"
#include "corbit/unicycle.hpp"

namespace corbit {

struct AgentInitConfig {
  enum class Kind { random_box, poses };
  Kind kind = Kind::random_box;
  std::uint64_t seed = 1;
  double half_extent = 3.0;  // random box half side (m), centered at the convoy centroid
  std::vector<std::array<double, 3>> poses;  // explicit (x, y, psi)
};

/// Full scenario: the Table-II style parameter row plus loop, estimation and
/// output settings. All physical quantities are explicit in the file; only
/// switches with documented defaults may be omitted.
struct ScenarioConfig {
  std::string name;

  ConvoyModel convoy;
  double v_t_max = 0.0;

  int agent_count = 0;
  double v_a_min = 0.0, v_a_max = 0.0, omega_max = 0.0;
  Direction direction = Direction::counter_clockwise;
  double mission_altitude = 1.0;
  double altitude_step = 0.3;
  AgentInitConfig init;

  double k_s = 0.0, k_psi = 0.0, k_gamma = 0.0, delta = 0.0;
  GuidanceLaw guidance_law = GuidanceLaw::curvature_weighted;

  double gamma_th = 0.1, d_th = 0.1;
  double dt = 0.02, duration = 0.0;
  Integrator integrator = Integrator::rk4;
  double filter_alpha = 0.2, k_z = 1.0;

  bool paper_literal_b_term = false;
  double axis_smoothing = 0.0;

  std::string output_dir = ".";
};

/// Parse and validate a scenario. Unknown keys are rejected; every
/// invariant violation names the offending field.
ScenarioConfig load_scenario(const std::filesystem::path& path);
ScenarioConfig scenario_from_text(const std::string& json_text);

}  // namespace corbit
