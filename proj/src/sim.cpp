#include "corbit/sim.hpp"

#include <cmath>
#include <random>

#include "corbit/guidance.hpp"

namespace corbit {
namespace {

// uniform in [0, 1) from the top 53 bits; keeps streams identical across
// standard libraries
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

World::World(const ScenarioConfig& cfg)
    : cfg_(cfg),
      env_(build_envelope(cfg.v_a_min, cfg.v_a_max, cfg.v_t_max, cfg.delta)),
      convoy_(cfg.convoy),
      planner_(PlannerOptions{cfg.filter_alpha, cfg.paper_literal_b_term, cfg.axis_smoothing},
               env_, cfg.omega_max, cfg.v_a_max) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& p : convoy_.positions()) centroid += p;
  centroid /= static_cast<double>(convoy_.positions().size());

  std::mt19937_64 rng(cfg_.init.seed);
  agents_.resize(cfg_.agent_count);
  for (int i = 0; i < cfg_.agent_count; ++i) {
    AgentState& s = agents_[i];
    if (cfg_.init.kind == AgentInitConfig::Kind::poses) {
      s.x = cfg_.init.poses[i][0];
      s.y = cfg_.init.poses[i][1];
      s.psi = wrap_pi(cfg_.init.poses[i][2]);
    } else {
      s.x = centroid.x() + (2.0 * uniform_unit(rng) - 1.0) * cfg_.init.half_extent;
      s.y = centroid.y() + (2.0 * uniform_unit(rng) - 1.0) * cfg_.init.half_extent;
      s.psi = wrap_pi((2.0 * uniform_unit(rng) - 1.0) * kPi<double>);
    }
    // the vector field is undefined only at the orbit center; nudge off it
    if (s.x == centroid.x() && s.y == centroid.y()) s.x += 1e-6;
    s.z = s.z_cmd = cfg_.mission_altitude + cfg_.altitude_step * i;
    coop_.push_back(make_coop_state(i + 1, cfg_.agent_count, cfg_.gamma_th, cfg_.d_th,
                                    cfg_.k_s));
    tables_.emplace_back(cfg_.agent_count);
  }
}

void World::tick() {
  const double t = time();
  const double dt = cfg_.dt;
  const GuidanceGains gains{cfg_.k_gamma, cfg_.k_psi, cfg_.omega_max};

  orbit_ = planner_.plan({convoy_.positions(), tick_count_, dt});

  // deliver last tick's broadcast frames
  for (auto& table : tables_) {
    for (const auto& frame : bus_) {
      if (const auto packet = decode_packet(frame, cfg_.agent_count)) table.apply(*packet);
    }
  }

  MetricsRecord rec;
  rec.t = t;
  rec.agents.resize(agents_.size());
  FlagsRecord flags;
  flags.t = t;
  std::vector<PacketFrame> staged(agents_.size());

  for (std::size_t i = 0; i < agents_.size(); ++i) {
    AgentState& s = agents_[i];
    const OrbitCoords coords = orbit_coords<double>({s.x, s.y}, orbit_, cfg_.direction);
    const HeadingCommand heading =
        heading_command(coords, orbit_.axes, cfg_.direction, gains, cfg_.guidance_law);
    s.omega_cmd = angular_rate_command(heading.psi_d, s.psi, orbit_.tilt, gains);

    const CoopStepResult coop = coop_step(coop_[i], tables_[i], coords, orbit_.axes);
    staged[i] = encode_packet(coop.packet);

    // a pass through the exact center (gamma = 0) would blow up s_v alone;
    // the clamped level keeps v_e = G * sqrt(gamma) * s_v finite
    const double gamma = std::max(coords.gamma_a, 1e-12);
    const double s_v = parametric_rate(env_, orbit_.axes, gamma);
    const double v_e = nominal_speed(coords.s_a, gamma, orbit_.axes, s_v);
    s.v_cmd = compose_speed(v_e, coop.v_c, s.psi, orbit_.center_velocity, env_);

    if (coop_[i].fl_h) s.z_cmd = cfg_.mission_altitude;

    rec.agents[i] = {s.x,         s.y,            s.psi,      s.z,     s.v_cmd,
                     s.omega_cmd, coords.gamma_a, coords.s_a, coop.d_s};
    flags.fl_r.push_back(coop_[i].fl_r);
    flags.fl_h.push_back(coop_[i].fl_h);
    flags.fl_o.push_back(coop_[i].fl_o);
  }

  rec.orbit = {orbit_.center.x(), orbit_.center.y(), orbit_.tilt,
               orbit_.axes.a,     orbit_.axes.b,     orbit_.center_velocity.x(),
               orbit_.center_velocity.y()};
  records_.push_back(std::move(rec));
  flags_.push_back(std::move(flags));

  for (auto& s : agents_) {
    s = unicycle_step(s, s.v_cmd, s.omega_cmd, dt, cfg_.integrator);
    s.z = altitude_step(s.z, s.z_cmd, cfg_.k_z, dt, cfg_.integrator);
  }
  bus_ = std::move(staged);
  convoy_.advance(dt);
  ++tick_count_;
}

void World::run() {
  const long ticks = std::lround(cfg_.duration / cfg_.dt);
  for (long k = 0; k < ticks; ++k) tick();
}

RunSummary World::summary() const {
  return summarize_run(cfg_.name, records_, flags_, cfg_.v_a_min, cfg_.v_a_max, cfg_.omega_max,
                       cfg_.d_th, cfg_.dt);
}

}  // namespace corbit
