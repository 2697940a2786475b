#pragma once

#include <cmath>

#include "corbit/angles.hpp"

namespace corbit {

enum class Integrator { rk4, euler };

/// Unicycle pose plus the altitude channel and the latest commands.
struct AgentState {
  double x = 0.0, y = 0.0;
  double psi = 0.0;  // heading, wrapped to (-pi, pi]
  double z = 0.0;
  double z_cmd = 0.0;
  double v_cmd = 0.0;
  double omega_cmd = 0.0;
};

/// Velocity-loop command set for a quadrotor flown as a unicycle.
struct VelocityCommand {
  double v_x, v_y, v_z, omega_z;
};

inline VelocityCommand altitude_and_velocity_mapping(const AgentState& s, double k_z) {
  return {s.v_cmd * std::cos(s.psi), s.v_cmd * std::sin(s.psi), k_z * (s.z_cmd - s.z),
          s.omega_cmd};
}

/// One integration step of the unicycle ODE with inputs held over the tick.
inline AgentState unicycle_step(AgentState s, double v, double omega, double dt,
                                Integrator integrator = Integrator::rk4) {
  if (integrator == Integrator::euler) {
    s.x += dt * v * std::cos(s.psi);
    s.y += dt * v * std::sin(s.psi);
    s.psi = wrap_pi(s.psi + dt * omega);
    return s;
  }
  const auto fx = [v](double psi) { return v * std::cos(psi); };
  const auto fy = [v](double psi) { return v * std::sin(psi); };
  const double p1 = s.psi;
  const double p2 = s.psi + 0.5 * dt * omega;  // heading stages of k2 and k3 coincide
  const double p4 = s.psi + dt * omega;
  s.x += dt / 6.0 * (fx(p1) + 4.0 * fx(p2) + fx(p4));
  s.y += dt / 6.0 * (fy(p1) + 4.0 * fy(p2) + fy(p4));
  s.psi = wrap_pi(s.psi + dt * omega);
  return s;
}

/// First-order altitude response z' = k_z (z_cmd - z).
inline double altitude_step(double z, double z_cmd, double k_z, double dt,
                            Integrator integrator = Integrator::rk4) {
  const auto f = [&](double zz) { return k_z * (z_cmd - zz); };
  if (integrator == Integrator::euler) return z + dt * f(z);
  const double k1 = f(z);
  const double k2 = f(z + 0.5 * dt * k1);
  const double k3 = f(z + 0.5 * dt * k2);
  const double k4 = f(z + dt * k3);
  return z + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace corbit
