#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corbit/ellipse.hpp"

namespace corbit {

/// Speed bands for the three-component linear speed command. The motion
/// compensation can shift the commanded speed by up to V_T_max, so the
/// orbit-frame profile is designed inside [V_R_min, V_R_max]; the nominal
/// profile uses the centered sub-band [V_E_min, V_E_max] and the remaining
/// margin is reserved for the cooperative correction.
template <typename Scalar>
struct SpeedEnvelopeT {
  Scalar v_a_min, v_a_max;  // hard agent speed bounds (m/s)
  Scalar v_t_max;           // convoy speed bound (m/s)
  Scalar delta;             // nominal band fraction in (0, 1]
  Scalar v_r_min, v_r_max;  // compensation-reserved bounds
  Scalar v_e_min, v_e_max;  // nominal-profile bounds
};
using SpeedEnvelope = SpeedEnvelopeT<double>;

/// Build the speed envelope; rejects configurations violating the speed
/// advantage assumption 0 <= V_T_max < V_A_min < V_A_max - 2 V_T_max.
template <typename Scalar>
SpeedEnvelopeT<Scalar> build_envelope(Scalar v_a_min, Scalar v_a_max, Scalar v_t_max,
                                      Scalar delta) {
  if (!(v_t_max >= Scalar(0)) || !(v_t_max < v_a_min) ||
      !(v_a_min < v_a_max - Scalar(2) * v_t_max)) {
    throw std::invalid_argument(
        "speed assumption violated: need 0 <= v_t_max < v_a_min < v_a_max - 2*v_t_max");
  }
  if (!(delta > Scalar(0) && delta <= Scalar(1))) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  SpeedEnvelopeT<Scalar> env;
  env.v_a_min = v_a_min;
  env.v_a_max = v_a_max;
  env.v_t_max = v_t_max;
  env.delta = delta;
  env.v_r_max = v_a_max - v_t_max;
  env.v_r_min = v_a_min + v_t_max;
  env.v_e_min = (Scalar(1) - delta) * env.v_r_max / Scalar(2) +
                (Scalar(1) + delta) * env.v_r_min / Scalar(2);
  env.v_e_max = (Scalar(1) + delta) * env.v_r_max / Scalar(2) +
                (Scalar(1) - delta) * env.v_r_min / Scalar(2);
  return env;
}

/// Constant parametric rate s_v = (V_E_min + V_E_max) / ((a+b) sqrt(gamma)),
/// chosen so the induced speed profile uses [V_E_min, V_E_max] symmetrically.
/// Requires b/a >= V_E_min/V_E_max (guaranteed by the orbit planner) so the
/// induced extrema stay inside the band.
template <typename Scalar>
Scalar parametric_rate(const SpeedEnvelopeT<Scalar>& env, const EllipseAxesT<Scalar>& axes,
                       Scalar gamma_a) {
  if (!(gamma_a > Scalar(0))) throw std::invalid_argument("parametric_rate: gamma_a must be > 0");
  if (axes.b / axes.a < env.v_e_min / env.v_e_max - Scalar(1e-12)) {
    throw std::logic_error("parametric_rate: axes ratio b/a below v_e_min/v_e_max");
  }
  return (env.v_e_min + env.v_e_max) / ((axes.a + axes.b) * std::sqrt(gamma_a));
}

/// Nominal linear speed realizing the constant parametric rate s_v on the
/// concentric ellipse at level gamma_a: V_E = G(s) sqrt(gamma) s_v.
template <typename Scalar>
Scalar nominal_speed(Scalar s_a, Scalar gamma_a, const EllipseAxesT<Scalar>& axes, Scalar s_v) {
  const Scalar sn = std::sin(s_a);
  const Scalar cs = std::cos(s_a);
  return std::sqrt(gamma_a * (axes.a * axes.a * sn * sn + axes.b * axes.b * cs * cs)) * s_v;
}

/// Total speed command: add the correction to the nominal profile, compensate
/// the orbit motion by vector addition along the agent heading (magnitude
/// only; the unicycle cannot command velocity components separately), then
/// saturate once to the hard bounds.
template <typename Scalar>
Scalar compose_speed(Scalar v_e, Scalar v_c, Scalar psi_a, const Vec2<Scalar>& center_velocity,
                     const SpeedEnvelopeT<Scalar>& env) {
  const Scalar vt = v_e + v_c;
  const Scalar vx = vt * std::cos(psi_a) + center_velocity.x();
  const Scalar vy = vt * std::sin(psi_a) + center_velocity.y();
  return std::clamp(std::sqrt(vx * vx + vy * vy), env.v_a_min, env.v_a_max);
}

}  // namespace corbit
