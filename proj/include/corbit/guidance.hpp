#pragma once

#include <algorithm>
#include <cmath>

#include "corbit/angles.hpp"
#include "corbit/ellipse.hpp"

namespace corbit {

template <typename Scalar>
struct GuidanceGainsT {
  Scalar k_gamma;    // offset gain (> 0)
  Scalar k_psi;      // heading-tracking gain (1/s, > 0)
  Scalar omega_max;  // turn-rate bound (rad/s, > 0)
};
using GuidanceGains = GuidanceGainsT<double>;

/// Offset-gain weighting. The curvature-weighted law multiplies k_gamma by
/// kappa(s_A), tightening the field in the high-curvature regions; the
/// constant-gain law is the legacy variant kept for comparison runs.
enum class GuidanceLaw {
  curvature_weighted,
  constant_gain,
};

template <typename Scalar>
struct HeadingCommandT {
  Scalar psi_t;  // local tangent heading
  Scalar psi_o;  // convergence offset, in (-pi/2, pi/2)
  Scalar psi_d;  // commanded heading = psi_t + psi_o (unnormalized)
};
using HeadingCommand = HeadingCommandT<double>;

/// Vector-field heading command in the orbit frame:
///   psi_T = atan2(d_c b^2 x_AE, -d_c a^2 y_AE)
///   psi_O = d_c atan(k_gamma kappa(s_A) (gamma_A - 1))
template <typename Scalar>
HeadingCommandT<Scalar> heading_command(const OrbitCoordsT<Scalar>& coords,
                                        const EllipseAxesT<Scalar>& axes, Direction dir,
                                        const GuidanceGainsT<Scalar>& gains,
                                        GuidanceLaw law = GuidanceLaw::curvature_weighted) {
  const Scalar dc = direction_sign<Scalar>(dir);
  const Scalar a2 = axes.a * axes.a;
  const Scalar b2 = axes.b * axes.b;
  HeadingCommandT<Scalar> cmd;
  cmd.psi_t = std::atan2(dc * b2 * coords.x_ae, -dc * a2 * coords.y_ae);
  Scalar gain = gains.k_gamma;
  if (law == GuidanceLaw::curvature_weighted) gain *= curvature(coords.s_a, axes).kappa;
  cmd.psi_o = dc * std::atan(gain * (coords.gamma_a - Scalar(1)));
  cmd.psi_d = cmd.psi_t + cmd.psi_o;
  return cmd;
}

/// Saturated turn-rate command. The heading error is taken relative to the
/// orbit-centric frame (psi_AE = psi_A - theta_E) and wrapped once, here,
/// to avoid 2*pi seams.
template <typename Scalar>
Scalar angular_rate_command(Scalar psi_d, Scalar psi_a, Scalar orbit_tilt,
                            const GuidanceGainsT<Scalar>& gains) {
  const Scalar err = normalize_angle(psi_d - (psi_a - orbit_tilt));
  return std::clamp(gains.k_psi * err, -gains.omega_max, gains.omega_max);
}

}  // namespace corbit
