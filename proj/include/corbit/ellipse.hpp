#pragma once

#include <Eigen/Core>
#include <cmath>

#include "corbit/angles.hpp"

namespace corbit {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// Ellipse axis lengths, a >= b > 0.
template <typename Scalar>
struct EllipseAxesT {
  Scalar a;  // semi-major axis (m)
  Scalar b;  // semi-minor axis (m)

  bool valid() const { return a >= b && b > Scalar(0); }
};
using EllipseAxes = EllipseAxesT<double>;

/// Traversal direction on the orbit.
enum class Direction : int {
  clockwise = -1,
  counter_clockwise = +1,
};

template <typename Scalar = double>
constexpr Scalar direction_sign(Direction d) {
  return static_cast<Scalar>(static_cast<int>(d));
}

/// The time-varying elliptical orbit: center, tilt relative to the global
/// frame, axis lengths, and the estimated center velocity.
template <typename Scalar>
struct OrbitSpecT {
  Vec2<Scalar> center = Vec2<Scalar>::Zero();
  Scalar tilt = Scalar(0);  // theta_E, wrapped to (-pi, pi]
  EllipseAxesT<Scalar> axes{Scalar(1), Scalar(1)};
  Vec2<Scalar> center_velocity = Vec2<Scalar>::Zero();
};
using OrbitSpec = OrbitSpecT<double>;

/// A point re-expressed in the orbit-centric frame. Every point lies on a
/// concentric ellipse x^2/a^2 + y^2/b^2 = gamma; gamma < 1 inside the
/// desired orbit, 1 on it, > 1 outside.
template <typename Scalar>
struct OrbitCoordsT {
  Scalar x_ae;     // orbit-frame x (m)
  Scalar y_ae;     // orbit-frame y (m)
  Scalar theta_a;  // polar angle (rad)
  Scalar s_a;      // ellipse parameter, wrapped to [0, 2pi)
  Scalar gamma_a;  // concentric level (dimensionless)
};
using OrbitCoords = OrbitCoordsT<double>;

/// Rotate a vector from the global frame into a frame tilted by theta:
/// R_theta = [[cos, sin], [-sin, cos]].
template <typename Scalar>
Vec2<Scalar> rotate_to_frame(const Vec2<Scalar>& p, Scalar theta) {
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta);
  return {c * p.x() + s * p.y(), -s * p.x() + c * p.y()};
}

/// Speed factor G(s) = sqrt(a^2 sin^2 s + b^2 cos^2 s) and dG/ds.
/// V(s) = G(s) * ds/dt for a point moving on the ellipse.
template <typename Scalar>
struct SpeedFactorT {
  Scalar g;
  Scalar dg_ds;
};

template <typename Scalar>
SpeedFactorT<Scalar> speed_factor(Scalar s, const EllipseAxesT<Scalar>& axes) {
  const Scalar sn = std::sin(s);
  const Scalar cs = std::cos(s);
  const Scalar g = std::sqrt(axes.a * axes.a * sn * sn + axes.b * axes.b * cs * cs);
  const Scalar dg = (axes.a * axes.a - axes.b * axes.b) * std::sin(Scalar(2) * s) / (Scalar(2) * g);
  return {g, dg};
}

/// Curvature kappa(s) = a*b / G(s)^3 and radius of curvature 1/kappa.
template <typename Scalar>
struct CurvatureT {
  Scalar kappa;
  Scalar radius;
};

template <typename Scalar>
CurvatureT<Scalar> curvature(Scalar s, const EllipseAxesT<Scalar>& axes) {
  const Scalar g = speed_factor(s, axes).g;
  const Scalar kappa = axes.a * axes.b / (g * g * g);
  return {kappa, Scalar(1) / kappa};
}

/// Extrema of speed, curvature radius and curvature for a point moving with
/// constant parametric rate s_v. Speed extrema sit at s = n*pi (min) and
/// s = (2n+1)*pi/2 (max); curvature extrema are at the same parameters with
/// roles reversed.
template <typename Scalar>
struct EllipseExtremaT {
  Scalar v_min, v_max;
  Scalar r_min, r_max;
  Scalar kappa_min, kappa_max;
};

template <typename Scalar>
EllipseExtremaT<Scalar> extrema(const EllipseAxesT<Scalar>& axes, Scalar s_v) {
  EllipseExtremaT<Scalar> e;
  e.v_min = axes.b * s_v;
  e.v_max = axes.a * s_v;
  e.r_min = axes.b * axes.b / axes.a;
  e.r_max = axes.a * axes.a / axes.b;
  e.kappa_min = axes.b / (axes.a * axes.a);
  e.kappa_max = axes.a / (axes.b * axes.b);
  return e;
}

/// Point of the concentric ellipse at level gamma, in the orbit frame:
/// (a sqrt(gamma) cos s, b sqrt(gamma) sin s).
template <typename Scalar>
Vec2<Scalar> concentric_point(Scalar s, Scalar gamma, const EllipseAxesT<Scalar>& axes) {
  const Scalar r = std::sqrt(gamma);
  return {axes.a * r * std::cos(s), axes.b * r * std::sin(s)};
}

/// Map an orbit-frame point back to global coordinates.
template <typename Scalar>
Vec2<Scalar> orbit_to_global(const Vec2<Scalar>& p_orbit, const OrbitSpecT<Scalar>& orbit) {
  return orbit.center + rotate_to_frame<Scalar>(p_orbit, -orbit.tilt);
}

/// Orbit-frame coordinates of a global point: position, polar angle,
/// ellipse parameter s_A = d_c * atan2(a sin theta_A, b cos theta_A) wrapped
/// to [0, 2pi), and the concentric level gamma_A. s_A folds in the traversal
/// direction, so forward motion always increases s_A.
template <typename Scalar>
OrbitCoordsT<Scalar> orbit_coords(const Vec2<Scalar>& p_global, const OrbitSpecT<Scalar>& orbit,
                                  Direction dir) {
  const Vec2<Scalar> q = rotate_to_frame<Scalar>(p_global - orbit.center, orbit.tilt);
  OrbitCoordsT<Scalar> out;
  out.x_ae = q.x();
  out.y_ae = q.y();
  // atan2(0, 0) is pinned to 0 so downstream headings stay finite at the center
  out.theta_a = (q.x() == Scalar(0) && q.y() == Scalar(0)) ? Scalar(0) : std::atan2(q.y(), q.x());
  const Scalar raw =
      std::atan2(orbit.axes.a * std::sin(out.theta_a), orbit.axes.b * std::cos(out.theta_a));
  out.s_a = wrap_two_pi(direction_sign<Scalar>(dir) * raw);
  out.gamma_a = q.x() * q.x() / (orbit.axes.a * orbit.axes.a) +
                q.y() * q.y() / (orbit.axes.b * orbit.axes.b);
  return out;
}

}  // namespace corbit
