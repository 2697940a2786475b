#include "corbit/orbit_planner.hpp"

#include <cmath>
#include <stdexcept>

#include "corbit/angles.hpp"

namespace corbit {

CentroidTilt centroid_and_tilt(const std::vector<Eigen::Vector2d>& positions,
                               double fallback_tilt) {
  if (positions.empty()) throw std::invalid_argument("centroid_and_tilt: empty convoy");
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  for (const auto& p : positions) sum += p;
  CentroidTilt out;
  out.centroid = sum / static_cast<double>(positions.size());
  const Eigen::Vector2d d = positions.back() - positions.front();
  out.tilt = (d.x() == 0.0 && d.y() == 0.0) ? fallback_tilt : std::atan2(d.y(), d.x());
  return out;
}

BoundingBox bounding_box(const std::vector<Eigen::Vector2d>& positions,
                         const Eigen::Vector2d& centroid, double tilt) {
  double x_min = 0.0, x_max = 0.0, d_max = 0.0;
  for (const auto& p : positions) {
    const Vec2<double> r = rotate_to_frame<double>(p - centroid, tilt);
    if (d_max <= std::abs(r.y())) d_max = std::abs(r.y());
    if (x_min >= r.x()) x_min = r.x();
    if (x_max <= r.x()) x_max = r.x();
  }
  const double p_max = std::max(x_max, std::abs(x_min));
  return {2.0 * p_max, 2.0 * d_max};
}

EllipseAxes select_axes(const BoundingBox& box, const SpeedEnvelope& env, double omega_max,
                        double v_a_max, bool paper_literal_b_term) {
  const double root_half = 1.0 / std::sqrt(2.0);
  const double turn_radius = v_a_max / omega_max;
  const double a = std::max({box.l1 * root_half, box.l2 * root_half, turn_radius});
  const double box_term = (paper_literal_b_term ? box.l1 : box.l2) * root_half;
  const double b =
      std::max({box_term, a * env.v_e_min / env.v_e_max, std::sqrt(a * turn_radius)});
  return {a, b};
}

Eigen::Vector2d VelocityFilter::update(const Eigen::Vector2d& centroid, double dt,
                                       double v_t_max) {
  if (!seeded_) {
    smoothed_ = centroid;
    seeded_ = true;
    return Eigen::Vector2d::Zero();
  }
  // incremental form keeps a stationary centroid an exact fixed point
  const Eigen::Vector2d step = alpha_ * (centroid - smoothed_);
  Eigen::Vector2d velocity = step / dt;
  smoothed_ += step;
  const double mag = velocity.norm();
  if (mag > v_t_max) velocity *= (mag > 0.0 ? v_t_max / mag : 0.0);
  return velocity;
}

OrbitSpec OrbitPlanner::plan(const ConvoySnapshot& snapshot) {
  if (snapshot.dt <= 0.0) throw std::invalid_argument("OrbitPlanner: dt must be > 0");
  const CentroidTilt ct = centroid_and_tilt(snapshot.positions, last_tilt_);
  last_tilt_ = ct.tilt;
  const BoundingBox box = bounding_box(snapshot.positions, ct.centroid, ct.tilt);
  const EllipseAxes raw = select_axes(box, env_, omega_max_, v_a_max_,
                                      opts_.paper_literal_b_term);

  OrbitSpec orbit;
  orbit.center = ct.centroid;
  if (opts_.axis_smoothing > 0.0 && has_previous_) {
    const double beta = opts_.axis_smoothing;
    smoothed_axes_.a += beta * (raw.a - smoothed_axes_.a);
    smoothed_axes_.b += beta * (raw.b - smoothed_axes_.b);
    smoothed_tilt_ += beta * normalize_angle(ct.tilt - smoothed_tilt_);
    orbit.axes = smoothed_axes_;
    orbit.tilt = wrap_pi(smoothed_tilt_);
  } else {
    smoothed_axes_ = raw;
    smoothed_tilt_ = ct.tilt;
    orbit.axes = raw;
    orbit.tilt = wrap_pi(ct.tilt);
  }
  has_previous_ = true;
  orbit.center_velocity = filter_.update(ct.centroid, snapshot.dt, env_.v_t_max);
  return orbit;
}

}  // namespace corbit
