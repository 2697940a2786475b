#pragma once

#include <Eigen/Core>
#include <vector>

#include "corbit/ellipse.hpp"
#include "corbit/speed_control.hpp"

namespace corbit {

/// Convoy vehicle positions at one control tick. Vehicles are numbered
/// 1..N_T along the direction of travel; positions[0] is vehicle 1 (tail)
/// and positions.back() is the lead vehicle N_T.
struct ConvoySnapshot {
  std::vector<Eigen::Vector2d> positions;
  long tick = 0;
  double dt = 0.0;
};

/// Tilt-aligned bounding box of the convoy, centered at the centroid.
struct BoundingBox {
  double l1 = 0.0;  // length along the tilt direction (m)
  double l2 = 0.0;  // breadth (m)
};

struct CentroidTilt {
  Eigen::Vector2d centroid;
  double tilt;  // theta_E (rad)
};

/// Convoy centroid and orbit tilt from the first->last vehicle direction.
/// If those vehicles coincide the tilt is held at fallback_tilt.
CentroidTilt centroid_and_tilt(const std::vector<Eigen::Vector2d>& positions,
                               double fallback_tilt = 0.0);

/// Tilt-frame bounding box: d_max is the largest |y_r|, p_max the largest
/// |x_r| extent; l1 = 2 p_max, l2 = 2 d_max.
BoundingBox bounding_box(const std::vector<Eigen::Vector2d>& positions,
                         const Eigen::Vector2d& centroid, double tilt);

/// Axis selection: the minimum-area ellipse over the box (l1/sqrt(2),
/// l2/sqrt(2)) pushed up to meet the turn-radius constraint
/// R_min = b^2/a >= V_A_max/omega_max and the nominal-band ratio constraint
/// b/a >= V_E_min/V_E_max. paper_literal_b_term swaps b's box term to
/// l1/sqrt(2) (an alternative reading kept for comparison runs).
EllipseAxes select_axes(const BoundingBox& box, const SpeedEnvelope& env, double omega_max,
                        double v_a_max, bool paper_literal_b_term = false);

/// Exponential smoothing of the centroid followed by a discrete derivative,
/// magnitude-clamped to v_t_max. The first update seeds the state and
/// reports zero velocity.
class VelocityFilter {
 public:
  explicit VelocityFilter(double alpha) : alpha_(alpha) {}

  Eigen::Vector2d update(const Eigen::Vector2d& centroid, double dt, double v_t_max);
  void reset() { seeded_ = false; }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
  bool seeded_ = false;
  Eigen::Vector2d smoothed_ = Eigen::Vector2d::Zero();
};

struct PlannerOptions {
  double filter_alpha = 0.2;
  bool paper_literal_b_term = false;
  // first-order smoothing of (a, b, tilt) between ticks; 0 disables
  double axis_smoothing = 0.0;
};

/// Per-tick orbit computation: centroid, tilt, bounding box, axis selection
/// and filtered center-velocity estimation. One planner instance per
/// simulation; stepped sequentially.
class OrbitPlanner {
 public:
  OrbitPlanner(const PlannerOptions& opts, const SpeedEnvelope& env, double omega_max,
               double v_a_max)
      : opts_(opts), env_(env), omega_max_(omega_max), v_a_max_(v_a_max),
        filter_(opts.filter_alpha) {}

  OrbitSpec plan(const ConvoySnapshot& snapshot);

 private:
  PlannerOptions opts_;
  SpeedEnvelope env_;
  double omega_max_;
  double v_a_max_;
  VelocityFilter filter_;
  double last_tilt_ = 0.0;
  bool has_previous_ = false;
  EllipseAxes smoothed_axes_{1.0, 1.0};
  double smoothed_tilt_ = 0.0;
};

}  // namespace corbit
