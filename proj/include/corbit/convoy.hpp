#pragma once

#include <Eigen/Core>
#include <vector>

namespace corbit {

enum class PathKind { stationary, curve, lissajous, waypoints };

/// Scalar convoy speed over time; never exceeds the scenario's V_T_max
/// (validated at load).
struct SpeedProfile {
  enum class Kind { stationary, constant, sinusoid };
  Kind kind = Kind::stationary;
  double v = 0.0;          // constant level / sinusoid mean (m/s)
  double amplitude = 0.0;  // sinusoid amplitude (m/s)
  double period = 0.0;     // sinusoid period (s)

  double at(double t) const;
  double peak() const;
};

/// Convoy description straight from the scenario file. Vehicle 1 trails,
/// vehicle N_T leads.
struct ConvoyModel {
  PathKind kind = PathKind::stationary;
  int vehicle_count = 0;
  double spacing = 0.0;  // inter-vehicle arc spacing (m)
  SpeedProfile speed;
  double start_param = 0.0;  // lead vehicle's initial path parameter (curve/
                             // lissajous) or arc position (waypoints, m)
  // curve: P(u) = (u, amplitude * sin(2 pi u / wavelength))
  double curve_amplitude = 0.0;
  double curve_wavelength = 1.0;
  // lissajous figure-8: P(u) = (ax sin u, ay sin 2u)
  double liss_ax = 0.0;
  double liss_ay = 0.0;
  // waypoints polyline
  std::vector<Eigen::Vector2d> waypoints;
  bool loop = true;
  // stationary: explicit positions
  std::vector<Eigen::Vector2d> fixed_positions;
};

/// Stateful convoy: vehicles hold their arc-length separation while the
/// whole group moves at the profile speed. Waypoint vehicles stop at
/// corners and turn, resuming on the next tick.
class Convoy {
 public:
  explicit Convoy(const ConvoyModel& model);

  void advance(double dt);
  const std::vector<Eigen::Vector2d>& positions() const { return positions_; }
  double time() const { return time_; }

 private:
  Eigen::Vector2d path_point(double u) const;
  Eigen::Vector2d path_velocity(double u) const;  // dP/du
  double march_back(double u, double arc) const;  // parameter `arc` meters behind u
  Eigen::Vector2d waypoint_position(double arc) const;
  void refresh_positions();

  ConvoyModel model_;
  double time_ = 0.0;
  std::vector<double> params_;  // per-vehicle path parameter or arc position
  std::vector<double> segment_starts_;  // waypoints: cumulative arc at each vertex
  double total_length_ = 0.0;
  std::vector<Eigen::Vector2d> positions_;
};

}  // namespace corbit
