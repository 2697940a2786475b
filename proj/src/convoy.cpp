#include "corbit/convoy.hpp"

#include <cmath>
#include <stdexcept>

#include "corbit/angles.hpp"

namespace corbit {

double SpeedProfile::at(double t) const {
  switch (kind) {
    case Kind::stationary: return 0.0;
    case Kind::constant: return v;
    case Kind::sinusoid: return v + amplitude * std::sin(kTwoPi<double> * t / period);
  }
  return 0.0;
}

double SpeedProfile::peak() const {
  switch (kind) {
    case Kind::stationary: return 0.0;
    case Kind::constant: return v;
    case Kind::sinusoid: return v + std::abs(amplitude);
  }
  return 0.0;
}

Convoy::Convoy(const ConvoyModel& model) : model_(model) {
  const int n = model_.vehicle_count;
  if (n < 1) throw std::invalid_argument("convoy: vehicle_count must be >= 1");
  switch (model_.kind) {
    case PathKind::stationary:
      if (static_cast<int>(model_.fixed_positions.size()) != n) {
        throw std::invalid_argument("convoy: stationary positions must match vehicle_count");
      }
      positions_ = model_.fixed_positions;
      return;
    case PathKind::curve:
      if (model_.curve_wavelength <= 0.0) {
        throw std::invalid_argument("convoy: curve wavelength must be > 0");
      }
      break;
    case PathKind::lissajous:
      if (model_.liss_ax <= 0.0 || model_.liss_ay <= 0.0) {
        throw std::invalid_argument("convoy: lissajous amplitudes must be > 0");
      }
      break;
    case PathKind::waypoints: {
      if (model_.waypoints.size() < 2) {
        throw std::invalid_argument("convoy: waypoint list needs at least 2 points");
      }
      const std::size_t m = model_.waypoints.size();
      const std::size_t segments = model_.loop ? m : m - 1;
      segment_starts_.resize(segments + 1);
      segment_starts_[0] = 0.0;
      for (std::size_t k = 0; k < segments; ++k) {
        const Eigen::Vector2d d =
            model_.waypoints[(k + 1) % m] - model_.waypoints[k];
        const double len = d.norm();
        if (len <= 0.0) throw std::invalid_argument("convoy: zero-length waypoint segment");
        segment_starts_[k + 1] = segment_starts_[k] + len;
      }
      total_length_ = segment_starts_.back();
      break;
    }
  }

  params_.resize(n);
  if (model_.kind == PathKind::waypoints) {
    for (int i = 0; i < n; ++i) {
      double arc = model_.start_param - (n - 1 - i) * model_.spacing;
      if (model_.loop) {
        arc = std::fmod(arc, total_length_);
        if (arc < 0.0) arc += total_length_;
      } else {
        arc = std::max(arc, 0.0);
      }
      params_[i] = arc;
    }
  } else {
    params_[n - 1] = model_.start_param;
    for (int i = n - 2; i >= 0; --i) params_[i] = march_back(params_[i + 1], model_.spacing);
  }
  refresh_positions();
}

Eigen::Vector2d Convoy::path_point(double u) const {
  if (model_.kind == PathKind::curve) {
    return {u, model_.curve_amplitude * std::sin(kTwoPi<double> * u / model_.curve_wavelength)};
  }
  return {model_.liss_ax * std::sin(u), model_.liss_ay * std::sin(2.0 * u)};
}

Eigen::Vector2d Convoy::path_velocity(double u) const {
  if (model_.kind == PathKind::curve) {
    const double w = kTwoPi<double> / model_.curve_wavelength;
    return {1.0, model_.curve_amplitude * w * std::cos(w * u)};
  }
  return {model_.liss_ax * std::cos(u), 2.0 * model_.liss_ay * std::cos(2.0 * u)};
}

double Convoy::march_back(double u, double arc) const {
  if (arc <= 0.0) return u;
  const int steps = 64;
  const double h = arc / steps;
  for (int k = 0; k < steps; ++k) {
    const double k1 = 1.0 / path_velocity(u).norm();
    const double k2 = 1.0 / path_velocity(u - 0.5 * h * k1).norm();
    const double k3 = 1.0 / path_velocity(u - 0.5 * h * k2).norm();
    const double k4 = 1.0 / path_velocity(u - h * k3).norm();
    u -= h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

Eigen::Vector2d Convoy::waypoint_position(double arc) const {
  const std::size_t m = model_.waypoints.size();
  if (arc >= total_length_) {
    return model_.loop ? model_.waypoints[0] : model_.waypoints[m - 1];
  }
  std::size_t seg = 0;
  while (arc >= segment_starts_[seg + 1]) ++seg;
  const double frac = (arc - segment_starts_[seg]) /
                      (segment_starts_[seg + 1] - segment_starts_[seg]);
  const Eigen::Vector2d& p0 = model_.waypoints[seg];
  const Eigen::Vector2d& p1 = model_.waypoints[(seg + 1) % m];
  return p0 + frac * (p1 - p0);
}

void Convoy::advance(double dt) {
  if (model_.kind == PathKind::stationary) {
    time_ += dt;
    return;
  }
  if (model_.kind == PathKind::waypoints) {
    // piecewise-linear motion; a vehicle reaching a corner stops there and
    // takes the turn on the next tick
    const double budget = model_.speed.at(time_) * dt;
    for (double& arc : params_) {
      if (!model_.loop && arc >= total_length_) continue;
      std::size_t seg = 0;
      while (seg + 1 < segment_starts_.size() && arc >= segment_starts_[seg + 1]) ++seg;
      const double seg_end = segment_starts_[seg + 1];
      arc = std::min(arc + budget, seg_end);
      if (model_.loop && arc >= total_length_) arc = 0.0;
    }
  } else {
    // constant-speed arc advance keeps the inter-vehicle separations exact
    for (double& u : params_) {
      const auto du = [&](double uu, double tau) {
        return model_.speed.at(tau) / path_velocity(uu).norm();
      };
      const double k1 = du(u, time_);
      const double k2 = du(u + 0.5 * dt * k1, time_ + 0.5 * dt);
      const double k3 = du(u + 0.5 * dt * k2, time_ + 0.5 * dt);
      const double k4 = du(u + dt * k3, time_ + dt);
      u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  time_ += dt;
  refresh_positions();
}

void Convoy::refresh_positions() {
  positions_.resize(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    positions_[i] = model_.kind == PathKind::waypoints ? waypoint_position(params_[i])
                                                       : path_point(params_[i]);
  }
}

}  // namespace corbit
