#pragma once

#include <cmath>
#include <numbers>

namespace corbit {

template <typename Scalar>
inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
inline constexpr Scalar kTwoPi = Scalar(2) * std::numbers::pi_v<Scalar>;

/// Wrap an angle to [-pi, pi]. Congruent to the input modulo 2*pi.
template <typename Scalar>
Scalar normalize_angle(Scalar x) {
  return std::remainder(x, kTwoPi<Scalar>);
}

/// Wrap an angle to [0, 2*pi).
template <typename Scalar>
Scalar wrap_two_pi(Scalar x) {
  Scalar r = std::fmod(x, kTwoPi<Scalar>);
  if (r < Scalar(0)) r += kTwoPi<Scalar>;
  if (r >= kTwoPi<Scalar>) r = Scalar(0);  // fmod of a tiny negative can round up
  return r;
}

/// Wrap an angle to (-pi, pi]; used for stored headings.
template <typename Scalar>
Scalar wrap_pi(Scalar x) {
  Scalar r = normalize_angle(x);
  if (r == -kPi<Scalar>) r = kPi<Scalar>;
  return r;
}

}  // namespace corbit
