#include <doctest.h>

#include <cmath>

#include "corbit/unicycle.hpp"

using namespace corbit;

namespace {

// closed-form unicycle solution for constant inputs
AgentState exact_state(const AgentState& s0, double v, double omega, double t) {
  AgentState s = s0;
  if (omega == 0.0) {
    s.x += v * t * std::cos(s0.psi);
    s.y += v * t * std::sin(s0.psi);
    return s;
  }
  const double r = v / omega;
  s.x = s0.x + r * (std::sin(s0.psi + omega * t) - std::sin(s0.psi));
  s.y = s0.y - r * (std::cos(s0.psi + omega * t) - std::cos(s0.psi));
  s.psi = wrap_pi(s0.psi + omega * t);
  return s;
}

double run_error(double dt, double v, double omega, double t_end, Integrator integ) {
  AgentState s;
  s.psi = 0.4;
  const long n = std::lround(t_end / dt);
  AgentState num = s;
  for (long k = 0; k < n; ++k) num = unicycle_step(num, v, omega, dt, integ);
  const AgentState ref = exact_state(s, v, omega, t_end);
  return std::hypot(num.x - ref.x, num.y - ref.y);
}

}  // namespace

TEST_SUITE("unicycle") {
  TEST_CASE("straight-line motion") {
    AgentState s;
    const AgentState out = unicycle_step(s, 1.0, 0.0, 1.0);
    CHECK(out.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(out.y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out.psi == 0.0);
  }

  TEST_CASE("closes a circle after one period") {
    const double v = 1.0, omega = 1.0;
    const long n = 640;  // integer number of steps over exactly one period
    const double dt = kTwoPi<double> / omega / n;
    AgentState s;
    s.x = 0.3;
    s.y = -0.2;
    s.psi = 1.1;
    AgentState cur = s;
    for (long k = 0; k < n; ++k) cur = unicycle_step(cur, v, omega, dt);
    const double radius = v / omega;
    CHECK(std::hypot(cur.x - s.x, cur.y - s.y) < 1e-6 * radius);
    CHECK(std::abs(normalize_angle(cur.psi - s.psi)) < 1e-6);
  }

  TEST_CASE("rk4 converges at fourth order") {
    const double e1 = run_error(0.1, 0.8, 0.9, 10.0, Integrator::rk4);
    const double e2 = run_error(0.05, 0.8, 0.9, 10.0, Integrator::rk4);
    CHECK(e1 / e2 > 8.0);
    CHECK(e1 / e2 < 32.0);
  }

  TEST_CASE("euler converges at first order") {
    const double e1 = run_error(0.01, 0.8, 0.9, 10.0, Integrator::euler);
    const double e2 = run_error(0.005, 0.8, 0.9, 10.0, Integrator::euler);
    CHECK(e1 / e2 > 1.5);
    CHECK(e1 / e2 < 3.0);
  }

  TEST_CASE("altitude follows the first-order response") {
    const double k_z = 1.0, dt = 0.02;
    double z = 0.5;
    const double z_cmd = 1.0;
    for (int k = 1; k <= 150; ++k) {
      z = altitude_step(z, z_cmd, k_z, dt);
      const double t = k * dt;
      const double exact = z_cmd + (0.5 - z_cmd) * std::exp(-k_z * t);
      CHECK(std::abs(z - exact) < 1e-6);
    }
  }

  TEST_CASE("velocity mapping") {
    AgentState s;
    s.v_cmd = 1.0;
    s.psi = kPi<double> / 2.0;
    s.z = s.z_cmd = 0.8;
    s.omega_cmd = 0.3;
    const VelocityCommand cmd = altitude_and_velocity_mapping(s, 2.0);
    CHECK(cmd.v_x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cmd.v_y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cmd.v_z == 0.0);
    CHECK(cmd.omega_z == 0.3);
    s.z = 0.5;
    CHECK(altitude_and_velocity_mapping(s, 2.0).v_z == doctest::Approx(0.6).epsilon(1e-12));
  }
}
