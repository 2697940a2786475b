#include <doctest.h>

#include <cmath>
#include <random>

#include "corbit/ellipse.hpp"

using namespace corbit;

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_SUITE("ellipse") {
  TEST_CASE("rotate_to_frame basics") {
    const Vec2<double> e1{1.0, 0.0};
    CHECK(rotate_to_frame(e1, 0.0).x() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rotate_to_frame(e1, 0.0).y() == doctest::Approx(0.0).epsilon(1e-15));
    const Vec2<double> r = rotate_to_frame(e1, kPi<double> / 2.0);
    CHECK(r.x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.y() == doctest::Approx(-1.0).epsilon(1e-15));
  }

  TEST_CASE("rotate_to_frame round trip") {
    const Vec2<double> p{3.0, 4.0};
    const Vec2<double> back = rotate_to_frame(rotate_to_frame(p, 0.3217), -0.3217);
    CHECK((back - p).norm() < 1e-12);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
      const Vec2<double> q{unit(rng) * 20.0 - 10.0, unit(rng) * 20.0 - 10.0};
      const double th = unit(rng) * 20.0 - 10.0;
      CHECK((rotate_to_frame(rotate_to_frame(q, th), -th) - q).norm() < 1e-12);
    }
  }

  TEST_CASE("speed factor on a circle is constant") {
    const EllipseAxesT<double> circle{1.7, 1.7};
    for (double s : {0.0, 0.4, 2.0, 5.5}) {
      const auto sf = speed_factor(s, circle);
      CHECK(sf.g == doctest::Approx(1.7).epsilon(1e-15));
      CHECK(sf.dg_ds == doctest::Approx(0.0).epsilon(1e-15));
    }
  }

  TEST_CASE("speed factor at the axis crossings") {
    const EllipseAxesT<double> axes{2.5, 1.0};
    CHECK(speed_factor(0.0, axes).g == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(speed_factor(kPi<double> / 2.0, axes).g == doctest::Approx(2.5).epsilon(1e-15));
  }

  TEST_CASE("dG/ds matches a central finite difference") {
    const EllipseAxesT<double> axes{2.0, 1.0};
    const double h = 1e-6;
    const double fd = (speed_factor(0.7 + h, axes).g - speed_factor(0.7 - h, axes).g) / (2 * h);
    CHECK(speed_factor(0.7, axes).dg_ds == doctest::Approx(fd).epsilon(1e-6));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const double b = 0.5 + unit(rng) * 2.0;
      const EllipseAxesT<double> ax{b + unit(rng) * 3.0, b};
      const double s = unit(rng) * kTwoPi<double>;
      const double d = (speed_factor(s + h, ax).g - speed_factor(s - h, ax).g) / (2 * h);
      CHECK(speed_factor(s, ax).dg_ds == doctest::Approx(d).epsilon(1e-5));
    }
  }

  TEST_CASE("curvature values") {
    const EllipseAxesT<double> axes{2.5, 1.0};
    CHECK(curvature(kPi<double> / 2.0, axes).kappa == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(curvature(0.0, axes).kappa == doctest::Approx(2.5).epsilon(1e-12));
    const EllipseAxesT<double> circle{2.0, 2.0};
    for (double s : {0.1, 1.0, 3.0}) {
      CHECK(curvature(s, circle).kappa == doctest::Approx(0.5).epsilon(1e-14));
    }
  }

  TEST_CASE("curvature times radius is one") {
    const EllipseAxesT<double> axes{3.0, 1.3};
    for (int k = 0; k < 1000; ++k) {
      const double s = kTwoPi<double> * k / 1000.0;
      const auto c = curvature(s, axes);
      CHECK(std::abs(c.kappa * c.radius - 1.0) <= 1e-12);
      CHECK(c.kappa >= extrema(axes, 1.0).kappa_min - 1e-12);
      CHECK(c.kappa <= extrema(axes, 1.0).kappa_max + 1e-12);
    }
  }

  TEST_CASE("extrema closed forms") {
    const auto e = extrema(EllipseAxesT<double>{2.5, 1.0}, 0.4);
    CHECK(e.v_min == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(e.v_max == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e.r_min == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(e.r_max == doctest::Approx(6.25).epsilon(1e-15));
    const auto c = extrema(EllipseAxesT<double>{1.0, 1.0}, 1.0);
    CHECK(c.v_min == 1.0);
    CHECK(c.v_max == 1.0);
    CHECK(c.r_min == 1.0);
    CHECK(c.r_max == 1.0);
  }

  TEST_CASE("extrema match a dense grid search") {
    const EllipseAxesT<double> axes{3.0, 2.0};
    const double s_v = 0.5;
    const int n = 1000000;
    double v_lo = 1e300, v_hi = -1e300, r_lo = 1e300, r_hi = -1e300;
    for (int k = 0; k < n; ++k) {
      const double s = kTwoPi<double> * k / n;
      const double v = speed_factor(s, axes).g * s_v;
      const double r = curvature(s, axes).radius;
      v_lo = std::min(v_lo, v);
      v_hi = std::max(v_hi, v);
      r_lo = std::min(r_lo, r);
      r_hi = std::max(r_hi, r);
    }
    const auto e = extrema(axes, s_v);
    CHECK(std::abs(v_lo - e.v_min) / e.v_min < 1e-9);
    CHECK(std::abs(v_hi - e.v_max) / e.v_max < 1e-9);
    CHECK(std::abs(r_lo - e.r_min) / e.r_min < 1e-9);
    CHECK(std::abs(r_hi - e.r_max) / e.r_max < 1e-9);
  }

  TEST_CASE("G extrema locations for a > b") {
    const EllipseAxesT<double> axes{2.2, 0.9};
    const int n = 10000;
    double best_lo = 1e300, best_hi = -1e300;
    int at_lo = 0, at_hi = 0;
    for (int k = 0; k < n; ++k) {
      const double s = kTwoPi<double> * k / n;
      const double g = speed_factor(s, axes).g;
      if (g < best_lo) { best_lo = g; at_lo = k; }
      if (g > best_hi) { best_hi = g; at_hi = k; }
    }
    const double grid = kTwoPi<double> / n;
    const double s_lo = at_lo * grid;
    const double s_hi = at_hi * grid;
    const double dist_lo = std::min({std::abs(normalize_angle(s_lo)), std::abs(normalize_angle(s_lo - kPi<double>))});
    const double dist_hi = std::min({std::abs(normalize_angle(s_hi - kPi<double> / 2.0)),
                                     std::abs(normalize_angle(s_hi - 3.0 * kPi<double> / 2.0))});
    CHECK(dist_lo <= grid);
    CHECK(dist_hi <= grid);
  }

  TEST_CASE("orbit coords on the desired orbit") {
    OrbitSpec orbit;
    orbit.axes = {2.0, 1.0};
    const Vec2<double> p{std::sqrt(2.0), std::sqrt(2.0) / 2.0};
    // the parametric point at s = pi/4 reproduces p
    const Vec2<double> expect = concentric_point(kPi<double> / 4.0, 1.0, orbit.axes);
    CHECK((expect - p).norm() < 1e-12);
    const auto c = orbit_coords(p, orbit, Direction::counter_clockwise);
    CHECK(c.gamma_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.s_a == doctest::Approx(kPi<double> / 4.0).epsilon(1e-12));
  }

  TEST_CASE("orbit coords on the axes") {
    OrbitSpec orbit;
    orbit.axes = {2.0, 1.0};
    const auto major = orbit_coords<double>({1.5, 0.0}, orbit, Direction::counter_clockwise);
    CHECK(major.theta_a == 0.0);
    CHECK(major.s_a == 0.0);
    const auto minor = orbit_coords<double>({0.0, 3.0}, orbit, Direction::counter_clockwise);
    CHECK(minor.theta_a == doctest::Approx(kPi<double> / 2.0).epsilon(1e-15));
    CHECK(minor.s_a == doctest::Approx(kPi<double> / 2.0).epsilon(1e-15));
    CHECK(minor.gamma_a == doctest::Approx(9.0).epsilon(1e-15));
  }

  TEST_CASE("orbit coords at the center") {
    OrbitSpec orbit;
    orbit.axes = {2.0, 1.0};
    const auto c = orbit_coords<double>({0.0, 0.0}, orbit, Direction::counter_clockwise);
    CHECK(c.theta_a == 0.0);
    CHECK(c.s_a == 0.0);
    CHECK(c.gamma_a == 0.0);
  }

  TEST_CASE("round trip through the concentric parametrization") {
    std::mt19937_64 rng(2024);
    OrbitSpec orbit;
    orbit.center = {3.0, -2.0};
    orbit.tilt = 0.7;
    orbit.axes = {2.7, 1.2};
    for (int i = 0; i < 10000; ++i) {
      const double s = unit(rng) * kTwoPi<double>;
      const double gamma = unit(rng) * 10.0 + 1e-3;
      const Vec2<double> global =
          orbit_to_global(concentric_point(s, gamma, orbit.axes), orbit);
      const auto c = orbit_coords(global, orbit, Direction::counter_clockwise);
      CHECK(std::abs(c.gamma_a - gamma) <= 1e-9);
      CHECK(std::abs(normalize_angle(c.s_a - s)) <= 1e-9);
    }
  }

  TEST_CASE("clockwise parameter mirrors the geometric parameter") {
    OrbitSpec orbit;
    orbit.axes = {2.0, 1.0};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
      const double s = unit(rng) * kTwoPi<double>;
      const Vec2<double> p = concentric_point(s, 1.0, orbit.axes);
      const auto cw = orbit_coords(p, orbit, Direction::clockwise);
      CHECK(std::abs(normalize_angle(cw.s_a + s)) <= 1e-9);
    }
  }

  TEST_CASE("degenerate circle with clockwise direction at the seam") {
    OrbitSpec orbit;
    orbit.axes = {1.5, 1.5};
    const Vec2<double> p{-1.5, 0.0};  // theta_a = pi
    const auto c = orbit_coords(p, orbit, Direction::clockwise);
    CHECK(c.s_a == doctest::Approx(kPi<double>).epsilon(1e-12));  // wrap(-pi)
    CHECK(c.gamma_a == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("gamma separates inside from outside") {
    OrbitSpec orbit;
    orbit.axes = {2.5, 1.0};
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
      const double s = unit(rng) * kTwoPi<double>;
      const double inside = 0.05 + unit(rng) * 0.9;
      const double outside = 1.05 + unit(rng) * 8.0;
      CHECK(orbit_coords(concentric_point(s, inside, orbit.axes), orbit,
                         Direction::counter_clockwise)
                .gamma_a < 1.0);
      CHECK(orbit_coords(concentric_point(s, outside, orbit.axes), orbit,
                         Direction::counter_clockwise)
                .gamma_a > 1.0);
    }
  }
}
