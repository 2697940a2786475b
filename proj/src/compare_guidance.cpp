#include "corbit/compare_guidance.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "corbit/guidance.hpp"
#include "corbit/svg_plot.hpp"
#include "corbit/unicycle.hpp"

namespace corbit {
namespace {

constexpr double kSettleBand = 0.05;

struct Trace {
  std::vector<double> gamma, s_wrapped, s_unwrapped;
};

Trace simulate(GuidanceLaw law, double k_gamma, double dt, double duration) {
  const OrbitSpec orbit{{0.0, 0.0}, 0.0, {2.5, 1.0}, {0.0, 0.0}};
  const GuidanceGains gains{k_gamma, 1.0, 1.5};
  const double speed = 0.4;
  AgentState s;
  s.x = 4.0;
  s.y = 0.0;
  s.psi = kPi<double> / 2.0;

  const long n = std::lround(duration / dt);
  Trace out;
  out.gamma.reserve(n);
  out.s_wrapped.reserve(n);
  out.s_unwrapped.reserve(n);
  double unwrapped = 0.0;
  bool first = true;
  for (long k = 0; k < n; ++k) {
    const OrbitCoords coords =
        orbit_coords<double>({s.x, s.y}, orbit, Direction::counter_clockwise);
    if (first) {
      unwrapped = coords.s_a;
      first = false;
    } else {
      unwrapped += normalize_angle(coords.s_a - out.s_wrapped.back());
    }
    out.gamma.push_back(coords.gamma_a);
    out.s_wrapped.push_back(coords.s_a);
    out.s_unwrapped.push_back(unwrapped);
    const HeadingCommand cmd =
        heading_command(coords, orbit.axes, Direction::counter_clockwise, gains, law);
    const double omega = angular_rate_command(cmd.psi_d, s.psi, orbit.tilt, gains);
    s = unicycle_step(s, speed, omega, dt);
  }
  return out;
}

// first time at which |gamma - 1| < 0.05 has held over one full orbit of s
double strict_settle_time(const Trace& tr, double dt) {
  const std::size_t n = tr.gamma.size();
  // next index with |gamma - 1| >= band, at or after k
  std::vector<std::size_t> next_bad(n + 1, n);
  for (std::size_t k = n; k-- > 0;) {
    next_bad[k] = std::abs(tr.gamma[k] - 1.0) >= kSettleBand ? k : next_bad[k + 1];
  }
  std::size_t j = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (next_bad[k] == k) continue;
    if (j < k) j = k;
    while (j < n && tr.s_unwrapped[j] < tr.s_unwrapped[k] + kTwoPi<double>) ++j;
    if (j >= n) return -1.0;
    if (next_bad[k] > j) return static_cast<double>(j) * dt;
  }
  return -1.0;
}

// start of the first orbit after two consecutive orbits whose max errors
// agree within 1 percent; -1 if the trace never stabilizes
double steady_state_start(const Trace& tr, double dt) {
  const std::size_t n = tr.gamma.size();
  std::vector<std::size_t> orbit_starts{0};
  std::vector<double> orbit_max;
  double level = tr.s_unwrapped.front() + kTwoPi<double>;
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    m = std::max(m, std::abs(tr.gamma[k] - 1.0));
    if (tr.s_unwrapped[k] >= level) {
      orbit_max.push_back(m);
      orbit_starts.push_back(k);
      m = 0.0;
      level += kTwoPi<double>;
    }
  }
  for (std::size_t i = 1; i < orbit_max.size(); ++i) {
    const double scale = std::max(orbit_max[i], 1e-9);
    if (std::abs(orbit_max[i] - orbit_max[i - 1]) <= 0.01 * scale) {
      return static_cast<double>(orbit_starts[i + 1]) * dt;
    }
  }
  return -1.0;
}

bool in_high_curvature_window(double s) {
  return std::abs(normalize_angle(s)) <= kPi<double> / 8.0 ||
         std::abs(normalize_angle(s - kPi<double>)) <= kPi<double> / 8.0;
}

double high_curvature_error(const Trace& tr, double from_time, double dt) {
  double worst = 0.0;
  for (std::size_t k = static_cast<std::size_t>(from_time / dt); k < tr.gamma.size(); ++k) {
    if (in_high_curvature_window(tr.s_wrapped[k])) {
      worst = std::max(worst, std::abs(tr.gamma[k] - 1.0));
    }
  }
  return worst;
}

}  // namespace

GuidanceComparison run_guidance_comparison(double dt, double duration) {
  GuidanceComparison cmp;
  cmp.dt = dt;
  const EllipseAxes axes{2.5, 1.0};
  cmp.kappa_min = extrema(axes, 1.0).kappa_min;

  const double k_constant = 2.0;
  const double k_weighted = 2.0 / cmp.kappa_min;
  const Trace constant = simulate(GuidanceLaw::constant_gain, k_constant, dt, duration);
  const Trace weighted = simulate(GuidanceLaw::curvature_weighted, k_weighted, dt, duration);

  cmp.settle_time_constant = strict_settle_time(constant, dt);
  cmp.settle_time_weighted = strict_settle_time(weighted, dt);
  cmp.steady_start_constant = cmp.settle_time_constant;
  cmp.steady_start_weighted = cmp.settle_time_weighted;
  if (cmp.steady_start_constant < 0.0) {
    cmp.constant_used_steady_fallback = true;
    cmp.steady_start_constant = steady_state_start(constant, dt);
    if (cmp.steady_start_constant < 0.0) cmp.steady_start_constant = duration / 2.0;
  }
  if (cmp.steady_start_weighted < 0.0) {
    cmp.weighted_used_steady_fallback = true;
    cmp.steady_start_weighted = steady_state_start(weighted, dt);
    if (cmp.steady_start_weighted < 0.0) cmp.steady_start_weighted = duration / 2.0;
  }

  const double from = std::max(cmp.steady_start_constant, cmp.steady_start_weighted);
  cmp.high_curv_err_constant = high_curvature_error(constant, from, dt);
  cmp.high_curv_err_weighted = high_curvature_error(weighted, from, dt);
  cmp.weighted_strictly_better = cmp.high_curv_err_weighted < cmp.high_curv_err_constant;

  {
    const OrbitSpec orbit{{0.0, 0.0}, 0.0, axes, {0.0, 0.0}};
    const Vec2<double> probe =
        orbit_to_global<double>(concentric_point<double>(kPi<double> / 2.0, 1.0, axes), orbit);
    const OrbitCoords coords = orbit_coords(probe, orbit, Direction::counter_clockwise);
    cmp.psi_o_probe_constant =
        heading_command(coords, axes, Direction::counter_clockwise,
                        GuidanceGains{k_constant, 1.0, 1.5}, GuidanceLaw::constant_gain)
            .psi_o;
    cmp.psi_o_probe_weighted =
        heading_command(coords, axes, Direction::counter_clockwise,
                        GuidanceGains{k_weighted, 1.0, 1.5}, GuidanceLaw::curvature_weighted)
            .psi_o;
  }

  const long n = std::lround(duration / dt);
  cmp.t.resize(n);
  for (long k = 0; k < n; ++k) cmp.t[k] = static_cast<double>(k) * dt;
  cmp.gamma_constant = constant.gamma;
  cmp.gamma_weighted = weighted.gamma;
  cmp.s_constant = constant.s_wrapped;
  cmp.s_weighted = weighted.s_wrapped;
  return cmp;
}

void write_comparison(const GuidanceComparison& cmp, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string());

  {
    std::ofstream csv(out_dir / "comparison.csv");
    if (!csv) throw std::runtime_error("cannot write comparison.csv");
    csv << "t,gamma_constant,gamma_weighted,s_constant,s_weighted\n";
    char buf[200];
    for (std::size_t k = 0; k < cmp.t.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", cmp.t[k],
                    cmp.gamma_constant[k], cmp.gamma_weighted[k], cmp.s_constant[k],
                    cmp.s_weighted[k]);
      csv << buf;
    }
  }
  {
    std::ofstream rep(out_dir / "comparison_summary.txt");
    if (!rep) throw std::runtime_error("cannot write comparison_summary.txt");
    char buf[128];
    const auto line = [&](const char* key, double v) {
      std::snprintf(buf, sizeof(buf), "%s: %.17g\n", key, v);
      rep << buf;
    };
    line("kappa_min", cmp.kappa_min);
    line("settle_time_constant", cmp.settle_time_constant);
    line("settle_time_weighted", cmp.settle_time_weighted);
    line("steady_start_constant", cmp.steady_start_constant);
    line("steady_start_weighted", cmp.steady_start_weighted);
    rep << "constant_used_steady_fallback: " << (cmp.constant_used_steady_fallback ? 1 : 0)
        << "\n";
    rep << "weighted_used_steady_fallback: " << (cmp.weighted_used_steady_fallback ? 1 : 0)
        << "\n";
    line("high_curv_err_constant", cmp.high_curv_err_constant);
    line("high_curv_err_weighted", cmp.high_curv_err_weighted);
    line("psi_o_probe_constant", cmp.psi_o_probe_constant);
    line("psi_o_probe_weighted", cmp.psi_o_probe_weighted);
    rep << "weighted_strictly_better: " << (cmp.weighted_strictly_better ? 1 : 0) << "\n";
  }
  std::vector<PlotSeries> series(2);
  series[0].label = "constant gain";
  series[0].x = cmp.t;
  series[0].y = cmp.gamma_constant;
  series[1].label = "curvature weighted";
  series[1].x = cmp.t;
  series[1].y = cmp.gamma_weighted;
  write_line_plot(out_dir / "gamma_comparison.svg", "orbit level vs time", "t (s)", "gamma",
                  series);
}

}  // namespace corbit
