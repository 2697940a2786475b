#include "corbit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "corbit/ellipse.hpp"
#include "corbit/metrics.hpp"

namespace corbit {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 52;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void widen(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
};

}  // namespace

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series, bool equal_aspect) {
  bool first = true;
  Range rx, ry;
  for (const auto& s : series) {
    for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
      if (first) {
        rx.lo = rx.hi = s.x[k];
        ry.lo = ry.hi = s.y[k];
        first = false;
      }
      rx.widen(s.x[k]);
      ry.widen(s.y[k]);
    }
  }
  if (rx.hi - rx.lo <= 0.0) {
    rx.lo -= 1.0;
    rx.hi += 1.0;
  }
  if (ry.hi - ry.lo <= 0.0) {
    ry.lo -= 1.0;
    ry.hi += 1.0;
  }
  const double pad_x = 0.05 * (rx.hi - rx.lo);
  const double pad_y = 0.05 * (ry.hi - ry.lo);
  rx.lo -= pad_x;
  rx.hi += pad_x;
  ry.lo -= pad_y;
  ry.hi += pad_y;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  if (equal_aspect) {
    const double sx = plot_w / (rx.hi - rx.lo);
    const double sy = plot_h / (ry.hi - ry.lo);
    if (sx < sy) {  // stretch y range
      const double mid = 0.5 * (ry.lo + ry.hi);
      const double half = 0.5 * plot_h / sx;
      ry.lo = mid - half;
      ry.hi = mid + half;
    } else {
      const double mid = 0.5 * (rx.lo + rx.hi);
      const double half = 0.5 * plot_w / sy;
      rx.lo = mid - half;
      rx.hi = mid + half;
    }
  }

  const auto px = [&](double x) {
    return kMarginLeft + (x - rx.lo) / (rx.hi - rx.lo) * plot_w;
  };
  const auto py = [&](double y) {
    return kMarginTop + (ry.hi - y) / (ry.hi - ry.lo) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plot: " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
      << "font-family=\"sans-serif\">" << title << "</text>\n";
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"#444\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = rx.lo + (rx.hi - rx.lo) * i / 4.0;
    const double yv = ry.lo + (ry.hi - ry.lo) * i / 4.0;
    out << "<text x=\"" << fmt(px(xv), "%.2f") << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(xv, "%.4g")
        << "</text>\n";
    out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(py(yv) + 4, "%.2f")
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(yv, "%.4g")
        << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
      << "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">" << y_label << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (k) out << ' ';
      out << fmt(px(s.x[k]), "%.2f") << ',' << fmt(py(s.y[k]), "%.2f");
    }
    out << "\"/>\n";
    if (!s.label.empty()) {
      out << "<text x=\"" << kWidth - kMarginRight - 6 << "\" y=\""
          << kMarginTop + 16 + 15 * static_cast<int>(si)
          << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << color
          << "\">" << s.label << "</text>\n";
    }
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_plots(const std::filesystem::path& metrics_csv, const std::filesystem::path& out_dir) {
  const std::vector<MetricsRecord> records = read_metrics_csv(metrics_csv);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out_dir.string());

  const std::size_t agent_count = records.empty() ? 0 : records.front().agents.size();
  const auto agent_label = [](std::size_t i) { return "agent " + std::to_string(i + 1); };

  const auto per_agent_panel = [&](const std::filesystem::path& file, const std::string& title,
                                   const std::string& y_label, auto&& getter) {
    std::vector<PlotSeries> series(agent_count);
    for (std::size_t i = 0; i < agent_count; ++i) {
      series[i].label = agent_label(i);
      for (const auto& rec : records) {
        series[i].x.push_back(rec.t);
        series[i].y.push_back(getter(rec.agents[i]));
      }
    }
    write_line_plot(out_dir / file, title, "t (s)", y_label, series);
  };

  // top view: agent paths, the convoy-centroid path and the final orbit
  {
    std::vector<PlotSeries> series(agent_count);
    for (std::size_t i = 0; i < agent_count; ++i) {
      series[i].label = agent_label(i);
      for (const auto& rec : records) {
        series[i].x.push_back(rec.agents[i].x);
        series[i].y.push_back(rec.agents[i].y);
      }
    }
    PlotSeries convoy;
    convoy.label = "convoy path";
    for (const auto& rec : records) {
      convoy.x.push_back(rec.orbit.center_x);
      convoy.y.push_back(rec.orbit.center_y);
    }
    series.push_back(std::move(convoy));
    if (!records.empty()) {
      const auto& o = records.back().orbit;
      const OrbitSpec orbit{{o.center_x, o.center_y}, o.tilt, {o.a, o.b}, {0.0, 0.0}};
      PlotSeries outline;
      outline.label = "final orbit";
      for (int k = 0; k <= 256; ++k) {
        const double s = kTwoPi<double> * k / 256.0;
        const Vec2<double> p = orbit_to_global<double>(concentric_point<double>(s, 1.0, orbit.axes), orbit);
        outline.x.push_back(p.x());
        outline.y.push_back(p.y());
      }
      series.push_back(std::move(outline));
    }
    write_line_plot(out_dir / "trajectory.svg", "top view", "x (m)", "y (m)", series, true);
  }

  per_agent_panel("gamma.svg", "orbit level", "gamma", [](const AgentMetrics& a) { return a.gamma_a; });
  per_agent_panel("separation.svg", "parametric separation error", "D_s (rad)",
                  [](const AgentMetrics& a) { return a.d_s; });
  per_agent_panel("speed.svg", "commanded linear speed", "V (m/s)",
                  [](const AgentMetrics& a) { return a.v_cmd; });
  per_agent_panel("turn_rate.svg", "commanded turn rate", "omega (rad/s)",
                  [](const AgentMetrics& a) { return a.omega_cmd; });
  per_agent_panel("altitude.svg", "altitude", "z (m)", [](const AgentMetrics& a) { return a.z; });
}

}  // namespace corbit
