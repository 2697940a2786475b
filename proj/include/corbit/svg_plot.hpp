#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace corbit {

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
};

/// Minimal deterministic SVG line plot; identical input yields byte-identical
/// output.
void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series, bool equal_aspect = false);

/// Render the six run panels (trajectories, gamma, separation, speed,
/// turn rate, altitude) from an emitted metrics CSV.
void emit_plots(const std::filesystem::path& metrics_csv, const std::filesystem::path& out_dir);

}  // namespace corbit
