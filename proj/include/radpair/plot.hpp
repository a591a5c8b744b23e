#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "radpair/experiments.hpp"

namespace radpair {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  double y_offset = 0.0;  // display only
};

struct PlotSpec {
  std::string title;
  std::string x_label = "ϑ / π";
  std::string y_label = "singlet yield";
  std::vector<Series> series;
  bool log_x = false;
};

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

// Padded ranges enclosing every finite (x, y + offset) point.
AxisRange x_range(const PlotSpec& spec);
AxisRange y_range(const PlotSpec& spec);

/// Standalone SVG: one polyline per series (a marker for single points),
/// labeled axes and a legend. Non-finite points are skipped. Throws Error when
/// no series has a finite point.
std::string to_svg(const PlotSpec& spec);
void render_plot(const PlotSpec& spec, const std::filesystem::path& path);

// theta / pi against singlet yield, with the no-rf curve when present.
PlotSpec sweep_plot(const SweepResult& result, const std::string& label);
Series sweep_series(const std::vector<YieldPoint>& points, const std::string& label);

}  // namespace radpair
