#pragma once

// Minimal SVG plots for reports.

#include <string>
#include <vector>

namespace zap::svg {

struct Marker {
  double x = 0;
  std::string label;
};

/// Histogram of `values` over [lo, hi] with vertical markers.
std::string histogram(const std::vector<double>& values, double lo, double hi, int bins, const std::string& title,
                      const std::string& xlabel, const std::vector<Marker>& markers = {});

struct Series {
  std::string label;
  std::vector<double> x, y;
};

/// Polyline plot; a horizontal reference line is drawn at `ref` when finite.
std::string line_plot(const std::vector<Series>& series, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, double ref = 0.0 / 0.0);

}  // namespace zap::svg
