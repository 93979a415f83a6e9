#pragma once

// Minimal line-plot renderer: axes, ticks, legend, one <polyline> per series.

#include <string>
#include <vector>

namespace qmem::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

struct Marker {
  double x = 0.0;
  double y = 0.0;
  std::string label;
};

struct Plot {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<Series> series;
  std::vector<Marker> markers;
  double width = 640.0;
  double height = 420.0;
};

/// Throws DimensionError when a series has mismatched x/y lengths.
std::string render(const Plot& plot);

/// Cycles through a fixed palette.
std::string palette(std::size_t index);

}  // namespace qmem::svg
