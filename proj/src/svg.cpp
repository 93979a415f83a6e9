#include "qmem/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qmem/error.hpp"

namespace qmem::svg {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = -1.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
};

}  // namespace

std::string palette(std::size_t index) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  return colors[index % (sizeof colors / sizeof colors[0])];
}

std::string render(const Plot& plot) {
  Range xr;
  Range yr;
  for (const Series& s : plot.series) {
    if (s.x.size() != s.y.size()) throw DimensionError("svg: series '" + s.label + "' has mismatched x/y");
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  for (const Marker& m : plot.markers) {
    xr.add(m.x);
    yr.add(m.y);
  }
  xr.finish();
  yr.finish();

  const double left = 70.0;
  const double right = 20.0;
  const double top = 40.0;
  const double bottom = 50.0;
  const double pw = plot.width - left - right;
  const double ph = plot.height - top - bottom;
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(plot.width) << "\" height=\""
     << num(plot.height) << "\" viewBox=\"0 0 " << num(plot.width) << ' ' << num(plot.height) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(plot.width) << "\" height=\"" << num(plot.height)
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(plot.width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / kTicks;
    os << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(px(fx)) << "\" y2=\""
       << num(top + ph + 5) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(top + ph + 18)
       << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(fx) << "</text>\n";
    os << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(py(fy)) << "\" x2=\"" << num(left) << "\" y2=\""
       << num(py(fy)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py(fy) + 4)
       << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(fy) << "</text>\n";
  }
  if (xr.lo < 0.0 && xr.hi > 0.0) {
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(px(0)) << "\" y2=\""
       << num(top + ph) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (yr.lo < 0.0 && yr.hi > 0.0) {
    os << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(left + pw) << "\" y2=\""
       << num(py(0)) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(plot.height - 10)
     << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(plot.xlabel) << "</text>\n";
  os << "<text x=\"16\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
     << num(top + ph / 2) << ")\">" << escape(plot.ylabel) << "</text>\n";

  for (const Series& s : plot.series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
      if (k) os << ' ';
      os << num(px(s.x[k])) << ',' << num(py(s.y[k]));
    }
    os << "\"/>\n";
  }
  for (const Marker& m : plot.markers) {
    os << "<circle cx=\"" << num(px(m.x)) << "\" cy=\"" << num(py(m.y)) << "\" r=\"3.5\" fill=\"black\"/>\n";
    if (!m.label.empty()) {
      os << "<text x=\"" << num(px(m.x) + 6) << "\" y=\"" << num(py(m.y) - 6) << "\" font-size=\"11\">"
         << escape(m.label) << "</text>\n";
    }
  }

  double ly = top + 14;
  for (const Series& s : plot.series) {
    if (s.label.empty()) continue;
    os << "<line x1=\"" << num(left + pw - 120) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(left + pw - 100)
       << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << num(left + pw - 95) << "\" y=\"" << num(ly) << "\" font-size=\"11\">" << escape(s.label)
       << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qmem::svg
