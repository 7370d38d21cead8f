#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phononet {

/// One polyline of a chart.
struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  int width = 880;
  int height = 560;
};

namespace detail {

inline std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
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

// Round a tick step to 1, 2 or 5 times a power of ten.
inline double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm < 1.5) return mag;
  if (norm < 3.5) return 2.0 * mag;
  if (norm < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

struct Axis {
  double lo = 0.0, hi = 1.0;        // data range (log10 scale when log)
  bool log = false;
  std::vector<double> ticks;        // positions in axis coordinates
  std::vector<std::string> labels;

  double fraction(double v) const { return (v - lo) / (hi - lo); }
};

inline Axis make_axis(double lo, double hi, bool log) {
  Axis a;
  a.log = log;
  if (log) {
    if (lo <= 0.0) throw std::invalid_argument("log axis needs positive data");
    lo = std::log10(lo);
    hi = std::log10(hi);
  }
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.04 * (hi - lo);
  a.lo = lo - pad;
  a.hi = hi + pad;

  if (log) {
    for (int k = static_cast<int>(std::ceil(a.lo)); k <= static_cast<int>(std::floor(a.hi)); ++k) {
      a.ticks.push_back(k);
      a.labels.push_back(svg_num(std::pow(10.0, k)));
    }
  }
  if (a.ticks.size() < 2) {  // linear ticks, also the fallback for narrow log ranges
    a.ticks.clear();
    a.labels.clear();
    const double step = nice_step(a.hi - a.lo, 5);
    for (double t = std::ceil(a.lo / step) * step; t <= a.hi + 1e-9 * step; t += step) {
      const double v = std::abs(t) < 1e-12 * step ? 0.0 : t;
      a.ticks.push_back(v);
      a.labels.push_back(svg_num(log ? std::pow(10.0, v) : v));
    }
  }
  return a;
}

}  // namespace detail

/// Write a self-contained SVG line chart (axes, ticks, legend; optional
/// log scales).  Output is deterministic for identical input.
inline void write_svg_chart(std::ostream& out, std::span<const Series> series,
                            const ChartOptions& options) {
  using detail::svg_num;
  using detail::xml_escape;

  if (series.empty()) throw std::invalid_argument("chart needs at least one series");
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("series x/y length mismatch");
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        first = false;
      } else {
        xmin = std::min(xmin, s.x[i]);
        xmax = std::max(xmax, s.x[i]);
        ymin = std::min(ymin, s.y[i]);
        ymax = std::max(ymax, s.y[i]);
      }
    }
  }
  if (first) throw std::invalid_argument("chart needs at least one data point");

  const detail::Axis ax = detail::make_axis(xmin, xmax, options.log_x);
  const detail::Axis ay = detail::make_axis(ymin, ymax, options.log_y);

  const double W = options.width, H = options.height;
  const double ml = 72, mr = 24, mt = options.title.empty() ? 24 : 48, mb = 56;
  const auto px = [&](double v) { return ml + ax.fraction(v) * (W - ml - mr); };
  const auto py = [&](double v) { return H - mb - ay.fraction(v) * (H - mt - mb); };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
  constexpr size_t palette_size = sizeof(palette) / sizeof(palette[0]);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";

  if (!options.title.empty())
    out << "<text x=\"" << svg_num(W / 2) << "\" y=\"24\" font-size=\"16\" "
        << "text-anchor=\"middle\">" << xml_escape(options.title) << "</text>\n";

  // gridlines and tick labels
  for (size_t i = 0; i < ax.ticks.size(); ++i) {
    const double x = px(ax.ticks[i]);
    out << "<line x1=\"" << svg_num(x) << "\" y1=\"" << svg_num(mt) << "\" x2=\"" << svg_num(x)
        << "\" y2=\"" << svg_num(H - mb) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << svg_num(x) << "\" y=\"" << svg_num(H - mb + 18)
        << "\" text-anchor=\"middle\">" << ax.labels[i] << "</text>\n";
  }
  for (size_t i = 0; i < ay.ticks.size(); ++i) {
    const double y = py(ay.ticks[i]);
    out << "<line x1=\"" << svg_num(ml) << "\" y1=\"" << svg_num(y) << "\" x2=\""
        << svg_num(W - mr) << "\" y2=\"" << svg_num(y) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << svg_num(ml - 8) << "\" y=\"" << svg_num(y + 4)
        << "\" text-anchor=\"end\">" << ay.labels[i] << "</text>\n";
  }

  // frame
  out << "<rect x=\"" << svg_num(ml) << "\" y=\"" << svg_num(mt) << "\" width=\""
      << svg_num(W - ml - mr) << "\" height=\"" << svg_num(H - mt - mb)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // axis labels
  if (!options.x_label.empty())
    out << "<text x=\"" << svg_num(ml + (W - ml - mr) / 2) << "\" y=\"" << svg_num(H - 14)
        << "\" text-anchor=\"middle\">" << xml_escape(options.x_label) << "</text>\n";
  if (!options.y_label.empty())
    out << "<text x=\"18\" y=\"" << svg_num(mt + (H - mt - mb) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << svg_num(mt + (H - mt - mb) / 2) << ")\">" << xml_escape(options.y_label)
        << "</text>\n";

  // data
  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    out << "<polyline fill=\"none\" stroke=\"" << palette[si % palette_size]
        << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      const double xv = ax.log ? std::log10(s.x[i]) : s.x[i];
      const double yv = ay.log ? std::log10(s.y[i]) : s.y[i];
      if (i) out << ' ';
      out << svg_num(px(xv)) << ',' << svg_num(py(yv));
    }
    out << "\"/>\n";
  }

  // legend (only when labels are present)
  size_t legend_rows = 0;
  for (const auto& s : series)
    if (!s.label.empty()) ++legend_rows;
  if (legend_rows > 0) {
    const double lx = W - mr - 170, ly = mt + 10;
    out << "<rect x=\"" << svg_num(lx) << "\" y=\"" << svg_num(ly) << "\" width=\"162\" height=\""
        << svg_num(8.0 + 18.0 * legend_rows)
        << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#bbb\"/>\n";
    size_t row = 0;
    for (size_t si = 0; si < series.size(); ++si) {
      if (series[si].label.empty()) continue;
      const double yy = ly + 16 + 18.0 * row;
      out << "<line x1=\"" << svg_num(lx + 8) << "\" y1=\"" << svg_num(yy - 4) << "\" x2=\""
          << svg_num(lx + 30) << "\" y2=\"" << svg_num(yy - 4) << "\" stroke=\""
          << palette[si % palette_size] << "\" stroke-width=\"1.5\"/>\n";
      out << "<text x=\"" << svg_num(lx + 36) << "\" y=\"" << svg_num(yy) << "\">"
          << xml_escape(series[si].label) << "</text>\n";
      ++row;
    }
  }

  out << "</g>\n</svg>\n";
}

inline void write_svg_file(const std::string& path, std::span<const Series> series,
                           const ChartOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_svg_chart(out, series, options);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace phononet
