#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phononet/bounds.hpp"
#include "phononet/capacity.hpp"
#include "phononet/circulant.hpp"
#include "phononet/graph.hpp"
#include "phononet/spectral.hpp"
#include "phononet/svg.hpp"
#include "phononet/thermo.hpp"

namespace phononet {

struct IntRange {
  int start = 0;
  int stop = 0;
  int step = 1;
};

struct RealRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
};

/// Shared configuration of the four sweep experiments; the defaults cover
/// the standard parameter ranges end to end.
struct SweepConfig {
  IntRange n_range{10, 1000, 10};          // phonons_vs_n, cap_vs_n
  std::vector<double> r_values{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  double beta = 1.0;
  int n_fixed = 1000;                      // heat_vs_l, bound_vs_T
  IntRange l_range{1, 499, 1};             // heat_vs_l
  bool include_complete = false;           // heat_vs_l: append K_n as final point
  std::vector<int> l_values{100, 200, 300, 400};  // bound_vs_T
  RealRange t_range{0.01, 3.0, 0.01};      // bound_vs_T, temperature T = 1/beta
};

/// A chart derived from a sweep table, ready for the SVG writer.
struct SweepChart {
  std::string name;
  std::vector<Series> series;
  ChartOptions options;
};

/// One experiment's output: a numeric table (the contract of record) plus
/// the charts rendered from it.
struct SweepResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<SweepChart> charts;
};

namespace detail {

inline std::vector<int> materialize(const IntRange& r) {
  if (r.step <= 0 || r.stop < r.start) throw std::invalid_argument("invalid integer range");
  std::vector<int> values;
  for (int v = r.start; v <= r.stop; v += r.step) values.push_back(v);
  return values;
}

inline std::vector<double> materialize(const RealRange& r) {
  if (r.step <= 0.0 || r.stop < r.start) throw std::invalid_argument("invalid real range");
  std::vector<double> values;
  const int count = static_cast<int>(std::floor((r.stop - r.start) / r.step + 1e-9)) + 1;
  values.reserve(count);
  for (int i = 0; i < count; ++i) values.push_back(r.start + i * r.step);
  return values;
}

inline std::string format_r(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", r);
  return buf;
}

}  // namespace detail

/// Connection count l = floor((n/2)^r) of the studied circulant families.
inline int sweep_l(int n, double r) {
  return static_cast<int>(std::floor(std::pow(n / 2.0, r)));
}

/// The r = 1 limit gives l = n/2, outside the circulant domain 2l < n; clamp
/// to the largest valid count.  (For odd n the clamped graph is complete.)
inline int sweep_effective_l(int n, int l) { return 2 * l >= n ? (n - 1) / 2 : l; }

/// Laplacian eigenvalues of the sweep point Ci(n, l) with l already in the
/// valid range; 2l+1 = n (the complete graph) is routed through the dense
/// solver.  The leading eigenvalue is exactly zero in every branch.
inline Eigen::VectorXd sweep_point_eigenvalues(int n, int l) {
  l = sweep_effective_l(n, l);
  if (2 * l + 1 == n) return eigendecompose(generate({GraphKind::circulant, n, l})).eigenvalues;
  return circulant_eigenvalues(n, l).eigenvalues;
}

/// phonons_vs_n experiment: average phonon number and specific heat versus n
/// for the circulant families l = floor((n/2)^r), at fixed beta.
inline SweepResult run_phonons_vs_n(const SweepConfig& config) {
  if (config.beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (config.r_values.empty()) throw std::invalid_argument("r_values must be nonempty");
  for (double r : config.r_values)
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("r values must lie in [0,1]");
  const std::vector<int> ns = detail::materialize(config.n_range);
  if (ns.front() < 3) throw std::invalid_argument("n must be at least 3");

  SweepResult result;
  result.name = "phonons_vs_n";
  result.columns = {"r", "n", "l", "beta", "avg_N", "heat"};

  SweepChart chart_n{"phonons_vs_n_avg_n", {}, {}};
  chart_n.options.title = "Average phonon number vs graph size";
  chart_n.options.x_label = "n";
  chart_n.options.y_label = "<N>";
  chart_n.options.log_x = chart_n.options.log_y = true;
  SweepChart chart_c = chart_n;
  chart_c.name = "phonons_vs_n_heat";
  chart_c.options.title = "Specific heat vs graph size";
  chart_c.options.y_label = "c(beta)";

  for (double r : config.r_values) {
    Series sn{"r = " + detail::format_r(r), {}, {}};
    Series sc = sn;
    for (int n : ns) {
      const int l = sweep_effective_l(n, sweep_l(n, r));
      const ThermoPoint tp = thermo_point(sweep_point_eigenvalues(n, l), config.beta);
      result.rows.push_back(
          {r, static_cast<double>(n), static_cast<double>(l), config.beta, tp.avg_N, tp.heat});
      sn.x.push_back(n);
      sn.y.push_back(tp.avg_N);
      sc.x.push_back(n);
      sc.y.push_back(tp.heat);
    }
    chart_n.series.push_back(std::move(sn));
    chart_c.series.push_back(std::move(sc));
  }
  result.charts = {std::move(chart_n), std::move(chart_c)};
  return result;
}

/// cap_vs_n experiment: normalized average capacity capbar/n versus n for
/// the same families.
inline SweepResult run_cap_vs_n(const SweepConfig& config) {
  if (config.r_values.empty()) throw std::invalid_argument("r_values must be nonempty");
  for (double r : config.r_values)
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("r values must lie in [0,1]");
  const std::vector<int> ns = detail::materialize(config.n_range);
  if (ns.front() < 3) throw std::invalid_argument("n must be at least 3");

  SweepResult result;
  result.name = "cap_vs_n";
  result.columns = {"r", "n", "l", "cap_ratio"};

  SweepChart chart{"cap_vs_n", {}, {}};
  chart.options.title = "Normalized average capacity vs graph size";
  chart.options.x_label = "n";
  chart.options.y_label = "cap/n";
  chart.options.log_x = chart.options.log_y = true;

  for (double r : config.r_values) {
    Series s{"r = " + detail::format_r(r), {}, {}};
    for (int n : ns) {
      const int l = sweep_effective_l(n, sweep_l(n, r));
      const double cap = kirchhoff_index(sweep_point_eigenvalues(n, l), 0.0);
      result.rows.push_back({r, static_cast<double>(n), static_cast<double>(l), cap / n});
      s.x.push_back(n);
      s.y.push_back(cap / n);
    }
    chart.series.push_back(std::move(s));
  }
  result.charts = {std::move(chart)};
  return result;
}

/// heat_vs_l experiment: specific heat versus connection count l at fixed n
/// and beta; optionally appends the complete graph (all vertices joined) as
/// a final point flagged in the last column.
inline SweepResult run_heat_vs_l(const SweepConfig& config) {
  if (config.beta <= 0.0) throw std::invalid_argument("beta must be positive");
  const std::vector<int> ls = detail::materialize(config.l_range);
  const int n = config.n_fixed;
  if (2 * ls.back() >= n) throw std::invalid_argument("l range requires 2l < n");

  SweepResult result;
  result.name = "heat_vs_l";
  result.columns = {"n", "l", "beta", "heat", "complete_graph"};

  SweepChart chart{"heat_vs_l", {}, {}};
  chart.options.title = "Specific heat vs connection count";
  chart.options.x_label = "l";
  chart.options.y_label = "c(beta)";

  Series s{"c(beta)", {}, {}};
  for (int l : ls) {
    const ThermoPoint tp = thermo_point(circulant_eigenvalues(n, l).eigenvalues, config.beta);
    result.rows.push_back(
        {static_cast<double>(n), static_cast<double>(l), config.beta, tp.heat, 0.0});
    s.x.push_back(l);
    s.y.push_back(tp.heat);
  }
  chart.series.push_back(std::move(s));

  if (config.include_complete) {
    const Spectrum spec = eigendecompose(generate({GraphKind::complete, n, 0}));
    const ThermoPoint tp = thermo_point(spec.eigenvalues, config.beta);
    result.rows.push_back(
        {static_cast<double>(n), n / 2.0, config.beta, tp.heat, 1.0});
    chart.series.push_back(Series{"complete graph", {n / 2.0}, {tp.heat}});
  }
  result.charts = {std::move(chart)};
  return result;
}

/// bound_vs_T experiment: exact specific heat against its bound over a
/// temperature range T = 1/beta, one curve pair per l.  The bound column
/// holds the formula value at every T; `valid` flags the rows inside the
/// guarantee domain T < threshold = sqrt(n/capbar).
inline SweepResult run_bound_vs_t(const SweepConfig& config) {
  if (config.l_values.empty()) throw std::invalid_argument("l_values must be nonempty");
  const std::vector<double> ts = detail::materialize(config.t_range);
  if (ts.front() <= 0.0) throw std::invalid_argument("temperatures must be positive");
  const int n = config.n_fixed;

  SweepResult result;
  result.name = "bound_vs_T";
  result.columns = {"l", "T", "beta", "heat", "bound", "threshold", "valid"};

  SweepChart chart{"bound_vs_T", {}, {}};
  chart.options.title = "Specific heat bound vs temperature";
  chart.options.x_label = "T";
  chart.options.y_label = "c";

  for (int l : config.l_values) {
    const Eigen::VectorXd eigenvalues = sweep_point_eigenvalues(n, l);
    const double cap = kirchhoff_index(eigenvalues, 0.0);
    const double threshold = std::sqrt(n / cap);
    Series exact{"c exact, l = " + std::to_string(l), {}, {}};
    Series bound{"bound, l = " + std::to_string(l), {}, {}};
    for (double t : ts) {
      const double beta = 1.0 / t;
      const ThermoPoint tp = thermo_point(eigenvalues, beta);
      const double b = heat_bound_formula(cap, n, beta);
      const double valid = beta * beta > cap / n ? 1.0 : 0.0;
      result.rows.push_back({static_cast<double>(l), t, beta, tp.heat, b, threshold, valid});
      exact.x.push_back(t);
      exact.y.push_back(tp.heat);
      bound.x.push_back(t);
      bound.y.push_back(b);
    }
    chart.series.push_back(std::move(exact));
    chart.series.push_back(std::move(bound));
  }
  result.charts = {std::move(chart)};
  return result;
}

}  // namespace phononet
