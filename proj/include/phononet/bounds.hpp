#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phononet/capacity.hpp"
#include "phononet/circulant.hpp"
#include "phononet/errors.hpp"
#include "phononet/graph.hpp"
#include "phononet/spectral.hpp"
#include "phononet/thermo.hpp"

namespace phononet {

/// Principal-branch Lambert W (w >= -1, w e^w = x) for x >= -1/e.
/// Halley iteration; near the branch point the series in
/// p = sqrt(2(e x + 1)) is used directly.
inline double lambert_w0(double x) {
  const double branch = -std::exp(-1.0);
  if (x < branch) throw std::domain_error("lambert_w0 requires x >= -1/e");
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
    if (p < 1e-4) return w;  // series truncation error O(p^4), already at roundoff
  } else if (x <= 1.0) {
    w = x * (1.0 - x);
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double dw = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= dw;
    if (std::abs(dw) <= 1e-16 * (2.0 + std::abs(w))) break;
  }
  return w;
}

/// Maximizer of x^k / (e^x - 1) over x > 0: x*(k) = W(-k e^{-k}) + k.
inline double alpha_n_maximizer(int k) {
  if (k < 2) throw std::invalid_argument("alpha_N requires k >= 2");
  return lambert_w0(-k * std::exp(-static_cast<double>(k))) + k;
}

/// Bound constant alpha_N(k) = -W(-k e^{-k}) (W(-k e^{-k}) + k)^{k-1},
/// the maximum of x^k / (e^x - 1); alpha_N(2) ~ 0.648.
inline double alpha_n(int k) {
  if (k < 2) throw std::invalid_argument("alpha_N requires k >= 2");
  const double w = lambert_w0(-k * std::exp(-static_cast<double>(k)));
  return -w * std::pow(w + k, k - 1);
}

inline double alpha_n2_cached() {
  static const double value = alpha_n(2);
  return value;
}

/// g(x) = x + 2 + (x+4)x^2 + e^x (x^3 - 4x^2 + x - 2); its unique positive
/// root is the maximizer of (x^2+1) x^2 e^x / (e^x - 1)^2.
inline double einstein_root_function(double x) {
  return x + 2.0 + (x + 4.0) * x * x + std::exp(x) * (((x - 4.0) * x + 1.0) * x - 2.0);
}

inline double einstein_root_derivative(double x) {
  return 1.0 + x * (3.0 * x + 8.0) + std::exp(x) * (x * ((x - 1.0) * x - 7.0) - 1.0);
}

/// Upper end of the root bracket: the real root of x^3 - 4x^2 + x - 2,
/// s0 = (cbrt(6 sqrt(87) + 73) + cbrt(73 - 6 sqrt(87)) + 4) / 3 ~ 3.8751.
inline double einstein_root_upper_bound() {
  const double t = 6.0 * std::sqrt(87.0);
  return (std::cbrt(t + 73.0) + std::cbrt(73.0 - t) + 4.0) / 3.0;
}

struct EinsteinBoundConstant {
  double x_star = 0.0;  // positive root of g
  double alpha = 0.0;   // alpha_E ~ 5.23
};

/// Compute x* and alpha_E = (x*^2+1) x*^2 e^{x*} / (e^{x*}-1)^2 by bracketed
/// bisection on (1, s0) followed by a Newton polish.
inline EinsteinBoundConstant alpha_e() {
  double lo = 1.0;
  double hi = einstein_root_upper_bound();
  if (!(einstein_root_function(lo) < 0.0 && einstein_root_function(hi) > 0.0))
    throw numeric_error("einstein root bracket failure");
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (einstein_root_function(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i)
    x -= einstein_root_function(x) / einstein_root_derivative(x);
  if (std::abs(einstein_root_function(x)) > 1e-10)
    throw numeric_error("einstein root polish did not converge");

  const double ex = std::expm1(x);
  return EinsteinBoundConstant{x, (x * x + 1.0) * x * x * std::exp(x) / (ex * ex)};
}

inline const EinsteinBoundConstant& einstein_bound_cached() {
  static const EinsteinBoundConstant value = alpha_e();
  return value;
}

/// The bound constants in one bundle, alpha_N tabulated for k = 2..k_max.
struct BoundConstants {
  std::map<int, double> alpha_n;
  double alpha_e = 0.0;
  double x_star_e = 0.0;
};

inline BoundConstants compute_bound_constants(int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  BoundConstants c;
  for (int k = 2; k <= k_max; ++k) c.alpha_n[k] = alpha_n(k);
  const auto e = einstein_bound_cached();
  c.alpha_e = e.alpha;
  c.x_star_e = e.x_star;
  return c;
}

/// Right side of the phonon-number bound: alpha_N(2) capbar / (beta^2 n).
inline double phonon_bound(double cap_avg, int n, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  return alpha_n2_cached() * cap_avg / (beta * beta * n);
}

inline double phonon_bound(const CapacityProfile& profile, int n, double beta) {
  return phonon_bound(profile.kirchhoff, n, beta);
}

/// Right side of the specific-heat bound, alpha_E r / (1 + r) with
/// r = capbar / (beta^2 n); engaged only on its validity domain
/// beta^2 > capbar / n (strict).
inline std::optional<double> heat_bound(double cap_avg, int n, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  if (beta * beta <= cap_avg / n) return std::nullopt;
  const double r = cap_avg / (beta * beta * n);
  return einstein_bound_cached().alpha * r / (1.0 + r);
}

inline std::optional<double> heat_bound(const CapacityProfile& profile, int n, double beta) {
  return heat_bound(profile.kirchhoff, n, beta);
}

/// Value of the heat-bound formula irrespective of the validity domain; used
/// to locate the empirical crossover temperature in sweeps.
inline double heat_bound_formula(double cap_avg, int n, double beta) {
  const double r = cap_avg / (beta * beta * n);
  return einstein_bound_cached().alpha * r / (1.0 + r);
}

/// Both bounds evaluated against the exact thermodynamics of one graph at
/// one temperature.
struct BoundReport {
  double beta = 0.0;
  double cap_ratio = 0.0;  // capbar / n
  double phonon_bound = 0.0;
  double phonon_actual = 0.0;
  std::optional<double> heat_bound;
  double heat_actual = 0.0;
  bool holds_n = false;
  std::optional<bool> holds_c;
};

inline BoundReport make_bound_report(double cap_avg, int n, const ThermoPoint& tp) {
  BoundReport r;
  r.beta = tp.beta;
  r.cap_ratio = cap_avg / n;
  r.phonon_bound = phonon_bound(cap_avg, n, tp.beta);
  r.phonon_actual = tp.avg_N;
  r.heat_bound = heat_bound(cap_avg, n, tp.beta);
  r.heat_actual = tp.heat;
  r.holds_n = tp.avg_N <= r.phonon_bound;
  if (r.heat_bound) r.holds_c = tp.heat < *r.heat_bound;
  return r;
}

inline BoundReport make_bound_report(const CapacityProfile& profile, int n,
                                     const ThermoPoint& tp) {
  return make_bound_report(profile.kirchhoff, n, tp);
}

/// Max violation over `grid` of the two global inequalities
///   1/(e^x - 1) <= alpha_N(k) / x^k
///   x^2 e^x/(e^x - 1)^2 <= alpha_E / (x^2 + 1).
/// Nonpositive (up to roundoff) when both bounds hold on the grid.
inline double check_function_bounds(int k, std::span<const double> grid) {
  const double a_n = alpha_n(k);
  const double a_e = einstein_bound_cached().alpha;
  double worst = -std::numeric_limits<double>::infinity();
  for (double x : grid) {
    if (x <= 0.0) throw std::invalid_argument("grid values must be positive");
    const double occ_gap = detail::bose_occupation(x) - a_n / std::pow(x, k);
    const double ein_gap = detail::einstein_summand(x) - a_e / (x * x + 1.0);
    worst = std::max({worst, occ_gap, ein_gap});
  }
  return worst;
}

struct FamilySample {
  int n = 0;
  double cap_ratio = 0.0;  // capbar / n
};

enum class FamilyVerdict { bounded, divergent };

/// Outcome of the phase classification of a graph family: the fitted log-log
/// growth exponent of capbar versus n, and the verdict it implies.
struct FamilyClassification {
  std::string family;
  std::vector<FamilySample> samples;
  double slope = 0.0;
  FamilyVerdict verdict = FamilyVerdict::divergent;
};

struct ClassifyOptions {
  double slope_tolerance = 0.1;   // bounded iff slope <= 1 + tolerance
  double window_fraction = 0.5;   // fit over the top fraction of samples
};

namespace detail {

// Average Wiener capacity for one family member; closed-form spectra for the
// circulant kinds, dense eigendecomposition otherwise.
inline double family_average_capacity(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GraphKind::circulant:
      return kirchhoff_index(circulant_eigenvalues(spec.n, spec.l).eigenvalues, 0.0);
    case GraphKind::cycle:
      return kirchhoff_index(circulant_eigenvalues(spec.n, 1).eigenvalues, 0.0);
    default: {
      const Graph g = generate(spec);
      if (!is_connected(g)) throw disconnected_error();
      return kirchhoff_index(eigendecompose(g));
    }
  }
}

}  // namespace detail

/// Classify a graph family n -> GeneratorSpec as bounded or divergent by the
/// growth of its average Wiener capacity: linear growth (slope ~ 1) keeps the
/// total phonon number bounded for every fixed temperature.
inline FamilyClassification classify_family(const std::function<GeneratorSpec(int)>& family,
                                            std::span<const int> ns,
                                            const ClassifyOptions& options = {},
                                            std::string label = {}) {
  if (ns.size() < 4) throw std::invalid_argument("need at least 4 sample sizes");
  for (size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw std::invalid_argument("sizes must be strictly increasing");

  FamilyClassification result;
  result.family = std::move(label);
  result.samples.reserve(ns.size());
  for (int n : ns) {
    const double cap = detail::family_average_capacity(family(n));
    result.samples.push_back({n, cap / n});
  }

  const size_t m = result.samples.size();
  const size_t window = std::max<size_t>(2, static_cast<size_t>(
                                                std::llround(m * options.window_fraction)));
  const size_t start = m - std::min(window, m);

  double sx = 0.0, sy = 0.0;
  const size_t count = m - start;
  std::vector<double> xs(count), ys(count);
  for (size_t i = start; i < m; ++i) {
    xs[i - start] = std::log(static_cast<double>(result.samples[i].n));
    ys[i - start] = std::log(result.samples[i].cap_ratio * result.samples[i].n);
    sx += xs[i - start];
    sy += ys[i - start];
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  result.slope = sxy / sxx;
  result.verdict = result.slope <= 1.0 + options.slope_tolerance ? FamilyVerdict::bounded
                                                                 : FamilyVerdict::divergent;
  return result;
}

}  // namespace phononet
