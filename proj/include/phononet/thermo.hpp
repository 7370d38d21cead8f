#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "phononet/errors.hpp"

namespace phononet {

/// Thermodynamic state of the phonon gas on one spectrum at inverse
/// temperature beta (k_b = hbar = m = 1). avg_H includes the zero-point
/// energy sum(omega_i / 2).
struct ThermoPoint {
  double beta = 0.0;
  double avg_N = 0.0;
  double avg_H = 0.0;
  double heat = 0.0;
};

/// Quantum-regime indicator <N> * lambda / V with thermal wavelength
/// lambda = sqrt(2 pi beta); order one marks the quantum regime.
struct RegimeIndicator {
  double value = 0.0;
  double volume = 1.0;
};

namespace detail {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Bose-Einstein occupation 1/(e^x - 1). The e^{-x} form never overflows and
// underflows to zero for large x; the series covers the cancellation-prone
// small-x corner.
inline double bose_occupation(double x) {
  if (x < 1e-8) return 1.0 / x - 0.5;
  const double emx = std::exp(-x);
  return emx / (-std::expm1(-x));
}

// Einstein function x^2 e^x / (e^x - 1)^2, the per-mode heat summand.
// Decreasing on x > 0 with limit 1 at x -> 0.
inline double einstein_summand(double x) {
  if (x < 1e-8) return 1.0 - x * x / 12.0;
  const double emx = std::exp(-x);
  const double denom = -std::expm1(-x);
  return x * x * emx / (denom * denom);
}

}  // namespace detail

/// Average phonon number of a single mode, 1/(e^{beta omega} - 1).
inline double mode_occupation(double omega, double beta) {
  if (omega <= 0.0) throw std::invalid_argument("omega must be positive");
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  return detail::bose_occupation(beta * omega);
}

/// Per-mode specific-heat summand (beta omega)^2 e^{beta omega}/(e^{beta omega}-1)^2.
inline double einstein_function(double x) {
  if (x <= 0.0) throw std::invalid_argument("argument must be positive");
  return detail::einstein_summand(x);
}

/// Evaluate <N>, <H> and c(beta) on a spectrum given as the full eigenvalue
/// array (any order). Exactly one eigenvalue must be zero within tolerance:
/// the centre-of-momentum zero mode, which is excluded from all sums.
inline ThermoPoint thermo_point(const Eigen::VectorXd& eigenvalues, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  const int n = static_cast<int>(eigenvalues.size());
  if (n < 1) throw std::invalid_argument("empty spectrum");
  const double zero_tol = 1e-9 * std::max(1.0, eigenvalues.maxCoeff());

  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    if (eigenvalues(i) < -zero_tol)
      throw numeric_error("negative eigenvalue in spectrum");
    if (eigenvalues(i) <= zero_tol) ++zeros;
  }
  if (zeros > 1) throw disconnected_error("spectrum has more than one zero mode");
  if (zeros == 0) throw std::invalid_argument("spectrum lacks the zero mode");

  detail::KahanSum number, energy, heat;
  for (int i = 0; i < n; ++i) {
    if (eigenvalues(i) <= zero_tol) continue;
    const double omega = std::sqrt(eigenvalues(i));
    const double x = beta * omega;
    const double occ = detail::bose_occupation(x);
    number.add(occ);
    energy.add(omega * occ + 0.5 * omega);
    heat.add(detail::einstein_summand(x));
  }
  return ThermoPoint{beta, number.sum, energy.sum, heat.sum};
}

inline RegimeIndicator regime_indicator(const ThermoPoint& tp, double volume) {
  if (volume <= 0.0) throw std::invalid_argument("volume must be positive");
  return RegimeIndicator{tp.avg_N * std::sqrt(2.0 * std::numbers::pi * tp.beta) / volume,
                         volume};
}

}  // namespace phononet
