#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "phononet/errors.hpp"

namespace phononet {

/// Laplacian eigenvalues of the circulant graph Ci(n,l), kept in index order
/// (not sorted) so that the conjugate symmetry lambda_j == lambda_{n-j} is
/// visible. lambda_0 = 0 exactly.
struct CirculantSpectrum {
  int n = 0;
  int l = 0;
  Eigen::VectorXd eigenvalues;
};

namespace detail {

// Direct evaluation lambda_j = 2l - 2 sum_{s=1..l} cos(2 pi j s / n); used
// as the fallback when the sine quotient is ill-conditioned.
inline double circulant_eigenvalue_by_sum(int n, int l, int j) {
  double sum = 0.0;
  for (int s = 1; s <= l; ++s)
    sum += std::cos(2.0 * std::numbers::pi * j * s / n);
  return 2.0 * l - 2.0 * sum;
}

}  // namespace detail

/// Closed-form eigenvalues lambda_j = 2l+1 - sin(j pi (2l+1)/n) / sin(j pi/n)
/// for j = 1..n-1. Requires 2l < n.
inline CirculantSpectrum circulant_eigenvalues(int n, int l) {
  if (l < 1) throw std::invalid_argument("circulant requires l >= 1");
  if (2 * l >= n)
    throw std::invalid_argument("circulant requires 2l < n (got n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")");
  CirculantSpectrum s;
  s.n = n;
  s.l = l;
  s.eigenvalues.resize(n);
  s.eigenvalues(0) = 0.0;
  const double m = 2.0 * l + 1.0;
  for (int j = 1; j < n; ++j) {
    const double theta = j * std::numbers::pi / n;  // in (0, pi)
    const double denom = std::sin(theta);
    s.eigenvalues(j) = std::abs(denom) < 1e-8
                           ? detail::circulant_eigenvalue_by_sum(n, l, j)
                           : m - std::sin(theta * m) / denom;
  }
  return s;
}

/// Laplacian eigenvalues of the complete graph K_n: 0 once, n with
/// multiplicity n-1. The limit case of the circulant family at 2l+1 = n.
inline Eigen::VectorXd complete_graph_eigenvalues(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  Eigen::VectorXd eigs = Eigen::VectorXd::Constant(n, static_cast<double>(n));
  eigs(0) = 0.0;
  return eigs;
}

/// Residual of the cosine-sum identity
///   sum_{s=1..l} cos(theta s) = cos((l+1)theta/2) sin(l theta/2) / sin(theta/2)
/// at theta = 2 pi j / n; the key step in the closed-form derivation.
inline double cosine_sum_check(int n, int l, int j) {
  if (j < 1 || j > n - 1) throw std::invalid_argument("j must be in 1..n-1");
  if (2 * l >= n) throw std::invalid_argument("requires 2l < n");
  const double theta = 2.0 * std::numbers::pi * j / n;
  double direct = 0.0;
  for (int s = 1; s <= l; ++s) direct += std::cos(theta * s);
  const double closed =
      std::cos(0.5 * (l + 1) * theta) * std::sin(0.5 * l * theta) / std::sin(0.5 * theta);
  return std::abs(direct - closed);
}

}  // namespace phononet
