#pragma once

#include <Eigen/Dense>
#include <vector>

#include "phononet/errors.hpp"
#include "phononet/graph.hpp"
#include "phononet/spectral.hpp"

namespace phononet {

/// Per-vertex Wiener capacities of a connected graph.
///
/// `average` is the mean of `per_vertex` (the linear-solve route);
/// `kirchhoff` is n * sum(1/lambda_i) over nonzero eigenvalues (the spectral
/// route). The two agree for connected graphs and double as a cross-check.
struct CapacityProfile {
  std::vector<double> per_vertex;
  double average = 0.0;
  double kirchhoff = 0.0;
};

/// Kirchhoff index (resistance) n * sum_{i>=1} 1/lambda_i from an eigenvalue
/// array that contains the single zero mode.
inline double kirchhoff_index(const Eigen::VectorXd& eigenvalues, double zero_tol) {
  const int n = static_cast<int>(eigenvalues.size());
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    if (eigenvalues(i) > zero_tol) sum += 1.0 / eigenvalues(i);
  return n * sum;
}

inline double kirchhoff_index(const Spectrum& s) {
  return kirchhoff_index(s.eigenvalues, s.zero_tol);
}

/// Equilibrium measure of V \ {i}: the solution of L v = 1 - n e_i with
/// v_i = 0. Computed as v = n (Lplus_ii * 1 - Lplus e_i); the kernel
/// ambiguity of the singular solve is exactly the constant shift that the
/// normalization v_i = 0 fixes.
inline Eigen::VectorXd equilibrium_measure(const Eigen::MatrixXd& lplus, int i) {
  const int n = static_cast<int>(lplus.rows());
  if (i < 0 || i >= n) throw std::invalid_argument("vertex index out of range");
  Eigen::VectorXd v = -static_cast<double>(n) * lplus.col(i);
  v.array() += static_cast<double>(n) * lplus(i, i);
  v(i) = 0.0;
  return v;
}

inline Eigen::VectorXd equilibrium_measure(const Graph& g, int i) {
  if (!is_connected(g)) throw disconnected_error();
  return equilibrium_measure(pseudo_inverse(eigendecompose(g)), i);
}

/// Wiener capacity of vertex i: the component sum of its equilibrium measure.
inline double wiener_capacity(const Eigen::MatrixXd& lplus, int i) {
  return equilibrium_measure(lplus, i).sum();
}

inline double wiener_capacity(const Graph& g, int i) {
  if (!is_connected(g)) throw disconnected_error();
  return wiener_capacity(pseudo_inverse(eigendecompose(g)), i);
}

inline CapacityProfile capacity_profile(const Graph& g) {
  if (!is_connected(g)) throw disconnected_error();
  const Spectrum s = eigendecompose(g);
  const Eigen::MatrixXd lplus = pseudo_inverse(s);
  const int n = g.num_vertices();

  CapacityProfile profile;
  profile.per_vertex.resize(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    profile.per_vertex[i] = wiener_capacity(lplus, i);
    sum += profile.per_vertex[i];
  }
  profile.average = sum / n;
  profile.kirchhoff = kirchhoff_index(s);
  return profile;
}

}  // namespace phononet
