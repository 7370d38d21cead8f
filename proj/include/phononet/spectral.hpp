#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "phononet/errors.hpp"
#include "phononet/graph.hpp"

namespace phononet {

/// Eigendecomposition of a graph Laplacian.
///
/// `eigenvalues` are ascending with the kernel eigenvalue pinned to exactly
/// zero; column k of `basis` is the unit eigenvector of eigenvalue k, with
/// column 0 replaced by the exact (1/sqrt(n)) all-ones kernel vector and every
/// column's sign fixed so its largest-magnitude entry is positive.
/// `frequencies[i] = sqrt(eigenvalues[i+1])` for the n-1 oscillating modes.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd basis;
  Eigen::VectorXd frequencies;
  double zero_tol = 0.0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

namespace detail {

inline void fix_column_signs(Eigen::MatrixXd& m) {
  for (int c = 0; c < m.cols(); ++c) {
    int imax = 0;
    m.col(c).cwiseAbs().maxCoeff(&imax);
    if (m(imax, c) < 0.0) m.col(c) = -m.col(c);
  }
}

}  // namespace detail

/// Dense symmetric eigendecomposition of a Laplacian-like matrix.
///
/// Requires a symmetric, positive-semidefinite input with a one-dimensional
/// kernel; a second numerically-zero eigenvalue means the underlying graph is
/// disconnected and raises disconnected_error. An eigenvalue counts as zero
/// when it is <= 1e-9 * n * max_degree.
inline Spectrum eigendecompose(const Eigen::MatrixXd& L) {
  const int n = static_cast<int>(L.rows());
  if (n < 1 || L.cols() != n) throw std::invalid_argument("matrix must be square");
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw numeric_error("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success) throw numeric_error("eigendecomposition failed");

  Spectrum s;
  s.eigenvalues = solver.eigenvalues();
  s.basis = solver.eigenvectors();
  s.zero_tol = 1e-9 * n * L.diagonal().maxCoeff();

  if (s.eigenvalues(0) < -s.zero_tol)
    throw numeric_error("matrix is not positive semidefinite");
  int zeros = 0;
  while (zeros < n && s.eigenvalues(zeros) <= s.zero_tol) ++zeros;
  if (zeros == 0) throw numeric_error("no zero eigenvalue: input is not a Laplacian");
  if (zeros > 1) throw disconnected_error();

  // The kernel of a connected Laplacian is spanned by the all-ones vector.
  s.eigenvalues(0) = 0.0;
  s.basis.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  detail::fix_column_signs(s.basis);

  s.frequencies.resize(n - 1);
  for (int i = 1; i < n; ++i) s.frequencies(i - 1) = std::sqrt(s.eigenvalues(i));
  return s;
}

inline Spectrum eigendecompose(const Graph& g) { return eigendecompose(laplacian(g)); }

/// Moore-Penrose pseudoinverse via the spectral form S diag(0, 1/lambda) S^T.
inline Eigen::MatrixXd pseudo_inverse(const Spectrum& s) {
  const int n = s.size();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  for (int i = 1; i < n; ++i) {
    if (s.eigenvalues(i) <= s.zero_tol)
      throw numeric_error("near-zero eigenvalue: pseudoinverse is ill-defined");
    inv(i) = 1.0 / s.eigenvalues(i);
  }
  return s.basis * inv.asDiagonal() * s.basis.transpose();
}

/// Residual of the mode decomposition identity for one phase-space sample:
///   |p.p + q.Lq - sum_i [(u_i.p)^2 + lambda_i (u_i.q)^2]|
/// Exactly zero in real arithmetic for any orthonormal eigenbasis.
inline double decomposition_residual(const Eigen::MatrixXd& L, const Spectrum& s,
                                     const Eigen::VectorXd& q, const Eigen::VectorXd& p) {
  const double direct = p.squaredNorm() + q.dot(L * q);
  Eigen::VectorXd pm = s.basis.transpose() * p;
  Eigen::VectorXd qm = s.basis.transpose() * q;
  double modal = 0.0;
  for (int i = 0; i < s.size(); ++i)
    modal += pm(i) * pm(i) + s.eigenvalues(i) * qm(i) * qm(i);
  return std::abs(direct - modal);
}

/// Max decomposition residual over `trials` standard-normal (q, p) samples.
inline double decomposition_check(const Graph& g, const Spectrum& s, int trials,
                                  unsigned seed = 0x9e3779b9u) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Eigen::MatrixXd L = laplacian(g);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = g.num_vertices();
  double worst = 0.0;
  Eigen::VectorXd q(n), p(n);
  for (int t = 0; t < trials; ++t) {
    for (int i = 0; i < n; ++i) {
      q(i) = normal(rng);
      p(i) = normal(rng);
    }
    worst = std::max(worst, decomposition_residual(L, s, q, p));
  }
  return worst;
}

}  // namespace phononet
