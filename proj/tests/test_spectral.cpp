#include <catch2/catch_amalgamated.hpp>

#include "phononet/circulant.hpp"
#include "phononet/errors.hpp"
#include "phononet/graph.hpp"
#include "phononet/spectral.hpp"
#include "test_support.hpp"

using namespace phononet;
using Catch::Matchers::WithinAbs;

namespace {
// Frozen spectra obtained from the characteristic polynomials:
//   K2: det(xI - L) = x(x - 2)            -> {0, 2}
//   P3: det(xI - L) = x(x - 1)(x - 3)     -> {0, 1, 3}
constexpr double k2_eigenvalues[] = {0.0, 2.0};
constexpr double p3_eigenvalues[] = {0.0, 1.0, 3.0};
}  // namespace

TEST_CASE("eigendecompose matches characteristic-polynomial roots") {
  const Spectrum k2 = eigendecompose(generate({GraphKind::complete, 2, 0}));
  for (int i = 0; i < 2; ++i)
    REQUIRE_THAT(k2.eigenvalues[i], WithinAbs(k2_eigenvalues[i], 1e-12));

  const Spectrum p3 = eigendecompose(generate({GraphKind::path, 3, 0}));
  for (int i = 0; i < 3; ++i)
    REQUIRE_THAT(p3.eigenvalues[i], WithinAbs(p3_eigenvalues[i], 1e-12));
}

TEST_CASE("dense K5 spectrum agrees with the closed form") {
  const Spectrum s = eigendecompose(generate({GraphKind::complete, 5, 0}));
  const Eigen::VectorXd expected = complete_graph_eigenvalues(5);
  for (int i = 0; i < 5; ++i) REQUIRE_THAT(s.eigenvalues[i], WithinAbs(expected[i], 1e-12));
}

TEST_CASE("spectrum invariants on random connected graphs") {
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    const Graph g = test_support::random_connected_graph(30, 40, seed);
    const Eigen::MatrixXd L = laplacian(g);
    const Spectrum s = eigendecompose(L);
    const int n = g.num_vertices();

    // ascending order, exact zero head, frequencies = sqrt(eigenvalues)
    REQUIRE(s.eigenvalues[0] == 0.0);
    for (int i = 1; i < n; ++i) {
      REQUIRE(s.eigenvalues[i] >= s.eigenvalues[i - 1]);
      REQUIRE(s.eigenvalues[i] > s.zero_tol);
    }
    REQUIRE(s.frequencies.size() == n - 1);
    for (int i = 1; i < n; ++i)
      REQUIRE_THAT(s.frequencies[i - 1], WithinAbs(std::sqrt(s.eigenvalues[i]), 1e-14));

    // orthonormal basis and exact reconstruction
    const Eigen::MatrixXd gram = s.basis.transpose() * s.basis;
    REQUIRE((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd rebuilt =
        s.basis * s.eigenvalues.asDiagonal() * s.basis.transpose();
    REQUIRE((rebuilt - L).cwiseAbs().maxCoeff() < 1e-9 * L.diagonal().maxCoeff());

    // kernel column is the exact uniform vector; signs are canonical
    const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) REQUIRE(s.basis(i, 0) == uniform);
    for (int c = 0; c < n; ++c) {
      int arg = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(s.basis(i, c)) > std::abs(s.basis(arg, c))) arg = i;
      REQUIRE(s.basis(arg, c) > 0.0);
    }
  }
}

TEST_CASE("eigendecompose input validation") {
  SECTION("non-symmetric matrix") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, -1.0, 0.5, 1.0;
    REQUIRE_THROWS_AS(eigendecompose(m), numeric_error);
  }
  SECTION("indefinite matrix") {
    const Eigen::MatrixXd L = laplacian(generate({GraphKind::path, 4, 0}));
    REQUIRE_THROWS_AS(eigendecompose(Eigen::MatrixXd(-L)), numeric_error);
  }
  SECTION("positive definite matrix has no zero mode") {
    REQUIRE_THROWS_AS(eigendecompose(Eigen::MatrixXd(Eigen::MatrixXd::Identity(3, 3))),
                      numeric_error);
  }
  SECTION("disconnected graph has a repeated zero") {
    REQUIRE_THROWS_AS(eigendecompose(Graph(4, {{0, 1}, {2, 3}})), disconnected_error);
  }
}

TEST_CASE("pseudo-inverse properties") {
  const Graph g = test_support::random_connected_graph(25, 30, 7u);
  const Eigen::MatrixXd L = laplacian(g);
  const Spectrum s = eigendecompose(L);
  const Eigen::MatrixXd lp = pseudo_inverse(s);
  const int n = g.num_vertices();

  REQUIRE((lp - lp.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((L * lp * L - L).cwiseAbs().maxCoeff() < 1e-9);
  REQUIRE((lp * L * lp - lp).cwiseAbs().maxCoeff() < 1e-9);
  // the kernel direction is annihilated
  REQUIRE((lp * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() < 1e-12);
  // L+ L is the projector off the uniform vector
  const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) -
                               Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  REQUIRE((lp * L - proj).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("mode decomposition identity") {
  SECTION("zero vectors give zero residual") {
    const Graph g = generate({GraphKind::path, 3, 0});
    const Spectrum s = eigendecompose(g);
    REQUIRE(decomposition_residual(laplacian(g), s, Eigen::VectorXd::Zero(3),
                                   Eigen::VectorXd::Zero(3)) == 0.0);
  }
  SECTION("random phase-space samples") {
    for (const auto& spec : {GeneratorSpec{GraphKind::complete, 2, 0},
                             GeneratorSpec{GraphKind::circulant, 50, 5}}) {
      const Graph g = generate(spec);
      const Spectrum s = eigendecompose(g);
      const double scale = g.num_vertices() * (1.0 + s.eigenvalues[g.num_vertices() - 1]);
      REQUIRE(decomposition_check(g, s, 100) < 1e-10 * scale);
    }
  }
  SECTION("random graphs") {
    const Graph g = test_support::random_connected_graph(40, 60, 11u);
    const Spectrum s = eigendecompose(g);
    const double scale = 40 * (1.0 + s.eigenvalues[39]);
    REQUIRE(decomposition_check(g, s, 50) < 1e-10 * scale);
  }
}
