#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "phononet/bounds.hpp"
#include "phononet/sweep.hpp"
#include "phononet/thermo.hpp"

using namespace phononet;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Frozen reference values, computed independently at 30-digit precision.
constexpr double w_at_m2em2 = -0.406375739959960;  // W(-2 e^-2)
constexpr double alpha_n_ref[] = {0.647610237891915, 1.42143547274774, 4.77984081933602,
                                  21.2014356605499};
constexpr double x_star_ref[] = {1.59362426004004, 2.82143937212208, 3.92069039487289,
                                 4.96511423174428};
constexpr double x_star_e_ref = 3.66985562233820;
constexpr double alpha_e_ref = 5.22783938845526;
constexpr double s0_ref = 3.87512979416278;

// Golden-section maximizer: independent of the Lambert-W route.
template <class F>
double golden_max(F f, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  for (int i = 0; i < 200 && b - a > 1e-12; ++i) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - phi * (b - a);
    d = a + phi * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("lambert W: pinned values") {
  REQUIRE(lambert_w0(0.0) == 0.0);
  REQUIRE_THAT(lambert_w0(std::exp(1.0)), WithinAbs(1.0, 1e-14));
  REQUIRE_THAT(lambert_w0(-2.0 * std::exp(-2.0)), WithinAbs(w_at_m2em2, 1e-13));
  REQUIRE_THAT(lambert_w0(-std::exp(-1.0)), WithinAbs(-1.0, 1e-7));
  REQUIRE_THROWS_AS(lambert_w0(-0.5), std::domain_error);
}

TEST_CASE("lambert W: residual contract across the domain") {
  std::vector<double> xs;
  const double branch = -std::exp(-1.0);
  for (double d : {1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.2, 0.3, 0.36})
    xs.push_back(branch + d);
  for (double x : {-0.25, -0.1, -1e-3, -1e-6, -1e-9}) xs.push_back(x);
  for (double e = -12.0; e <= 6.0; e += 0.25) xs.push_back(std::pow(10.0, e));

  for (double x : xs) {
    const double w = lambert_w0(x);
    REQUIRE(w >= -1.0);
    REQUIRE(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("alpha_N table and maximizers") {
  for (int k = 2; k <= 5; ++k) {
    REQUIRE_THAT(alpha_n(k), WithinAbs(alpha_n_ref[k - 2], 1e-12 * alpha_n_ref[k - 2] + 1e-12));
    REQUIRE_THAT(alpha_n_maximizer(k), WithinAbs(x_star_ref[k - 2], 1e-12));
  }
  REQUIRE_THROWS_AS(alpha_n(1), std::invalid_argument);
  REQUIRE_THROWS_AS(alpha_n_maximizer(0), std::invalid_argument);
}

TEST_CASE("alpha_N is the attained maximum of x^k/(e^x - 1)") {
  for (int k = 2; k <= 5; ++k) {
    const auto f = [k](double x) { return std::pow(x, k) * detail::bose_occupation(x); };
    const double x_opt = golden_max(f, 0.1, 3.0 * k);
    REQUIRE_THAT(x_opt, WithinAbs(alpha_n_maximizer(k), 1e-6));
    REQUIRE_THAT(f(x_opt), WithinRel(alpha_n(k), 1e-9));
  }
}

TEST_CASE("einstein bound constant") {
  const EinsteinBoundConstant c = alpha_e();
  REQUIRE_THAT(c.x_star, WithinAbs(x_star_e_ref, 1e-12));
  REQUIRE_THAT(c.alpha, WithinAbs(alpha_e_ref, 1e-12));
  REQUIRE(std::abs(einstein_root_function(c.x_star)) <= 1e-10);

  SECTION("bracket endpoints") {
    REQUIRE_THAT(einstein_root_upper_bound(), WithinAbs(s0_ref, 1e-12));
    REQUIRE(einstein_root_function(1.0) < 0.0);
    REQUIRE(einstein_root_function(einstein_root_upper_bound()) > 0.0);
  }
  SECTION("attained maximum of (x^2+1) x^2 e^x/(e^x-1)^2") {
    const auto h = [](double x) { return (x * x + 1.0) * detail::einstein_summand(x); };
    const double x_opt = golden_max(h, 1.0, 6.0);
    REQUIRE_THAT(x_opt, WithinAbs(c.x_star, 1e-6));
    REQUIRE_THAT(h(x_opt), WithinRel(c.alpha, 1e-9));
  }
}

TEST_CASE("bound constants bundle") {
  const BoundConstants c = compute_bound_constants(5);
  REQUIRE(c.alpha_n.size() == 4);
  REQUIRE_THAT(c.alpha_n.at(2), WithinAbs(alpha_n_ref[0], 1e-12));
  REQUIRE_THAT(c.alpha_e, WithinAbs(alpha_e_ref, 1e-12));
  REQUIRE_THAT(c.x_star_e, WithinAbs(x_star_e_ref, 1e-12));
  REQUIRE_THROWS_AS(compute_bound_constants(1), std::invalid_argument);
}

TEST_CASE("global function inequalities on the log grid") {
  // 10^4 log-spaced points on [1e-6, 50]
  std::vector<double> grid(10000);
  const double lo = std::log(1e-6), hi = std::log(50.0);
  for (size_t i = 0; i < grid.size(); ++i)
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (grid.size() - 1));

  for (int k = 2; k <= 5; ++k) REQUIRE(check_function_bounds(k, grid) <= 1e-12);

  SECTION("equality is attained at the maximizers") {
    for (int k = 2; k <= 5; ++k) {
      const double xs = alpha_n_maximizer(k);
      REQUIRE_THAT(detail::bose_occupation(xs), WithinRel(alpha_n(k) / std::pow(xs, k), 1e-12));
    }
    const EinsteinBoundConstant c = alpha_e();
    REQUIRE_THAT(detail::einstein_summand(c.x_star),
                 WithinRel(c.alpha / (c.x_star * c.x_star + 1.0), 1e-12));
  }
  SECTION("grid validation") {
    const std::vector<double> bad = {1.0, 0.0};
    REQUIRE_THROWS_AS(check_function_bounds(2, bad), std::invalid_argument);
  }
}

TEST_CASE("bound report on the two-vertex complete graph") {
  Eigen::VectorXd eigs(2);
  eigs << 0.0, 2.0;
  const double cap_avg = 1.0;  // capbar(K_2)

  SECTION("beta = 1: both bounds engaged and near-tight phonon bound") {
    const ThermoPoint tp = thermo_point(eigs, 1.0);
    const BoundReport r = make_bound_report(cap_avg, 2, tp);
    REQUIRE_THAT(r.phonon_bound, WithinAbs(alpha_n_ref[0] / 2.0, 1e-12));
    REQUIRE(r.holds_n);
    REQUIRE(tp.avg_N / r.phonon_bound >= 0.99);  // near-tightness witness
    REQUIRE(r.heat_bound.has_value());
    REQUIRE_THAT(*r.heat_bound, WithinAbs(alpha_e_ref / 3.0, 1e-12));  // r = 1/2
    REQUIRE(r.holds_c.has_value());
    REQUIRE(*r.holds_c);
  }
  SECTION("heat bound is strict about its validity domain") {
    REQUIRE_FALSE(heat_bound(2.0, 2, 1.0).has_value());   // beta^2 == cap/n exactly
    REQUIRE(heat_bound(2.0, 2, 1.01).has_value());
    const ThermoPoint tp = thermo_point(eigs, 0.6);       // beta^2 = 0.36 < 0.5
    const BoundReport r = make_bound_report(cap_avg, 2, tp);
    REQUIRE_FALSE(r.heat_bound.has_value());
    REQUIRE_FALSE(r.holds_c.has_value());
    REQUIRE(r.holds_n);  // the phonon bound is unconditional
  }
  SECTION("argument validation") {
    REQUIRE_THROWS_AS(phonon_bound(1.0, 2, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(heat_bound(1.0, 2, -1.0), std::invalid_argument);
  }
}

TEST_CASE("family classification") {
  std::vector<int> ns;
  for (int n = 10; n <= 200; n += 10) ns.push_back(n);

  SECTION("complete family is bounded with slope near 1") {
    const auto result = classify_family(
        [](int n) { return GeneratorSpec{GraphKind::complete, n, 0}; }, ns, {}, "complete");
    REQUIRE(result.verdict == FamilyVerdict::bounded);
    REQUIRE_THAT(result.slope, WithinAbs(1.0, 0.05));
    REQUIRE(result.samples.size() == ns.size());
    REQUIRE(result.family == "complete");
  }
  SECTION("path family diverges with slope near 3") {
    const auto result = classify_family(
        [](int n) { return GeneratorSpec{GraphKind::path, n, 0}; }, ns, {}, "path");
    REQUIRE(result.verdict == FamilyVerdict::divergent);
    REQUIRE_THAT(result.slope, WithinAbs(3.0, 0.05));
  }
  SECTION("cycle family diverges") {
    const auto result = classify_family(
        [](int n) { return GeneratorSpec{GraphKind::cycle, n, 0}; }, ns, {}, "cycle");
    REQUIRE(result.verdict == FamilyVerdict::divergent);
    REQUIRE_THAT(result.slope, WithinAbs(3.0, 0.05));
  }
  SECTION("dense circulant family: capbar ~ n^(2-r) for l = floor((n/2)^r)") {
    const auto family = [](int n) {
      const int l = std::clamp(sweep_l(n, 0.8), 1, (n - 1) / 2);
      return GeneratorSpec{GraphKind::circulant, n, l};
    };
    std::vector<int> big;
    for (int n = 20; n <= 400; n += 20) big.push_back(n);
    const auto result = classify_family(family, big, {}, "circulant r=0.8");
    REQUIRE_THAT(result.slope, WithinAbs(1.2, 0.08));
    REQUIRE(result.verdict == FamilyVerdict::divergent);
  }
  SECTION("input validation") {
    const auto complete = [](int n) { return GeneratorSpec{GraphKind::complete, n, 0}; };
    REQUIRE_THROWS_AS(classify_family(complete, std::vector<int>{10, 20, 30}, {}, ""),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(classify_family(complete, std::vector<int>{10, 20, 20, 30}, {}, ""),
                      std::invalid_argument);
  }
  SECTION("tolerance knob moves the verdict") {
    ClassifyOptions loose;
    loose.slope_tolerance = 2.5;
    const auto result = classify_family(
        [](int n) { return GeneratorSpec{GraphKind::path, n, 0}; }, ns, loose, "path");
    REQUIRE(result.verdict == FamilyVerdict::bounded);
  }
}
