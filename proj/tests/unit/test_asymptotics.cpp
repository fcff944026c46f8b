#include <doctest.h>

#include <cmath>

#include "eulerspline/asymptotics.hpp"
#include "eulerspline/combinat.hpp"

using namespace eulerspline;

TEST_CASE("gaussian density") {
  CHECK(gaussian_phi(0.0) == doctest::Approx(0.3989422804014327));
  CHECK(gaussian_phi(1.3) == gaussian_phi(-1.3));
  CHECK(gaussian_phi(1.0) / gaussian_phi(0.0) ==
        doctest::Approx(std::exp(-0.5)));
}

TEST_CASE("eulerian approximation values") {
  CHECK(eulerian_approx(3, 0.0) == doctest::Approx(std::sqrt(6.0 / (4 * M_PI))));
  CHECK(eulerian_approx(9, 1.7) == eulerian_approx(9, -1.7));
  // The d = 3 center error quoted throughout: |2/3 - sqrt(6/(4 pi))|.
  double err = std::abs(2.0 / 3.0 - eulerian_approx(3, 0.0));
  CHECK(err == doctest::Approx(0.024322).epsilon(1e-4));
}

TEST_CASE("descent approximation relations") {
  CHECK(descent_approx(5, 1, 0.7) == doctest::Approx(eulerian_approx(5, 1.7)));
  // Large n recovers the plain Gaussian shape.
  CHECK(descent_approx(5, 1000000, 0.4) ==
        doctest::Approx(eulerian_approx(5, 0.4)).epsilon(1e-4));
}

TEST_CASE("refined approximation structure") {
  HermiteSequence seq = hermite_prob(4);
  // j = 0 collapses to the plain Gaussian profile.
  CHECK(refined_approx(12, 0, 0.9, seq) ==
        doctest::Approx(eulerian_approx(12, 0.9)));
  // He_1(0) = 0, so the j = 1 correction vanishes at the center.
  CHECK(refined_approx(12, 1, 0.0, seq) ==
        doctest::Approx(eulerian_approx(12, 0.0)));
}

TEST_CASE("bspline derivative limit values") {
  HermiteSequence seq = hermite_prob(4);
  CHECK(bspline_gaussian_approx(0, 0.0, seq) ==
        doctest::Approx(0.3989422804014327));
  CHECK(bspline_gaussian_approx(1, 0.0, seq) == doctest::Approx(0.0));
  CHECK(bspline_gaussian_approx(2, 0.0, seq) ==
        doctest::Approx(-0.3989422804014327));
}

TEST_CASE("synthetic power laws fit exactly") {
  ErrorScan scan;
  for (int d : {8, 16, 32, 64}) {
    scan.samples.emplace_back(d, 7.0 * std::pow(d, -1.5));
  }
  SlopeFit fit = fit_convergence_order(scan);
  CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  ErrorScan inv;
  for (int d : {10, 20, 40}) inv.samples.emplace_back(d, 2.0 / d);
  CHECK(fit_convergence_order(inv).slope == doctest::Approx(-1.0));

  ErrorScan flat;
  for (int d : {10, 20, 40}) flat.samples.emplace_back(d, 0.25);
  SlopeFit flat_fit = fit_convergence_order(flat);
  CHECK(flat_fit.slope == doctest::Approx(0.0));
  CHECK(flat_fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("slope fit rejects bad input") {
  ErrorScan scan;
  scan.samples.emplace_back(8, 0.5);
  scan.samples.emplace_back(16, 0.25);
  CHECK_THROWS_AS(fit_convergence_order(scan), std::domain_error);
  scan.samples.emplace_back(32, 0.0);
  CHECK_THROWS_AS(fit_convergence_order(scan), std::domain_error);
}

TEST_CASE("lattice scan reproduces the d = 3 window value") {
  ScanParams params;
  params.family = Family::eulerian;
  GridSpec grid{-1.0, 1.0, ScanMode::lattice};
  ErrorScan scan = error_scan(params, {3}, grid);
  REQUIRE(scan.samples.size() == 1);
  CHECK(scan.samples[0].second == doctest::Approx(0.024322).epsilon(1e-4));
}

TEST_CASE("scan input validation") {
  ScanParams params;
  params.family = Family::eulerian;
  GridSpec grid;
  CHECK_THROWS_AS(error_scan(params, {16, 8}, grid), std::invalid_argument);
  CHECK_THROWS_AS(error_scan(params, {}, grid), std::invalid_argument);
  // A window too narrow to contain any lattice point.
  GridSpec narrow{0.01, 0.02, ScanMode::lattice};
  CHECK_THROWS_AS(error_scan(params, {64}, narrow), std::domain_error);
  GridSpec bad{1.0, -1.0, ScanMode::lattice};
  CHECK_THROWS_AS(error_scan(params, {8}, bad), std::invalid_argument);
}

TEST_CASE("bspline scan errors shrink with the order") {
  ScanParams params;
  params.family = Family::bspline;
  params.deriv = 0;
  GridSpec grid;
  ErrorScan scan = error_scan(params, {6, 12}, grid);
  REQUIRE(scan.samples.size() == 2);
  CHECK(scan.samples[1].second < scan.samples[0].second);
}

TEST_CASE("wider windows cannot shrink the sup error") {
  ScanParams params;
  params.family = Family::eulerian;
  for (int d : {17, 32}) {
    GridSpec narrow{-1.0, 1.0, ScanMode::lattice};
    GridSpec wide{-3.0, 3.0, ScanMode::lattice};
    double narrow_err = error_scan(params, {d}, narrow).samples[0].second;
    double wide_err = error_scan(params, {d}, wide).samples[0].second;
    CHECK(wide_err >= narrow_err);
  }
}

TEST_CASE("the approximate descent profile peaks at -1/n") {
  for (int n : {2, 3, 5}) {
    double peak = descent_approx(20, n, -1.0 / n);
    for (double x : {-2.0, -0.9, -0.1, 0.0, 0.8, 2.2}) {
      CHECK(descent_approx(20, n, x) <= peak);
    }
  }
}

TEST_CASE("refined j=1 error decays with the order") {
  ScanParams params;
  params.family = Family::refined;
  params.j = 1;
  GridSpec grid;
  ErrorScan scan = error_scan(params, {20, 40}, grid);
  CHECK(scan.samples[1].second < scan.samples[0].second);
}

TEST_CASE("gaussian lattice sum is a unit riemann sum") {
  for (int d : {64, 100}) {
    double sum = 0.0;
    for (int k = 0; k <= d; ++k) {
      double x = (k - (d + 1) / 2.0) / std::sqrt((d + 1) / 12.0);
      sum += eulerian_approx(d, x);
    }
    CHECK(std::abs(sum - 1.0) < 1e-3);
  }
}

TEST_CASE("sinc envelope constant") {
  // d^{(k+2)/2} / pi^{d-k-2} peaks at d = k+2 (the ratio test shows the terms
  // shrink by more than pi / 2.25 each step), so c_k = (k+2)^{(k+2)/2}.
  int argmax = 0;
  CHECK(sinc_envelope_constant(0, &argmax) == doctest::Approx(2.0));
  CHECK(argmax == 2);
  CHECK(sinc_envelope_constant(1) == doctest::Approx(std::pow(3.0, 1.5)));
  CHECK(sinc_envelope_constant(2) == doctest::Approx(16.0));
}

TEST_CASE("sinc bound spot checks and a small sweep") {
  SincBoundReport report = sinc_bound_check(0, 40, 10.0, 0.1);
  CHECK(report.violations.empty());
  CHECK(report.points_checked > 0);
  // k=0, d=2, x=1: lhs = sinc^2(pi/sqrt 2) against e^{-1}.
  double lhs = std::pow(sinc(M_PI / std::sqrt(2.0)), 2.0);
  CHECK(lhs <= std::exp(-1.0));
}

TEST_CASE("descent peak sits near -1/n in scan coordinates") {
  for (int n : {2, 3}) {
    for (int d : {32, 64}) {
      double peak = descent_peak_standardized(d, n);
      CHECK(std::abs(peak + 1.0 / n) <= lattice_step(d) + 1e-12);
    }
  }
}
