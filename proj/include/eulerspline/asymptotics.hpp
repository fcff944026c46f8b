/*
   Copyright 2026 The eulerspline authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eulerspline/hermite.hpp"
#include "eulerspline/numeric.hpp"

namespace eulerspline {

// Gaussian / Hermite approximations to the exact number families, sup-error
// scans of exact-vs-approximate profiles over the standardized coordinate,
// and the log-log slope fit that renders the convergence orders empirically.
//
// Standardized coordinate: an exact table index u maps to
// x = (u - center) / sigma with sigma = sqrt((d+1)/12) (sqrt(d/12) for the
// spline scans). The index offsets that the bridges introduce (k + 1/n for
// the descent family, k + 1 for the refined family) are applied to the index
// BEFORE standardizing and subtracted in plain units afterwards, never scaled
// by sigma; at d = 11 (sigma = 1) the distinction is invisible.
//
// Lattice-aligned mode samples exactly the x for which the index map hits an
// integer, which removes the floor() jitter and exposes the d^{-3/2} rate.
// Literal-floor mode keeps the floor semantics on a uniform grid and is
// reported as informational.

enum class Family { eulerian, descent, refined, bspline };
enum class ScanMode { lattice, literal_floor };

struct GridSpec {
  double x_lo = -3.0;
  double x_hi = 3.0;
  ScanMode mode = ScanMode::lattice;
};

struct ScanParams {
  Family family = Family::eulerian;
  int n = 2;      // descent modulus (descent family)
  int j = 0;      // Hermite correction depth (refined family)
  int deriv = 0;  // derivative order (bspline family)
};

struct ErrorScan {
  ScanParams params;
  GridSpec grid;
  std::vector<std::pair<int, double>> samples;  // (d, sup error), d increasing
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int d_min = 0;
  int d_max = 0;
};

struct SincBoundReport {
  struct Violation {
    int d;
    double x;
    double lhs;
    double bound;
  };
  int k = 0;
  double c_k = 0.0;
  int c_k_argmax_d = 0;
  long points_checked = 0;
  std::vector<Violation> violations;
};

double gaussian_phi(double x);

// sqrt(6 / (pi (d+1))) e^{-x^2/2}, the Gaussian profile of A(d, x_d)/d!.
double eulerian_approx(int d, double x);

// sqrt(6 / (pi (d+1))) e^{-(x + 1/n)^2/2} for D(d,n,x_d)/(d! n^d).
double descent_approx(int d, int n, double x);

// sqrt(6 / (pi (d+1))) e^{-x^2/2} *
//   sum_{i=0}^{j} (1 / C(d-j+i, i)) ((d+1)/12)^{-i/2} He_i(x),
// for RA(d+1, x_d, d-j+1)/d!. Requires seq.max_degree() >= j.
double refined_approx(int d, int j, double x, const HermiteSequence& seq);

// (1/sqrt(2 pi)) D^r e^{-x^2/2} = (-1)^r He_r(x) phi(x), the scaled limit of
// the B-spline derivatives. Requires seq.max_degree() >= r.
double bspline_gaussian_approx(int r, double x, const HermiteSequence& seq);

// Spacing of the standardized lattice for the combinatorial families.
double lattice_step(int d);

ErrorScan error_scan(const ScanParams& params, const std::vector<int>& d_list,
                     const GridSpec& grid);

// Least squares of log(sup error) against log(d). Requires >= 3 samples with
// strictly positive errors.
SlopeFit fit_convergence_order(const ErrorScan& scan);

double sinc(double t);

// c_k = max over d >= k+2 of d^{(k+2)/2} / pi^{d-k-2}, scanned until the term
// has decreased for 50 consecutive d.
double sinc_envelope_constant(int k, int* argmax_d = nullptr);

// Checks pi^k |x|^k |sinc(pi x / sqrt d)|^d <= G_k(x) with
// G_k(x) = 1{|x|>1} c_k / (pi^2 x^2) + pi^k |x|^k e^{-x^2}
// for every d in [k+2, d_max] and x on the grid {0, dx, 2dx, ...} up to
// x_max. Both sides are even in x, IEEE-exactly, so the nonnegative grid
// covers |x| <= x_max. Violations are collected, not thrown.
SincBoundReport sinc_bound_check(int k, int d_max, double x_max, double dx);

// argmax_k D(d,n,k) (smallest k on ties) and its standardized coordinate in
// the descent scan's x variable.
int descent_peak_index(int d, int n);
double descent_peak_standardized(int d, int n);

}  // namespace eulerspline
