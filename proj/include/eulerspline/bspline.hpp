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

#include <vector>

#include "eulerspline/piecewise.hpp"
#include "eulerspline/polynomial.hpp"

namespace eulerspline {

// Cardinal B-splines B_d: the d-fold convolution power of the unit box,
// supported on [0, d], degree d-1, integral 1, knots at the integers.
// Three independent exact evaluation routes are provided (truncated-power
// explicit sum, the two-term order recurrence, and the convolution build);
// they must agree exactly and the test suites hold them to that.
//
// The combinatorial bridges implemented here:
//   A(d,k)            = d! B_{d+1}(k)
//   D(d,n,k)          = d! n^d B_{d+1}(k + 1/n)
//   RA(d+1,k,d-j+1)   = d! [lambda^j] ((lambda+1)^d B_{d+1}(k + 1/(lambda+1)))
//                       / C(d,j)
// plus the derivative-sum route for the refined numbers (see
// refined_via_derivative_sum below).

struct BSpline {
  int d = 0;
  PiecewisePolynomial pw;
};

// Truncated-power explicit sum. `side` selects the one-sided convention for
// the 0-th power at the jump (only observable for d = 1, whose box is
// right-continuous by default).
ExactRat bspline_eval_explicit(int d, const ExactRat& x,
                               Side side = Side::right);

// Two-term recurrence in the order, evaluated by dynamic programming over the
// integer translates of x. Base case is the right-continuous box.
ExactRat bspline_eval_recurrence(int d, const ExactRat& x);

// (d-1)-fold unit-box convolution starting from the box on [0, 1).
BSpline bspline_build(int d);

// r-th derivative by the difference rule B_d' = B_{d-1}(x) - B_{d-1}(x-1),
// applied r times. Classical pointwise values require r <= d-2; r = d-1 is
// allowed away from the knots and throws std::domain_error at a knot.
ExactRat bspline_derivative_eval(int d, int r, const ExactRat& x);

// One-sided variant (r = 0 means plain evaluation). Used by the refined
// derivative-sum identity, whose top-order term is a left limit at a knot.
ExactRat bspline_derivative_eval_sided(int d, int r, const ExactRat& x,
                                       Side side);

// |(recentred Fourier integral of B_d at omega) - sinc^d(omega/2)|, the
// transform identity check. The integral runs over [0, d] by composite
// Gauss-Legendre quadrature (20 nodes per knot interval) and is recentred by
// the phase e^{i d omega / 2}, since the product form holds for the
// symmetric spline.
double fourier_check(int d, double omega);

// d! B_{d+1}(k); asserts integrality.
ExactInt bridge_eulerian(int d, int k);

// d! n^d B_{d+1}(k + 1/n); asserts integrality.
ExactInt bridge_descent(int d, int n, int k);

// The polynomial q(lambda) = (lambda+1)^d B_{d+1}(k + 1/(lambda+1)) for
// lambda >= 0. Exactly the truncated-power terms i = 0..k survive the
// substitution (the argument lies in (k, k+1]), each contributing
// ((k-i)(lambda+1) + 1)^d / d!.
struct LambdaPolynomial {
  int d = 0;
  int k = 0;
  Polynomial q;
};

LambdaPolynomial lambda_polynomial(int d, int k);

// Coefficient extraction from d! q(lambda): entry j of the result is
// RA(d+1, k, d-j+1) = [lambda^j](d! q) / C(d,j); asserts divisibility.
std::vector<ExactInt> bridge_refined_coeff(int d, int k);

// RA(d+1, k, d-j+1) via the j-th derivative of the generating identity at
// lambda = 0:
//   RA(d+1,k,d-j+1) = sum_{i=0}^{j} (-1)^i C(j,i) (d-i)! B^{(i)}_{d+1}(k+1).
// Derivatives are taken as left limits at k+1 (the identity differentiates
// the piece on (k, k+1]; for i <= d-1 the two sides agree anyway).
// Asserts integrality.
ExactInt refined_via_derivative_sum(int d, int k, int j);

}  // namespace eulerspline
