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

#include "eulerspline/polynomial.hpp"

namespace eulerspline {

// Probabilists' Hermite polynomials He_n (monic, weight e^{-x^2/2}). These
// are the family the asymptotic series needs: (-1)^n D^n e^{-x^2/2} =
// He_n(x) e^{-x^2/2}. The physicists' family H_n (weight e^{-x^2}) is kept
// only as a cross-check through H_n(x) = 2^{n/2} He_n(x sqrt 2).

struct HermiteSequence {
  std::vector<Polynomial> polys;  // polys[i] = He_i

  int max_degree() const { return static_cast<int>(polys.size()) - 1; }
  const Polynomial& he(int i) const;
};

// Builds He_0..He_N by the three-term recurrence He_{n+1} = x He_n - n He_{n-1}.
// With verify_rodrigues, rebuilds through q_{n+1} = x q_n - q_n' and requires
// exact polynomial equality (throws VerificationError on mismatch).
HermiteSequence hermite_prob(int N, bool verify_rodrigues = false);

double hermite_eval(const HermiteSequence& seq, int i, double x);

// Physicists' H_n from its explicit sum
//   sum_{k=0}^{[n/2]} (-1)^k n! (2x)^{n-2k} / (k! (n-2k)!).
Polynomial hermite_phys_sum(int n);

// Exact coefficient check of H_n(x) == 2^{n/2} He_n(x sqrt 2).
bool hermite_phys_matches_rescaled(const HermiteSequence& seq, int n);

// Relative deviation of the central finite difference of e^{-x^2/2} (order i,
// step h) from (-1)^i He_i(x) e^{-x^2/2}. The stencil is evaluated in
// 256-bit arithmetic so the residual is pure truncation error.
double hermite_gaussian_derivative_residual(const HermiteSequence& seq, int i,
                                            double x, double h);

}  // namespace eulerspline
