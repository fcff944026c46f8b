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

// Exact piecewise polynomial with compact support. Piece i applies on
// [breakpoints[i], breakpoints[i+1]); the function is 0 outside
// [breakpoints.front(), breakpoints.back()], and evaluation at a breakpoint
// uses the right-hand piece (right-continuity). The zero function is the
// empty object.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<ExactRat> breakpoints,
                      std::vector<Polynomial> pieces);

  bool is_zero() const { return pieces_.empty(); }
  const std::vector<ExactRat>& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const ExactRat& support_lo() const;
  const ExactRat& support_hi() const;

  ExactRat eval(const ExactRat& x, Side side = Side::right) const;

  // Total integral over the support.
  ExactRat integral() const;

  // (B_1 * f)(x) = integral of f over [x-1, x], by exact antidifferentiation.
  // The support grows by [0, 1] and each piece gains one degree.
  PiecewisePolynomial convolve_unit_box() const;

  // Piecewise formal derivative (same breakpoints, pieces differentiated).
  // Meaningful pointwise only where the function is smooth enough.
  PiecewisePolynomial derivative() const;

 private:
  std::vector<ExactRat> breaks_;
  std::vector<Polynomial> pieces_;
};

}  // namespace eulerspline
