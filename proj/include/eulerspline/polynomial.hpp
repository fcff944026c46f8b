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

#include "eulerspline/numeric.hpp"

namespace eulerspline {

// Dense univariate polynomial with exact rational coefficients.
// coefficients()[i] is the coefficient of x^i; trailing zeros are trimmed, so
// the zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ExactRat> coeffs);

  static Polynomial constant(ExactRat c);
  static Polynomial monomial(int degree, ExactRat coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRat>& coefficients() const { return coeffs_; }

  // Coefficient of x^i, zero beyond the degree.
  ExactRat coeff(int i) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const ExactRat& s) const;
  bool operator==(const Polynomial& rhs) const = default;

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;

  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  // p(x + c), expanded exactly.
  Polynomial compose_shift(const ExactRat& c) const;

  ExactRat eval(const ExactRat& x) const;
  double eval(double x) const;

 private:
  void trim();

  std::vector<ExactRat> coeffs_;
};

}  // namespace eulerspline
