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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulerspline {

// Exact arbitrary-precision integers and rationals. mpq_class values are kept
// canonical (lowest terms, positive denominator) by construction and by GMP's
// arithmetic; make_rat() is the one entry point that canonicalizes raw pairs.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

// Thrown when an exact identity that the library asserts internally fails
// (non-integer bridge product, recurrence disagreement, divisibility failure).
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

// One-sided evaluation convention at discontinuities. `right` is the default
// used everywhere (half-open pieces [b_i, b_{i+1})); `left` exists for the
// top-order spline derivatives, which are only one-sided at the knots.
enum class Side { left, right };

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
ExactInt binomial(long n, long k);

ExactInt factorial(long n);

// base^exp with 0^0 = 1 (the convention every explicit formula here needs).
ExactInt int_pow(const ExactInt& base, unsigned long exp);
ExactRat rat_pow(const ExactRat& base, unsigned long exp);

ExactRat make_rat(long num, long den);
ExactRat make_rat(ExactInt num, ExactInt den);

bool is_integer(const ExactRat& q);

// Asserts q has denominator 1 and returns the numerator; otherwise throws
// VerificationError with `context` in the message.
ExactInt to_integer_exact(const ExactRat& q, const std::string& context);

ExactRat floor_rat(const ExactRat& q);

// Rounds q to double through a 128-bit intermediate, so the conversion itself
// never costs accuracy before a later subtraction.
double to_double(const ExactRat& q);

// (exact - approx) evaluated with 128-bit working precision, then rounded.
double guarded_residual(const ExactRat& exact, double approx);

}  // namespace eulerspline
