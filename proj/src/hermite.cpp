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

#include "eulerspline/hermite.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>

namespace eulerspline {

const Polynomial& HermiteSequence::he(int i) const {
  if (i < 0 || i > max_degree()) {
    throw std::domain_error("HermiteSequence::he: degree out of range");
  }
  return polys[static_cast<size_t>(i)];
}

HermiteSequence hermite_prob(int N, bool verify_rodrigues) {
  if (N < 0) throw std::domain_error("hermite_prob: N must be >= 0");
  HermiteSequence seq;
  seq.polys.reserve(static_cast<size_t>(N) + 1);
  const Polynomial x = Polynomial::monomial(1, ExactRat(1));
  seq.polys.push_back(Polynomial::constant(ExactRat(1)));
  if (N >= 1) seq.polys.push_back(x);
  for (int n = 1; n < N; ++n) {
    seq.polys.push_back(x * seq.polys[static_cast<size_t>(n)] -
                        seq.polys[static_cast<size_t>(n) - 1] * ExactRat(n));
  }
  if (verify_rodrigues) {
    Polynomial q = Polynomial::constant(ExactRat(1));
    for (int n = 0; n <= N; ++n) {
      if (q != seq.polys[static_cast<size_t>(n)]) {
        throw VerificationError(
            "hermite_prob: Rodrigues route disagrees at degree " +
            std::to_string(n));
      }
      q = x * q - q.derivative();
    }
  }
  return seq;
}

double hermite_eval(const HermiteSequence& seq, int i, double x) {
  return seq.he(i).eval(x);
}

Polynomial hermite_phys_sum(int n) {
  if (n < 0) throw std::domain_error("hermite_phys_sum: n must be >= 0");
  Polynomial sum;
  for (int k = 0; 2 * k <= n; ++k) {
    int power = n - 2 * k;
    ExactRat coeff =
        make_rat(factorial(n) * int_pow(ExactInt(2), static_cast<unsigned long>(power)),
                 factorial(k) * factorial(power));
    if (k % 2 != 0) coeff = -coeff;
    sum = sum + Polynomial::monomial(power, coeff);
  }
  return sum;
}

bool hermite_phys_matches_rescaled(const HermiteSequence& seq, int n) {
  // H_n(x) = 2^{n/2} He_n(x sqrt 2): coefficient of x^m picks up 2^{(n+m)/2},
  // an integer power because He_n has the parity of n.
  const Polynomial phys = hermite_phys_sum(n);
  const Polynomial& he = seq.he(n);
  for (int m = 0; m <= std::max(phys.degree(), he.degree()); ++m) {
    ExactRat c = he.coeff(m);
    if (c == 0) {
      if (phys.coeff(m) != 0) return false;
      continue;
    }
    if ((n + m) % 2 != 0) return false;
    ExactRat scaled =
        c * ExactRat(int_pow(ExactInt(2), static_cast<unsigned long>((n + m) / 2)));
    if (scaled != phys.coeff(m)) return false;
  }
  return true;
}

double hermite_gaussian_derivative_residual(const HermiteSequence& seq, int i,
                                            double x, double h) {
  if (i < 0) throw std::domain_error("derivative order must be >= 0");
  constexpr mpfr_prec_t kPrec = 256;

  mpfr_t acc, t, f;
  mpfr_init2(acc, kPrec);
  mpfr_init2(t, kPrec);
  mpfr_init2(f, kPrec);
  mpfr_set_zero(acc, 1);

  // Central difference: sum_t (-1)^t C(i,t) f(x + (i/2 - t) h), then / h^i.
  for (int k = 0; k <= i; ++k) {
    mpfr_set_d(t, x, MPFR_RNDN);
    mpfr_t off;
    mpfr_init2(off, kPrec);
    mpfr_set_d(off, h, MPFR_RNDN);
    mpfr_mul_d(off, off, i / 2.0 - k, MPFR_RNDN);
    mpfr_add(t, t, off, MPFR_RNDN);
    mpfr_clear(off);

    // f = exp(-t^2/2)
    mpfr_sqr(f, t, MPFR_RNDN);
    mpfr_div_ui(f, f, 2, MPFR_RNDN);
    mpfr_neg(f, f, MPFR_RNDN);
    mpfr_exp(f, f, MPFR_RNDN);

    ExactInt c = binomial(i, k);
    mpfr_t cf;
    mpfr_init2(cf, kPrec);
    mpfr_set_z(cf, c.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(f, f, cf, MPFR_RNDN);
    mpfr_clear(cf);

    if (k % 2 == 0) {
      mpfr_add(acc, acc, f, MPFR_RNDN);
    } else {
      mpfr_sub(acc, acc, f, MPFR_RNDN);
    }
  }
  mpfr_t hp;
  mpfr_init2(hp, kPrec);
  mpfr_set_d(hp, h, MPFR_RNDN);
  mpfr_pow_si(hp, hp, i, MPFR_RNDN);
  mpfr_div(acc, acc, hp, MPFR_RNDN);
  mpfr_clear(hp);

  double fd = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(acc, t, f, static_cast<mpfr_ptr>(nullptr));

  double exact = (i % 2 == 0 ? 1.0 : -1.0) * hermite_eval(seq, i, x) *
                 std::exp(-x * x / 2.0);
  if (exact == 0.0) return std::abs(fd);
  return std::abs(fd - exact) / std::abs(exact);
}

}  // namespace eulerspline
