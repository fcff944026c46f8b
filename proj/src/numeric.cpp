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

#include "eulerspline/numeric.hpp"

namespace eulerspline {

namespace {
constexpr mp_bitcnt_t kGuardBits = 128;  // 53 + well over 30 guard bits
}

ExactInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

ExactInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt int_pow(const ExactInt& base, unsigned long exp) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

ExactRat rat_pow(const ExactRat& base, unsigned long exp) {
  ExactRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
  // num/den stay coprime when they started coprime, so no canonicalize needed;
  // the denominator is positive because base's was.
  return r;
}

ExactRat make_rat(long num, long den) {
  return make_rat(ExactInt(num), ExactInt(den));
}

ExactRat make_rat(ExactInt num, ExactInt den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  ExactRat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

bool is_integer(const ExactRat& q) { return q.get_den() == 1; }

ExactInt to_integer_exact(const ExactRat& q, const std::string& context) {
  if (!is_integer(q)) {
    throw VerificationError(context + ": expected integer, got " +
                            q.get_str());
  }
  return q.get_num();
}

ExactRat floor_rat(const ExactRat& q) {
  ExactInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return ExactRat(f);
}

double to_double(const ExactRat& q) {
  mpf_t f;
  mpf_init2(f, kGuardBits);
  mpf_set_q(f, q.get_mpq_t());
  double out = mpf_get_d(f);
  mpf_clear(f);
  return out;
}

double guarded_residual(const ExactRat& exact, double approx) {
  mpf_t e, a;
  mpf_init2(e, kGuardBits);
  mpf_init2(a, kGuardBits);
  mpf_set_q(e, exact.get_mpq_t());
  mpf_set_d(a, approx);
  mpf_sub(e, e, a);
  double out = mpf_get_d(e);
  mpf_clear(e);
  mpf_clear(a);
  return out;
}

}  // namespace eulerspline
