#include <doctest.h>

#include "eulerspline/numeric.hpp"

using namespace eulerspline;

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
  // Pascal identity on a strip.
  for (long n = 1; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("integer powers use 0^0 = 1") {
  CHECK(int_pow(ExactInt(0), 0) == 1);
  CHECK(int_pow(ExactInt(0), 5) == 0);
  CHECK(int_pow(ExactInt(-2), 3) == -8);
  CHECK(int_pow(ExactInt(10), 50) == ExactInt("1" + std::string(50, '0')));
}

TEST_CASE("rationals are canonical") {
  ExactRat q = make_rat(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  ExactRat sum = make_rat(1, 6) + make_rat(1, 3);
  CHECK(sum.get_num() == 1);
  CHECK(sum.get_den() == 2);
  CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
  CHECK(rat_pow(make_rat(-2, 3), 3) == make_rat(-8, 27));
  CHECK(is_integer(make_rat(8, 4)));
  CHECK_FALSE(is_integer(make_rat(8, 3)));
}

TEST_CASE("floor of rationals") {
  CHECK(floor_rat(make_rat(7, 2)) == 3);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(floor_rat(ExactRat(5)) == 5);
}

TEST_CASE("to_integer_exact guards the bridge products") {
  CHECK(to_integer_exact(make_rat(12, 4), "test") == 3);
  CHECK_THROWS_AS(to_integer_exact(make_rat(1, 3), "test"), VerificationError);
}

TEST_CASE("arithmetic chains stay canonical") {
  // Lowest terms and positive denominator must survive every operation.
  ExactRat acc = make_rat(3, 7);
  for (long i = 1; i <= 200; ++i) {
    switch (i % 4) {
      case 0: acc += make_rat(i, i + 2); break;
      case 1: acc *= make_rat(-i, 2 * i + 1); break;
      case 2: acc -= make_rat(1, i); break;
      default: acc /= make_rat(i + 1, i); break;
    }
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), acc.get_num().get_mpz_t(),
            acc.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(acc.get_den() > 0);
  }
}

TEST_CASE("guarded conversion keeps tiny differences") {
  // 1/3 + 1e-18 differs from 1/3 below double resolution of either operand;
  // the guarded subtraction still sees it.
  ExactRat exact = make_rat(1, 3) + make_rat(1, 1000000000000000000L);
  double residual = guarded_residual(exact, to_double(make_rat(1, 3)));
  CHECK(residual == doctest::Approx(1e-18).epsilon(1e-3));
  CHECK(to_double(make_rat(1, 2)) == 0.5);
}
