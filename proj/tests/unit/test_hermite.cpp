#include <doctest.h>

#include "eulerspline/hermite.hpp"

using namespace eulerspline;

TEST_CASE("first few probabilists' polynomials") {
  HermiteSequence seq = hermite_prob(6);
  CHECK(seq.he(0) == Polynomial::constant(ExactRat(1)));
  CHECK(seq.he(1) == Polynomial::monomial(1, ExactRat(1)));
  CHECK(seq.he(2) == Polynomial({ExactRat(-1), ExactRat(0), ExactRat(1)}));
  CHECK(seq.he(3) ==
        Polynomial({ExactRat(0), ExactRat(-3), ExactRat(0), ExactRat(1)}));
  CHECK(hermite_eval(seq, 2, 0.0) == doctest::Approx(-1.0));
  CHECK(hermite_eval(seq, 1, 3.5) == doctest::Approx(3.5));
  CHECK(hermite_eval(seq, 4, 0.0) == doctest::Approx(3.0));
}

TEST_CASE("recurrence and Rodrigues routes agree exactly") {
  CHECK_NOTHROW(hermite_prob(12, /*verify_rodrigues=*/true));
}

TEST_CASE("structure: monic, degree, parity") {
  HermiteSequence seq = hermite_prob(12);
  for (int n = 0; n <= 12; ++n) {
    const Polynomial& he = seq.he(n);
    CHECK(he.degree() == n);
    CHECK(he.coeff(n) == 1);
    for (int m = 0; m <= n; ++m) {
      if ((n - m) % 2 == 1) CHECK(he.coeff(m) == 0);
    }
  }
}

TEST_CASE("physicists' sum matches the rescaled probabilists' family") {
  HermiteSequence seq = hermite_prob(12);
  // Spot value: H_2(x) = 4x^2 - 2.
  CHECK(hermite_phys_sum(2) ==
        Polynomial({ExactRat(-2), ExactRat(0), ExactRat(4)}));
  for (int n = 0; n <= 12; ++n) {
    CHECK(hermite_phys_matches_rescaled(seq, n));
  }
}

TEST_CASE("finite differences of the Gaussian recover the polynomials") {
  HermiteSequence seq = hermite_prob(8);
  for (int i = 0; i <= 6; ++i) {
    for (double x : {-2.1, -0.25, 1.6}) {
      CHECK(hermite_gaussian_derivative_residual(seq, i, x, 1e-3) < 1e-5);
    }
  }
}
