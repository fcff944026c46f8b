#include <doctest.h>

#include <cmath>

#include "eulerspline/bspline.hpp"
#include "eulerspline/combinat.hpp"
#include "eulerspline/oracle.hpp"

using namespace eulerspline;

TEST_CASE("explicit evaluation of the low-order splines") {
  // B_1 is the right-open box.
  CHECK(bspline_eval_explicit(1, make_rat(1, 2)) == 1);
  CHECK(bspline_eval_explicit(1, ExactRat(0)) == 1);
  CHECK(bspline_eval_explicit(1, ExactRat(1)) == 0);
  CHECK(bspline_eval_explicit(1, ExactRat(-1)) == 0);
  // Hat and quadratic values.
  CHECK(bspline_eval_explicit(2, make_rat(1, 2)) == make_rat(1, 2));
  CHECK(bspline_eval_explicit(2, ExactRat(1)) == 1);
  CHECK(bspline_eval_explicit(3, make_rat(3, 2)) == make_rat(3, 4));
  CHECK(bspline_eval_explicit(4, ExactRat(2)) == make_rat(2, 3));
}

TEST_CASE("recurrence route agrees with the explicit route") {
  CHECK(bspline_eval_recurrence(2, ExactRat(1)) == 1);
  CHECK(bspline_eval_recurrence(4, ExactRat(2)) == make_rat(2, 3));
  CHECK(bspline_eval_recurrence(3, ExactRat(-1)) == 0);
  for (int d = 1; d <= 10; ++d) {
    for (long num = -2; num <= 3 * d + 2; ++num) {
      ExactRat x = make_rat(num, 3);
      CHECK(bspline_eval_recurrence(d, x) == bspline_eval_explicit(d, x));
    }
  }
}

TEST_CASE("built splines match pointwise routes and keep their mass") {
  BSpline b1 = bspline_build(1);
  CHECK(b1.pw.eval(make_rat(1, 2)) == 1);
  CHECK(b1.pw.eval(ExactRat(1)) == 0);

  BSpline b2 = bspline_build(2);
  CHECK(b2.pw.pieces()[0] == Polynomial::monomial(1, ExactRat(1)));
  CHECK(b2.pw.pieces()[1] == Polynomial({ExactRat(2), ExactRat(-1)}));

  CHECK(bspline_build(6).pw.integral() == 1);

  for (int d = 1; d <= 8; ++d) {
    BSpline spline = bspline_build(d);
    CHECK(spline.pw.breakpoints().size() == static_cast<size_t>(d) + 1);
    for (long num = 0; num <= 2 * d; ++num) {
      ExactRat x = make_rat(num, 2);
      CHECK(spline.pw.eval(x) == bspline_eval_explicit(d, x));
    }
  }
}

TEST_CASE("derivative difference rule") {
  CHECK(bspline_derivative_eval(3, 1, make_rat(3, 2)) == 0);
  CHECK(bspline_derivative_eval(4, 1, ExactRat(2)) == 0);
  CHECK(bspline_derivative_eval(4, 2, ExactRat(2)) == -2);

  // Cross-check against the piecewise-polynomial derivative of the build.
  for (int d = 3; d <= 7; ++d) {
    PiecewisePolynomial pw = bspline_build(d).pw;
    for (int r = 1; r <= d - 2; ++r) {
      pw = pw.derivative();
      for (long num = 1; num < 4 * d; ++num) {
        ExactRat x = make_rat(num, 4);
        CHECK(bspline_derivative_eval(d, r, x) == pw.eval(x));
      }
    }
  }

  CHECK_THROWS_AS(bspline_derivative_eval(4, 0, ExactRat(1)),
                  std::domain_error);
  CHECK_THROWS_AS(bspline_derivative_eval(4, 4, ExactRat(1)),
                  std::domain_error);
  // r = d-1 is fine off the knots and refused at a knot.
  CHECK(bspline_derivative_eval(2, 1, make_rat(1, 2)) == 1);
  CHECK_THROWS_AS(bspline_derivative_eval(2, 1, ExactRat(1)),
                  std::domain_error);
}

TEST_CASE("fourier transform identity at selected points") {
  CHECK(fourier_check(3, 0.0) < 1e-12);
  CHECK(fourier_check(1, M_PI) < 1e-12);
  CHECK(fourier_check(6, 2.0) < 1e-8);
}

TEST_CASE("eulerian bridge") {
  CHECK(bridge_eulerian(3, 2) == 4);
  CHECK(bridge_eulerian(5, 3) == eulerian_explicit(5, 3));
  CHECK(bridge_eulerian(0, 0) == 1);
  for (int d = 1; d <= 9; ++d) {
    for (int k = 0; k <= d; ++k) {
      CHECK(bridge_eulerian(d, k) == eulerian_explicit(d, k));
    }
  }
}

TEST_CASE("descent bridge") {
  CHECK(bridge_descent(2, 2, 1) == 6);
  CHECK(bridge_descent(3, 3, 0) == 1);
  for (int n : {1, 2, 3, 5}) {
    for (int d = 1; d <= 8; ++d) {
      for (int k = 0; k <= d; ++k) {
        CHECK(bridge_descent(d, n, k) == descent_explicit(d, n, k));
      }
    }
  }
}

TEST_CASE("lambda polynomial bridge to the refined numbers") {
  // Order-2 table from the S_2 enumeration.
  std::vector<ExactInt> c1 = bridge_refined_coeff(1, 0);
  CHECK(c1[0] == 1);  // RA(2,0,2)
  CHECK(c1[1] == 0);  // RA(2,0,1)

  std::vector<ExactInt> c2 = bridge_refined_coeff(2, 1);
  CHECK(c2[1] == 2);  // RA(3,1,2)

  // p(0) = d! B_{d+1}(k+1): the j = 0 coefficient is the bridge value.
  for (int d = 1; d <= 6; ++d) {
    for (int k = 0; k <= d; ++k) {
      std::vector<ExactInt> coeffs = bridge_refined_coeff(d, k);
      ExactRat direct = ExactRat(factorial(d)) *
                        bspline_eval_explicit(d + 1, ExactRat(k + 1));
      CHECK(coeffs[0] == to_integer_exact(direct, "p(0)"));
    }
  }

  // Full agreement with enumeration for small orders.
  for (int order = 2; order <= 6; ++order) {
    DescentHistogram h = enumerate_descents(order);
    for (int k = 0; k <= order - 1; ++k) {
      std::vector<ExactInt> coeffs = bridge_refined_coeff(order - 1, k);
      for (int j = 0; j <= order - 1; ++j) {
        CHECK(coeffs[static_cast<size_t>(j)] ==
              h.refined_count(k, order - j));
      }
    }
  }
}

TEST_CASE("lambda polynomial coefficients carry the binomial weights") {
  // [lambda^j] q = C(d,j) RA(d+1,k,d-j+1) / d!, with q the expansion of
  // (lambda+1)^d B_{d+1}(k + 1/(lambda+1)).
  for (int d = 1; d <= 5; ++d) {
    for (int k = 0; k <= d; ++k) {
      LambdaPolynomial lp = lambda_polynomial(d, k);
      CHECK(lp.q.degree() <= d);
      std::vector<ExactInt> refined = bridge_refined_coeff(d, k);
      for (int j = 0; j <= d; ++j) {
        ExactRat expected = ExactRat(binomial(d, j)) *
                            ExactRat(refined[static_cast<size_t>(j)]) /
                            ExactRat(factorial(d));
        CHECK(lp.q.coeff(j) == expected);
      }
    }
  }
}

TEST_CASE("refined numbers via the derivative sum") {
  CHECK(refined_via_derivative_sum(1, 0, 0) == 1);  // RA(2,0,2)
  CHECK(refined_via_derivative_sum(2, 1, 1) == 2);  // RA(3,1,2)
  CHECK(refined_via_derivative_sum(3, 1, 0) == 4);  // RA(4,1,4) = A(3,2)
  // Top-order j = d cases take one-sided derivatives at the knot.
  CHECK(refined_via_derivative_sum(1, 0, 1) == 0);  // RA(2,0,1)
  CHECK(refined_via_derivative_sum(2, 1, 2) == 1);  // RA(3,1,1)

  for (int order = 2; order <= 7; ++order) {
    DescentHistogram h = enumerate_descents(order);
    for (int k = 0; k <= order - 1; ++k) {
      for (int j = 0; j <= order - 1; ++j) {
        CHECK(refined_via_derivative_sum(order - 1, k, j) ==
              h.refined_count(k, order - j));
      }
    }
  }
}

TEST_CASE("bridge integrality is watched") {
  // d! B_{d+1} at rational lattice points k + 1/n is an integer; probing an
  // off-lattice point must trip the integrality assertion instead of
  // silently rounding.
  ExactRat value = ExactRat(factorial(4)) *
                   bspline_eval_explicit(5, make_rat(5, 2));
  CHECK_FALSE(is_integer(value));
}
