#include <doctest.h>

#include <random>

#include "eulerspline/polynomial.hpp"

using namespace eulerspline;

namespace {

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<ExactRat> coeffs(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : coeffs) c = make_rat(num(rng), den(rng));
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("product and trimming") {
  Polynomial one_plus_x({ExactRat(1), ExactRat(1)});
  Polynomial one_minus_x({ExactRat(1), ExactRat(-1)});
  Polynomial product = one_plus_x * one_minus_x;
  CHECK(product == Polynomial({ExactRat(1), ExactRat(0), ExactRat(-1)}));

  CHECK((one_plus_x * Polynomial()).is_zero());
  Polynomial x = Polynomial::monomial(1, ExactRat(1));
  Polynomial x2 = Polynomial::monomial(2, ExactRat(1));
  CHECK(x * x2 == Polynomial::monomial(3, ExactRat(1)));

  // Trailing zeros trim away: (1 + x) + (-x) has degree 0.
  Polynomial sum = one_plus_x + Polynomial::monomial(1, ExactRat(-1));
  CHECK(sum.degree() == 0);
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("derivative and antiderivative") {
  Polynomial x3 = Polynomial::monomial(3, ExactRat(1));
  CHECK(x3.derivative() == Polynomial::monomial(2, ExactRat(3)));
  CHECK(Polynomial::constant(ExactRat(7)).derivative().is_zero());
  Polynomial p({ExactRat(-1), ExactRat(0), ExactRat(1)});  // x^2 - 1
  CHECK(p.derivative() == Polynomial::monomial(1, ExactRat(2)));
  CHECK(p.antiderivative().derivative() == p);
}

TEST_CASE("compose_shift") {
  Polynomial x2 = Polynomial::monomial(2, ExactRat(1));
  CHECK(x2.compose_shift(ExactRat(1)) ==
        Polynomial({ExactRat(1), ExactRat(2), ExactRat(1)}));
  Polynomial p({make_rat(1, 2), ExactRat(3), make_rat(-2, 3)});
  CHECK(p.compose_shift(ExactRat(0)) == p);
  Polynomial x = Polynomial::monomial(1, ExactRat(1));
  CHECK(x.compose_shift(make_rat(-1, 2)) ==
        Polynomial({make_rat(-1, 2), ExactRat(1)}));
}

TEST_CASE("evaluation") {
  Polynomial p({ExactRat(1), ExactRat(-2), ExactRat(1)});  // (x-1)^2
  CHECK(p.eval(ExactRat(1)) == 0);
  CHECK(p.eval(make_rat(3, 2)) == make_rat(1, 4));
  CHECK(p.eval(2.0) == doctest::Approx(1.0));
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng);
    Polynomial b = random_poly(rng);
    Polynomial c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // Leibniz rule.
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("pow by squaring matches repeated product") {
  Polynomial p({ExactRat(1), ExactRat(2)});
  Polynomial expected = Polynomial::constant(ExactRat(1));
  for (int e = 0; e <= 6; ++e) {
    CHECK(p.pow(static_cast<unsigned>(e)) == expected);
    expected = expected * p;
  }
}
