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

#include "eulerspline/bspline.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace eulerspline {

namespace {

// (x)_+^m. For m = 0 the jump at 0 follows `side`: right-continuous gives
// 1 at x = 0, left-continuous gives 0.
ExactRat truncated_power(const ExactRat& x, unsigned long m, Side side) {
  int s = sgn(x);
  if (m == 0) {
    bool positive_part = (side == Side::right) ? (s >= 0) : (s > 0);
    return ExactRat(positive_part ? 1 : 0);
  }
  if (s <= 0) return ExactRat(0);
  return rat_pow(x, m);
}

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Newton iteration on the Legendre polynomial; standard construction.
GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(static_cast<size_t>(n));
  gl.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[static_cast<size_t>(i)] = x;
    gl.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

double sinc_double(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

}  // namespace

ExactRat bspline_eval_explicit(int d, const ExactRat& x, Side side) {
  if (d < 1) throw std::domain_error("bspline_eval_explicit: d must be >= 1");
  if (x < 0 || x > d) return ExactRat(0);
  const unsigned long m = static_cast<unsigned long>(d - 1);
  ExactRat sum(0);
  for (int i = 0; i <= d; ++i) {
    ExactRat arg = x - i;
    if (sgn(arg) < 0) break;  // later terms vanish
    ExactRat tp = truncated_power(arg, m, side);
    if (tp == 0) continue;
    ExactRat term = ExactRat(binomial(d, i)) * tp;
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / ExactRat(factorial(d - 1));
}

ExactRat bspline_eval_recurrence(int d, const ExactRat& x) {
  if (d < 1) throw std::domain_error("bspline_eval_recurrence: d must be >= 1");
  if (x < 0 || x >= d) return ExactRat(0);
  // Level 1: box values at the integer translates x - t.
  std::vector<ExactRat> v(static_cast<size_t>(d));
  for (int t = 0; t < d; ++t) {
    ExactRat arg = x - t;
    v[static_cast<size_t>(t)] = ExactRat((arg >= 0 && arg < 1) ? 1 : 0);
  }
  for (int level = 2; level <= d; ++level) {
    const ExactRat denom(level - 1);
    for (int t = 0; t + level <= d; ++t) {
      ExactRat arg = x - t;
      v[static_cast<size_t>(t)] =
          (arg * v[static_cast<size_t>(t)] +
           (ExactRat(level) - arg) * v[static_cast<size_t>(t) + 1]) /
          denom;
    }
  }
  return v[0];
}

BSpline bspline_build(int d) {
  if (d < 1) throw std::domain_error("bspline_build: d must be >= 1");
  PiecewisePolynomial pw({ExactRat(0), ExactRat(1)},
                         {Polynomial::constant(ExactRat(1))});
  for (int i = 1; i < d; ++i) pw = pw.convolve_unit_box();
  return BSpline{d, std::move(pw)};
}

ExactRat bspline_derivative_eval_sided(int d, int r, const ExactRat& x,
                                       Side side) {
  if (d < 1) throw std::domain_error("bspline_derivative_eval: d must be >= 1");
  if (r < 0 || r > d - 1) {
    throw std::domain_error(
        "bspline_derivative_eval: derivative order out of range");
  }
  ExactRat sum(0);
  for (int i = 0; i <= r; ++i) {
    ExactRat term =
        ExactRat(binomial(r, i)) * bspline_eval_explicit(d - r, x - i, side);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactRat bspline_derivative_eval(int d, int r, const ExactRat& x) {
  if (r < 1) throw std::domain_error("bspline_derivative_eval: r must be >= 1");
  if (r > d - 1) {
    throw std::domain_error(
        "bspline_derivative_eval: derivative order out of range");
  }
  if (r >= d - 1 && is_integer(x) && x >= 0 && x <= d) {
    throw std::domain_error(
        "bspline_derivative_eval: derivative discontinuous at breakpoint");
  }
  return bspline_derivative_eval_sided(d, r, x, Side::right);
}

double fourier_check(int d, double omega) {
  if (d < 1) throw std::domain_error("fourier_check: d must be >= 1");
  BSpline spline = bspline_build(d);

  // Double-precision render of the exact pieces, one coefficient vector per
  // knot interval.
  std::vector<std::vector<double>> pieces;
  pieces.reserve(spline.pw.pieces().size());
  for (const auto& p : spline.pw.pieces()) {
    std::vector<double> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients()) c.push_back(to_double(q));
    pieces.push_back(std::move(c));
  }

  static const GaussLegendre gl = gauss_legendre(20);
  std::complex<double> integral(0.0, 0.0);
  for (int j = 0; j < d; ++j) {
    const auto& c = pieces[static_cast<size_t>(j)];
    for (size_t q = 0; q < gl.nodes.size(); ++q) {
      double t = j + 0.5 + 0.5 * gl.nodes[q];
      double value = 0.0;
      for (size_t i = c.size(); i-- > 0;) value = value * t + c[i];
      integral += 0.5 * gl.weights[q] * value *
                  std::exp(std::complex<double>(0.0, -omega * t));
    }
  }
  std::complex<double> recentred =
      integral * std::exp(std::complex<double>(0.0, omega * d / 2.0));
  double target = std::pow(sinc_double(omega / 2.0), d);
  return std::abs(recentred - target);
}

ExactInt bridge_eulerian(int d, int k) {
  if (d < 0) throw std::domain_error("bridge_eulerian: d must be >= 0");
  if (k < 0 || k > d) throw std::domain_error("bridge_eulerian: k out of range");
  ExactRat value =
      ExactRat(factorial(d)) * bspline_eval_explicit(d + 1, ExactRat(k));
  return to_integer_exact(value, "bridge_eulerian(" + std::to_string(d) + "," +
                                     std::to_string(k) + ")");
}

ExactInt bridge_descent(int d, int n, int k) {
  if (d < 0) throw std::domain_error("bridge_descent: d must be >= 0");
  if (n < 1) throw std::domain_error("bridge_descent: n must be >= 1");
  if (k < 0 || k > d) throw std::domain_error("bridge_descent: k out of range");
  ExactRat arg = make_rat(static_cast<long>(k) * n + 1, n);
  ExactRat value = ExactRat(factorial(d) * int_pow(ExactInt(n),
                                                   static_cast<unsigned long>(d))) *
                   bspline_eval_explicit(d + 1, arg);
  return to_integer_exact(value, "bridge_descent(" + std::to_string(d) + "," +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + ")");
}

LambdaPolynomial lambda_polynomial(int d, int k) {
  if (d < 0) throw std::domain_error("lambda_polynomial: d must be >= 0");
  if (k < 0 || k > d) throw std::domain_error("lambda_polynomial: k out of range");
  // d! (lambda+1)^d B_{d+1}(k + 1/(lambda+1))
  //   = sum_{i=0}^{k} (-1)^i C(d+1,i) ((k-i)(lambda+1) + 1)^d.
  Polynomial p;
  for (int i = 0; i <= k; ++i) {
    Polynomial linear({ExactRat(k - i + 1), ExactRat(k - i)});
    Polynomial term = linear.pow(static_cast<unsigned>(d)) *
                      ExactRat(binomial(d + 1, i));
    p = (i % 2 == 0) ? p + term : p - term;
  }
  LambdaPolynomial out;
  out.d = d;
  out.k = k;
  out.q = p * make_rat(ExactInt(1), factorial(d));
  return out;
}

std::vector<ExactInt> bridge_refined_coeff(int d, int k) {
  LambdaPolynomial lp = lambda_polynomial(d, k);
  const ExactInt dfact = factorial(d);
  std::vector<ExactInt> out(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    ExactRat scaled = lp.q.coeff(j) * ExactRat(dfact);
    ExactInt numer = to_integer_exact(
        scaled, "bridge_refined_coeff: non-integer lambda coefficient");
    ExactInt denom = binomial(d, j);
    if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) {
      throw VerificationError("bridge_refined_coeff: C(d,j) does not divide "
                              "coefficient at d=" +
                              std::to_string(d) + " k=" + std::to_string(k) +
                              " j=" + std::to_string(j));
    }
    out[static_cast<size_t>(j)] = numer / denom;
  }
  return out;
}

ExactInt refined_via_derivative_sum(int d, int k, int j) {
  if (d < 0) throw std::domain_error("refined_via_derivative_sum: d must be >= 0");
  if (k < 0 || k > d) {
    throw std::domain_error("refined_via_derivative_sum: k out of range");
  }
  if (j < 0 || j > d) {
    throw std::domain_error("refined_via_derivative_sum: j out of range");
  }
  ExactRat sum(0);
  const ExactRat point(k + 1);
  for (int i = 0; i <= j; ++i) {
    ExactRat term =
        ExactRat(binomial(j, i) * factorial(d - i)) *
        bspline_derivative_eval_sided(d + 1, i, point, Side::left);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return to_integer_exact(sum, "refined_via_derivative_sum(" +
                                   std::to_string(d) + "," + std::to_string(k) +
                                   "," + std::to_string(j) + ")");
}

}  // namespace eulerspline
