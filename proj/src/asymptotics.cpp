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

#include "eulerspline/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eulerspline/bspline.hpp"
#include "eulerspline/combinat.hpp"

namespace eulerspline {

namespace {

constexpr int kFloorGridPoints = 601;

double sigma_of(int d) { return std::sqrt((d + 1) / 12.0); }

// Exact profile value at lattice/floored index u for one family, as a
// rational. The caller owns index-range clamping.
struct FamilyScanner {
  ScanParams params;
  int d = 0;

  // Standardized x of index u (per-family offset handling).
  double x_of_index(long u) const {
    switch (params.family) {
      case Family::eulerian: {
        double sigma = sigma_of(d);
        return (u - (d + 1) / 2.0) / sigma;
      }
      case Family::descent: {
        double sigma = sigma_of(d);
        return (u + 1.0 / params.n - (d + 1) / 2.0) / sigma - 1.0 / params.n;
      }
      case Family::refined: {
        double sigma = sigma_of(d);
        return (u + 1.0 - (d + 1) / 2.0) / sigma;
      }
      case Family::bspline: {
        double sigma = std::sqrt(d / 12.0);
        return (u - d / 2.0) / sigma;
      }
    }
    return 0.0;
  }

  // Smallest/largest index whose standardized x lies in [x_lo, x_hi].
  std::pair<long, long> index_range(double x_lo, double x_hi) const {
    auto index_of_x = [&](double x) -> double {
      switch (params.family) {
        case Family::eulerian:
          return sigma_of(d) * x + (d + 1) / 2.0;
        case Family::descent:
          return sigma_of(d) * (x + 1.0 / params.n) + (d + 1) / 2.0 -
                 1.0 / params.n;
        case Family::refined:
          return sigma_of(d) * x + (d + 1) / 2.0 - 1.0;
        case Family::bspline:
          return std::sqrt(d / 12.0) * x + d / 2.0;
      }
      return 0.0;
    };
    const double eps = 1e-9;
    long lo = static_cast<long>(std::ceil(index_of_x(x_lo) - eps));
    long hi = static_cast<long>(std::floor(index_of_x(x_hi) + eps));
    lo = std::max<long>(lo, 0);
    hi = std::min<long>(hi, d);
    return {lo, hi};
  }

  long floored_index(double x) const {
    switch (params.family) {
      case Family::eulerian:
        return static_cast<long>(
            std::floor(sigma_of(d) * x + (d + 1) / 2.0));
      case Family::descent:
        return static_cast<long>(std::floor(
            sigma_of(d) * (x + 1.0 / params.n) + (d + 1) / 2.0 -
            1.0 / params.n));
      case Family::refined:
        return static_cast<long>(
            std::floor(sigma_of(d) * x + (d + 1) / 2.0 - 1.0));
      case Family::bspline:
        return static_cast<long>(std::floor(std::sqrt(d / 12.0) * x + d / 2.0));
    }
    return 0;
  }

  ExactRat exact_value(long u) const {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    ExactRat v = exact_value_uncached(u);
    cache_.emplace(u, v);
    return v;
  }

  ExactRat exact_value_uncached(long u) const {
    int k = static_cast<int>(u);
    switch (params.family) {
      case Family::eulerian:
        return make_rat(eulerian_explicit(d, k), factorial(d));
      case Family::descent:
        return make_rat(descent_explicit(d, params.n, k),
                        factorial(d) * int_pow(ExactInt(params.n),
                                               static_cast<unsigned long>(d)));
      case Family::refined:
        return make_rat(refined_explicit(d + 1, k, d + 1 - params.j),
                        factorial(d));
      case Family::bspline:
        return bspline_derivative_eval_sided(d, params.deriv, ExactRat(k),
                                             Side::right);
    }
    return ExactRat(0);
  }

  double approx_value(double x, const HermiteSequence& herm) const {
    switch (params.family) {
      case Family::eulerian:
        return eulerian_approx(d, x);
      case Family::descent:
        return descent_approx(d, params.n, x);
      case Family::refined:
        return refined_approx(d, params.j, x, herm);
      case Family::bspline:
        return bspline_gaussian_approx(params.deriv, x, herm);
    }
    return 0.0;
  }

  // |exact - approx| with the exact side carried in extended precision. The
  // spline family also applies the (d/12)^{(r+1)/2} scaling on the exact
  // side before subtracting.
  double point_error(long u, double x, const HermiteSequence& herm) const {
    ExactRat exact = exact_value(u);
    double approx = approx_value(x, herm);
    if (params.family != Family::bspline) {
      return std::abs(guarded_residual(exact, approx));
    }
    mpf_t e, a;
    mpf_init2(e, 128);
    mpf_init2(a, 128);
    mpf_set_q(e, exact.get_mpq_t());
    ExactRat scale_sq = rat_pow(make_rat(d, 12),
                                static_cast<unsigned long>(params.deriv) + 1);
    mpf_set_q(a, scale_sq.get_mpq_t());
    mpf_sqrt(a, a);
    mpf_mul(e, e, a);
    mpf_set_d(a, approx);
    mpf_sub(e, e, a);
    double out = std::abs(mpf_get_d(e));
    mpf_clear(e);
    mpf_clear(a);
    return out;
  }

  mutable std::map<long, ExactRat> cache_;
};

void validate_params(const ScanParams& params, const std::vector<int>& d_list) {
  if (d_list.empty()) throw std::invalid_argument("error_scan: empty d list");
  for (size_t i = 0; i + 1 < d_list.size(); ++i) {
    if (d_list[i] >= d_list[i + 1]) {
      throw std::invalid_argument("error_scan: d list must be increasing");
    }
  }
  if (d_list.front() < 1) throw std::invalid_argument("error_scan: d must be >= 1");
  if (params.family == Family::descent && params.n < 1) {
    throw std::invalid_argument("error_scan: n must be >= 1");
  }
  if (params.family == Family::refined && params.j < 0) {
    throw std::invalid_argument("error_scan: j must be >= 0");
  }
  if (params.family == Family::refined && params.j > d_list.front()) {
    throw std::invalid_argument("error_scan: j exceeds smallest d");
  }
  if (params.family == Family::bspline) {
    if (params.deriv < 0) throw std::invalid_argument("error_scan: deriv < 0");
    if (d_list.front() <= params.deriv + 2) {
      throw std::invalid_argument("error_scan: need d > deriv + 2");
    }
  }
}

}  // namespace

double gaussian_phi(double x) {
  return std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI);
}

double eulerian_approx(int d, double x) {
  if (d < 1) throw std::domain_error("eulerian_approx: d must be >= 1");
  return std::sqrt(6.0 / (M_PI * (d + 1))) * std::exp(-x * x / 2.0);
}

double descent_approx(int d, int n, double x) {
  if (d < 1) throw std::domain_error("descent_approx: d must be >= 1");
  if (n < 1) throw std::domain_error("descent_approx: n must be >= 1");
  double t = x + 1.0 / n;
  return std::sqrt(6.0 / (M_PI * (d + 1))) * std::exp(-t * t / 2.0);
}

double refined_approx(int d, int j, double x, const HermiteSequence& seq) {
  if (d < 1) throw std::domain_error("refined_approx: d must be >= 1");
  if (j < 0 || j > d) throw std::domain_error("refined_approx: j out of range");
  double sum = 0.0;
  for (int i = 0; i <= j; ++i) {
    double coeff = 1.0 / to_double(ExactRat(binomial(d - j + i, i)));
    sum += coeff * std::pow((d + 1) / 12.0, -i / 2.0) * hermite_eval(seq, i, x);
  }
  return std::sqrt(6.0 / (M_PI * (d + 1))) * std::exp(-x * x / 2.0) * sum;
}

double bspline_gaussian_approx(int r, double x, const HermiteSequence& seq) {
  double sign = (r % 2 == 0) ? 1.0 : -1.0;
  return sign * hermite_eval(seq, r, x) * gaussian_phi(x);
}

double lattice_step(int d) { return std::sqrt(12.0 / (d + 1)); }

ErrorScan error_scan(const ScanParams& params, const std::vector<int>& d_list,
                     const GridSpec& grid) {
  if (!(grid.x_lo < grid.x_hi)) {
    throw std::invalid_argument("error_scan: x_lo must be < x_hi");
  }
  validate_params(params, d_list);

  int herm_degree = std::max(params.j, params.deriv);
  HermiteSequence herm = hermite_prob(herm_degree);

  ErrorScan scan;
  scan.params = params;
  scan.grid = grid;
  for (int d : d_list) {
    FamilyScanner scanner{params, d, {}};
    double sup = 0.0;
    if (grid.mode == ScanMode::lattice) {
      auto [lo, hi] = scanner.index_range(grid.x_lo, grid.x_hi);
      if (lo > hi) {
        throw std::domain_error("error_scan: window contains no lattice point");
      }
      for (long u = lo; u <= hi; ++u) {
        sup = std::max(sup, scanner.point_error(u, scanner.x_of_index(u), herm));
      }
    } else {
      bool any = false;
      for (int t = 0; t < kFloorGridPoints; ++t) {
        double x = grid.x_lo +
                   t * (grid.x_hi - grid.x_lo) / (kFloorGridPoints - 1);
        long u = scanner.floored_index(x);
        if (u < 0 || u > d) continue;
        any = true;
        sup = std::max(sup, scanner.point_error(u, x, herm));
      }
      if (!any) {
        throw std::domain_error("error_scan: window contains no sample");
      }
    }
    scan.samples.emplace_back(d, sup);
  }
  return scan;
}

SlopeFit fit_convergence_order(const ErrorScan& scan) {
  const auto& s = scan.samples;
  if (s.size() < 3) {
    throw std::domain_error("fit_convergence_order: need at least 3 samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [d, err] : s) {
    if (!(err > 0.0)) {
      throw std::domain_error(
          "fit_convergence_order: nonpositive error sample (log undefined)");
    }
    double lx = std::log(static_cast<double>(d));
    double ly = std::log(err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double n = static_cast<double>(s.size());
  double denom = n * sxx - sx * sx;
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (const auto& [d, err] : s) {
    double lx = std::log(static_cast<double>(d));
    double r = std::log(err) - (fit.intercept + fit.slope * lx);
    ss_res += r * r;
  }
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0)
                               : 1.0;
  fit.d_min = s.front().first;
  fit.d_max = s.back().first;
  return fit;
}

double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

double sinc_envelope_constant(int k, int* argmax_d) {
  if (k < 0) throw std::domain_error("sinc_envelope_constant: k must be >= 0");
  double best = 0.0;
  int best_d = k + 2;
  int decreases = 0;
  double prev = -1.0;
  for (int d = k + 2;; ++d) {
    double term = std::pow(d, (k + 2) / 2.0) / std::pow(M_PI, d - k - 2);
    if (term > best) {
      best = term;
      best_d = d;
    }
    if (prev >= 0.0 && term < prev) {
      if (++decreases >= 50) break;
    } else {
      decreases = 0;
    }
    prev = term;
  }
  if (argmax_d != nullptr) *argmax_d = best_d;
  return best;
}

SincBoundReport sinc_bound_check(int k, int d_max, double x_max, double dx) {
  if (k < 0) throw std::domain_error("sinc_bound_check: k must be >= 0");
  if (d_max < k + 2) {
    throw std::domain_error("sinc_bound_check: need d_max >= k + 2");
  }
  if (!(dx > 0.0) || !(x_max > 0.0)) {
    throw std::domain_error("sinc_bound_check: grid must be positive");
  }
  SincBoundReport report;
  report.k = k;
  report.c_k = sinc_envelope_constant(k, &report.c_k_argmax_d);

  const double pi_k = std::pow(M_PI, k);
  for (int d = k + 2; d <= d_max; ++d) {
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    for (double x = 0.0; x <= x_max + 1e-12; x += dx) {
      double lhs = pi_k * std::pow(std::abs(x), k) *
                   std::pow(std::abs(sinc(M_PI * x / sqrt_d)), d);
      double bound = pi_k * std::pow(std::abs(x), k) * std::exp(-x * x);
      if (std::abs(x) > 1.0) {
        bound += report.c_k / (M_PI * M_PI * x * x);
      }
      ++report.points_checked;
      // The bound is attained exactly at d = k+2 when sinc sits on its 1/t
      // envelope (odd integer x for k = 2), so the two evaluation paths can
      // disagree by an ulp; rounding ties are not violations.
      if (lhs > bound * (1.0 + 1e-12)) {
        report.violations.push_back({d, x, lhs, bound});
      }
    }
  }
  return report;
}

int descent_peak_index(int d, int n) {
  DescentTable table = descent_recurrence_table(d, n);
  int best = 0;
  for (int k = 1; k <= d; ++k) {
    if (table.at(k) > table.at(best)) best = k;
  }
  return best;
}

double descent_peak_standardized(int d, int n) {
  int k = descent_peak_index(d, n);
  FamilyScanner scanner{ScanParams{Family::descent, n, 0, 0}, d, {}};
  return scanner.x_of_index(k);
}

}  // namespace eulerspline
