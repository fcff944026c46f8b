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

#include "eulerspline/piecewise.hpp"

#include <algorithm>
#include <utility>

namespace eulerspline {

PiecewisePolynomial::PiecewisePolynomial(std::vector<ExactRat> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.empty() && pieces_.empty()) return;
  if (breaks_.size() != pieces_.size() + 1) {
    throw std::invalid_argument(
        "PiecewisePolynomial: need one more breakpoint than pieces");
  }
  for (size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1])) {
      throw std::invalid_argument(
          "PiecewisePolynomial: breakpoints must be strictly increasing");
    }
  }
}

const ExactRat& PiecewisePolynomial::support_lo() const {
  if (is_zero()) throw std::domain_error("support_lo: zero function");
  return breaks_.front();
}

const ExactRat& PiecewisePolynomial::support_hi() const {
  if (is_zero()) throw std::domain_error("support_hi: zero function");
  return breaks_.back();
}

ExactRat PiecewisePolynomial::eval(const ExactRat& x, Side side) const {
  if (is_zero()) return ExactRat(0);
  if (side == Side::right) {
    if (x < breaks_.front() || x >= breaks_.back()) return ExactRat(0);
    // Last breakpoint b with b <= x; piece index = position - 1.
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    size_t idx = static_cast<size_t>(it - breaks_.begin()) - 1;
    return pieces_[idx].eval(x);
  }
  // Left limit: piece covering (b_i, b_{i+1}].
  if (x <= breaks_.front() || x > breaks_.back()) return ExactRat(0);
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  size_t idx = static_cast<size_t>(it - breaks_.begin());
  return pieces_[idx - 1].eval(x);
}

ExactRat PiecewisePolynomial::integral() const {
  ExactRat total(0);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Polynomial anti = pieces_[i].antiderivative();
    total += anti.eval(breaks_[i + 1]) - anti.eval(breaks_[i]);
  }
  return total;
}

PiecewisePolynomial PiecewisePolynomial::convolve_unit_box() const {
  if (is_zero()) return PiecewisePolynomial();

  // Cumulative antiderivative F with F(support_lo) = 0: on piece i,
  // F(x) = head_i + A_i(x) - A_i(b_i) where A_i integrates piece i.
  const size_t n = pieces_.size();
  std::vector<Polynomial> cumulative(n);
  ExactRat head(0);
  for (size_t i = 0; i < n; ++i) {
    Polynomial anti = pieces_[i].antiderivative();
    cumulative[i] =
        anti + Polynomial::constant(head - anti.eval(breaks_[i]));
    head = cumulative[i].eval(breaks_[i + 1]);
  }
  const ExactRat total = head;

  // F extended to all of R as a polynomial selector.
  auto cumulative_at = [&](const ExactRat& t) -> Polynomial {
    if (t < breaks_.front()) return Polynomial();
    if (t >= breaks_.back()) return Polynomial::constant(total);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return cumulative[static_cast<size_t>(it - breaks_.begin()) - 1];
  };

  // Result g(x) = F(x) - F(x-1) on the union of breakpoints and breakpoints+1.
  std::vector<ExactRat> merged;
  merged.reserve(2 * breaks_.size());
  for (const auto& b : breaks_) merged.push_back(b);
  for (const auto& b : breaks_) merged.push_back(b + 1);
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<Polynomial> out_pieces;
  out_pieces.reserve(merged.size() - 1);
  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    ExactRat mid = (merged[i] + merged[i + 1]) / 2;
    Polynomial left = cumulative_at(mid);
    Polynomial right = cumulative_at(mid - 1).compose_shift(ExactRat(-1));
    out_pieces.push_back(left - right);
  }
  return PiecewisePolynomial(std::move(merged), std::move(out_pieces));
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  if (is_zero()) return PiecewisePolynomial();
  std::vector<Polynomial> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.derivative());
  return PiecewisePolynomial(breaks_, std::move(out));
}

}  // namespace eulerspline
