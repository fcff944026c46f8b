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

#include "eulerspline/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace eulerspline {

Polynomial::Polynomial(std::vector<ExactRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(ExactRat c) {
  return Polynomial({std::move(c)});
}

Polynomial Polynomial::monomial(int degree, ExactRat coeff) {
  if (degree < 0) throw std::domain_error("monomial: negative degree");
  std::vector<ExactRat> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRat Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ExactRat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<ExactRat> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<ExactRat> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) out[i] -= rhs.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<ExactRat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const ExactRat& s) const {
  if (s == 0) return Polynomial();
  std::vector<ExactRat> out(coeffs_);
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ExactRat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<ExactRat> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * ExactRat(static_cast<long>(i));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return Polynomial();
  std::vector<ExactRat> out(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / ExactRat(static_cast<long>(i) + 1);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_shift(const ExactRat& c) const {
  // Horner in (x + c): result = (...(a_n)(x+c) + a_{n-1})(x+c) + ...
  Polynomial shift({c, ExactRat(1)});
  Polynomial result;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    result = result * shift + constant(coeffs_[i]);
  }
  return result;
}

ExactRat Polynomial::eval(const ExactRat& x) const {
  ExactRat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + to_double(coeffs_[i]);
  }
  return acc;
}

}  // namespace eulerspline
