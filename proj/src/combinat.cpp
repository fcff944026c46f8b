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

#include "eulerspline/combinat.hpp"

#include <string>

namespace eulerspline {

namespace {

// Out-of-support lookups complete recurrences with zero.
const ExactInt kZero(0);

const ExactInt& row_or_zero(const std::vector<ExactInt>& row, int k) {
  if (k < 0 || k >= static_cast<int>(row.size())) return kZero;
  return row[static_cast<size_t>(k)];
}

const ExactInt& refined_or_zero(const RefinedTable& t, int k, int j) {
  if (k < 0 || k > t.d - 1 || j < 1 || j > t.d) return kZero;
  return t.rows[static_cast<size_t>(k)][static_cast<size_t>(j - 1)];
}

}  // namespace

const ExactInt& EulerianTable::at(int k) const {
  if (k < 0 || k > d) throw std::domain_error("EulerianTable::at: k out of range");
  return values[static_cast<size_t>(k)];
}

const ExactInt& EulerianTable::descent_histogram(int m) const {
  if (m < 0 || m > d - 1) {
    throw std::domain_error("EulerianTable::descent_histogram: m out of range");
  }
  return values[static_cast<size_t>(m) + 1];
}

const ExactInt& RefinedTable::at(int k, int j) const {
  if (k < 0 || k > d - 1 || j < 1 || j > d) {
    throw std::domain_error("RefinedTable::at: index out of range");
  }
  return rows[static_cast<size_t>(k)][static_cast<size_t>(j - 1)];
}

ExactInt RefinedTable::total() const {
  ExactInt s(0);
  for (const auto& row : rows) {
    for (const auto& v : row) s += v;
  }
  return s;
}

ExactInt RefinedTable::sum_over_last(int k) const {
  if (k < 0 || k > d - 1) {
    throw std::domain_error("RefinedTable::sum_over_last: k out of range");
  }
  ExactInt s(0);
  for (const auto& v : rows[static_cast<size_t>(k)]) s += v;
  return s;
}

const ExactInt& DescentTable::at(int k) const {
  if (k < 0 || k > d) throw std::domain_error("DescentTable::at: k out of range");
  return values[static_cast<size_t>(k)];
}

ExactInt eulerian_explicit(int d, int k) {
  if (d < 0) throw std::domain_error("eulerian_explicit: d must be >= 0");
  if (k < 0 || k > d) throw std::domain_error("eulerian_explicit: k out of range");
  ExactInt sum(0);
  for (int i = 0; i <= k; ++i) {
    ExactInt term = binomial(d + 1, i) *
                    int_pow(ExactInt(k - i), static_cast<unsigned long>(d));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

EulerianTable eulerian_recurrence_table(int d) {
  if (d < 0) throw std::domain_error("eulerian_recurrence_table: d must be >= 0");
  std::vector<ExactInt> row{ExactInt(1)};  // A(0,0) = 1
  for (int t = 1; t <= d; ++t) {
    std::vector<ExactInt> next(static_cast<size_t>(t) + 1);
    next[0] = 0;
    for (int k = 1; k <= t; ++k) {
      next[static_cast<size_t>(k)] =
          ExactInt(k) * row_or_zero(row, k) +
          ExactInt(t - k + 1) * row_or_zero(row, k - 1);
    }
    row = std::move(next);
  }
  return EulerianTable{d, std::move(row)};
}

ExactInt refined_explicit(int d, int k, int j) {
  if (d < 1) throw std::domain_error("refined_explicit: d must be >= 1");
  if (k < 0 || k > d - 1) throw std::domain_error("refined_explicit: k out of range");
  if (j < 1 || j > d) throw std::domain_error("refined_explicit: j out of range");
  ExactInt sum(0);
  for (int i = 0; i <= k; ++i) {
    ExactInt term = binomial(d, i) *
                    int_pow(ExactInt(k - i), static_cast<unsigned long>(d - j)) *
                    int_pow(ExactInt(k - i + 1), static_cast<unsigned long>(j - 1));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

RefinedTable refined_recurrence_table(int d, bool cross_check) {
  if (d < 1) throw std::domain_error("refined_recurrence_table: d must be >= 1");
  RefinedTable table;
  table.d = 1;
  table.rows = {{ExactInt(1)}};  // RA(1,0,1) = 1
  for (int t = 2; t <= d; ++t) {
    RefinedTable next;
    next.d = t;
    next.rows.assign(static_cast<size_t>(t),
                     std::vector<ExactInt>(static_cast<size_t>(t)));
    for (int k = 0; k <= t - 1; ++k) {
      for (int m = 1; m <= t; ++m) {
        ExactInt v;
        if (m >= 2) {
          v = ExactInt(k + 1) * refined_or_zero(table, k, m - 1) +
              ExactInt(t - 1 - k) * refined_or_zero(table, k - 1, m - 1);
        } else {
          v = ExactInt(k) * refined_or_zero(table, k, m) +
              ExactInt(t - k) * refined_or_zero(table, k - 1, m);
        }
        next.rows[static_cast<size_t>(k)][static_cast<size_t>(m - 1)] =
            std::move(v);
      }
    }
    if (cross_check) {
      for (int k = 0; k <= t - 1; ++k) {
        for (int m = 1; m <= t - 1; ++m) {
          ExactInt alt = ExactInt(k) * refined_or_zero(table, k, m) +
                         ExactInt(t - k) * refined_or_zero(table, k - 1, m);
          if (alt != next.at(k, m)) {
            throw VerificationError(
                "refined_recurrence_table: recurrences disagree at d=" +
                std::to_string(t) + " k=" + std::to_string(k) +
                " j=" + std::to_string(m) + ": " + next.at(k, m).get_str() +
                " vs " + alt.get_str());
          }
        }
      }
    }
    table = std::move(next);
  }
  return table;
}

ExactInt descent_explicit(int d, int n, int k) {
  if (d < 0) throw std::domain_error("descent_explicit: d must be >= 0");
  if (n < 1) throw std::domain_error("descent_explicit: n must be >= 1");
  if (k < 0 || k > d) throw std::domain_error("descent_explicit: k out of range");
  ExactInt sum(0);
  for (int i = 0; i <= k; ++i) {
    ExactInt base = ExactInt(n) * ExactInt(k - i) + 1;
    ExactInt term = binomial(d + 1, i) * int_pow(base, static_cast<unsigned long>(d));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

DescentTable descent_recurrence_table(int d, int n) {
  if (d < 0) throw std::domain_error("descent_recurrence_table: d must be >= 0");
  if (n < 1) throw std::domain_error("descent_recurrence_table: n must be >= 1");
  std::vector<ExactInt> row{ExactInt(1)};  // D(0,n,0) = 1
  for (int t = 1; t <= d; ++t) {
    std::vector<ExactInt> next(static_cast<size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) {
      next[static_cast<size_t>(k)] =
          ExactInt(static_cast<long>(n) * k + 1) * row_or_zero(row, k) +
          ExactInt(static_cast<long>(n) * (t - k) + n - 1) *
              row_or_zero(row, k - 1);
    }
    row = std::move(next);
  }
  return DescentTable{d, n, std::move(row)};
}

}  // namespace eulerspline
