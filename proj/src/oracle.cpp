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

#include "eulerspline/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace eulerspline {

const ExactInt& DescentHistogram::count(int m) const {
  if (m < 0 || m > d - 1) {
    throw std::domain_error("DescentHistogram::count: m out of range");
  }
  return counts[static_cast<size_t>(m)];
}

const ExactInt& DescentHistogram::refined_count(int m, int j) const {
  if (m < 0 || m > d - 1 || j < 1 || j > d) {
    throw std::domain_error("DescentHistogram::refined_count: out of range");
  }
  return refined[static_cast<size_t>(m)][static_cast<size_t>(j - 1)];
}

DescentHistogram enumerate_descents(int d) {
  if (d < 1 || d > kOracleMaxOrder) {
    throw std::domain_error("enumerate_descents: d must be in [1, 9]");
  }
  DescentHistogram h;
  h.d = d;
  h.counts.assign(static_cast<size_t>(d), ExactInt(0));
  h.refined.assign(static_cast<size_t>(d),
                   std::vector<ExactInt>(static_cast<size_t>(d), ExactInt(0)));

  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int descents = 0;
    for (int i = 0; i + 1 < d; ++i) {
      if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(i) + 1]) {
        ++descents;
      }
    }
    int last = perm.back();
    h.counts[static_cast<size_t>(descents)] += 1;
    h.refined[static_cast<size_t>(descents)][static_cast<size_t>(last - 1)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return h;
}

RemarkAudit audit_remark_relation(int d_max) {
  if (d_max < 1 || d_max + 1 > kOracleMaxOrder) {
    throw std::domain_error("audit_remark_relation: d_max must be in [1, 8]");
  }
  RemarkAudit audit;
  for (int d = 1; d <= d_max; ++d) {
    DescentHistogram big = enumerate_descents(d + 1);
    DescentHistogram small = enumerate_descents(d);
    for (int k = 0; k <= d; ++k) {
      RemarkAudit::Case c;
      c.d = d;
      c.k = k;
      c.refined_value = big.refined_count(k, d + 1);
      // A(d+1, k) in the k-1 descent convention: k descents index is k, so
      // A(d+1, k) counts permutations of S_{d+1} with k-1 descents.
      c.literal_value =
          (k >= 1 && k <= d + 1) ? big.count(k - 1) : ExactInt(0);
      c.shifted_value = (k <= d - 1) ? small.count(k) : ExactInt(0);
      c.literal_holds = (c.refined_value == c.literal_value);
      c.shifted_holds = (c.refined_value == c.shifted_value);
      audit.literal_universal = audit.literal_universal && c.literal_holds;
      audit.shifted_universal = audit.shifted_universal && c.shifted_holds;
      audit.cases.push_back(std::move(c));
    }
  }
  return audit;
}

}  // namespace eulerspline
