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

#pragma once

#include <vector>

#include "eulerspline/numeric.hpp"

namespace eulerspline {

// Index conventions, stated once and kept explicit in the types:
//   EulerianTable  values[k] = A(d,k)      = #{perms of S_d with k-1 descents}
//   RefinedTable   at(k,j)   = RA(d,k,j)   = #{perms of S_d with k descents
//                                             ending with the element j}
//   DescentTable   values[k] = D(d,n,k)    = #{indexed perms of S_d^n with
//                                             k descents}
// The shifted views (descent_histogram, n = 1 reduction, refined-to-plain
// aggregation) are provided as named accessors so the off-by-one never leaks.

struct EulerianTable {
  int d = 0;
  std::vector<ExactInt> values;  // k = 0..d

  const ExactInt& at(int k) const;
  // Count of permutations with exactly m descents, m = 0..d-1.
  const ExactInt& descent_histogram(int m) const;
};

struct RefinedTable {
  int d = 0;
  // rows[k][j-1] for 0 <= k <= d-1, 1 <= j <= d.
  std::vector<std::vector<ExactInt>> rows;

  const ExactInt& at(int k, int j) const;
  ExactInt total() const;
  // Sum over the last element j, equals A(d, k+1).
  ExactInt sum_over_last(int k) const;
};

struct DescentTable {
  int d = 0;
  int n = 1;
  std::vector<ExactInt> values;  // k = 0..d

  const ExactInt& at(int k) const;
};

// Explicit formula: sum_{i=0}^{k} C(d+1,i) (-1)^i (k-i)^d.
ExactInt eulerian_explicit(int d, int k);

// Row built from A(d,k) = k A(d-1,k) + (d-k+1) A(d-1,k-1) with
// A(0,0) = 1 and A(d,0) = 0 for d > 0.
EulerianTable eulerian_recurrence_table(int d);

// Explicit formula: sum_{i=0}^{k} C(d,i) (-1)^i (k-i)^{d-j} (k-i+1)^{j-1},
// with 0^0 = 1.
ExactInt refined_explicit(int d, int k, int j);

// Builds the table bottom-up from RA(1,0,1) = 1. The first recurrence
//   RA(d,k,m) = (k+1) RA(d-1,k,m-1) + (d-1-k) RA(d-1,k-1,m-1)
// covers target columns m >= 2; its source column m-1 leaves the support at
// m = 1, where the second recurrence
//   RA(d,k,m) = k RA(d-1,k,m) + (d-k) RA(d-1,k-1,m)
// (valid for m <= d-1) fills in. With cross_check, every entry with m <= d-1
// is recomputed through the second recurrence and compared; a mismatch throws
// VerificationError.
RefinedTable refined_recurrence_table(int d, bool cross_check = false);

// Explicit formula: sum_{i=0}^{k} C(d+1,i) (-1)^i (n(k-i)+1)^d.
ExactInt descent_explicit(int d, int n, int k);

// Rows built from D(t,n,k) = (nk+1) D(t-1,n,k) + (n(t-k)+n-1) D(t-1,n,k-1),
// base D(0,n,0) = 1.
DescentTable descent_recurrence_table(int d, int n);

}  // namespace eulerspline
