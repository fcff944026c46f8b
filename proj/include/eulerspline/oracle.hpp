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

// Ground truth by exhaustive permutation enumeration. Deliberately dumb:
// lexicographic iteration over all of S_d, counting descents directly.
// Everything else in the library is anchored against this module.

inline constexpr int kOracleMaxOrder = 9;  // 9! = 362880 permutations

struct DescentHistogram {
  int d = 0;
  // counts[m] = permutations with exactly m descents, m = 0..d-1.
  std::vector<ExactInt> counts;
  // refined[m][j-1] = permutations with m descents ending with element j.
  std::vector<std::vector<ExactInt>> refined;

  const ExactInt& count(int m) const;
  const ExactInt& refined_count(int m, int j) const;
};

// Enumerates S_d; throws std::domain_error unless 1 <= d <= kOracleMaxOrder.
DescentHistogram enumerate_descents(int d);

// Permutations ending with their largest element relate the refined numbers
// back to the plain ones, but the index bookkeeping admits two candidate
// alignments:
//   literal:  RA(d+1, k, d+1) == A(d+1, k)
//   shifted:  RA(d+1, k, d+1) == A(d, k+1)
// This audit tests both against enumeration for every d <= d_max, k <= d.
// (Appending the maximum never creates a descent, which is why the shifted
// form is the one that holds.)
struct RemarkAudit {
  struct Case {
    int d;
    int k;
    ExactInt refined_value;   // RA(d+1, k, d+1)
    ExactInt literal_value;   // A(d+1, k)
    ExactInt shifted_value;   // A(d, k+1)
    bool literal_holds;
    bool shifted_holds;
  };
  std::vector<Case> cases;
  bool literal_universal = true;
  bool shifted_universal = true;
};

// Requires d_max + 1 <= kOracleMaxOrder (the audit enumerates S_{d+1}).
RemarkAudit audit_remark_relation(int d_max);

}  // namespace eulerspline
