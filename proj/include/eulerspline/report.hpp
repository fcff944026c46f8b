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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerspline/asymptotics.hpp"

namespace eulerspline {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Deterministic, byte-stable report documents. Every cell is pre-rendered:
// exact integers as decimal strings, floats through format_float17 (17
// significant digits, round-trip safe). CSV carries header + rows, plus a
// '#'-commented summary block for scans only; JSON mirrors the rows as
// objects and adds the metadata.

enum class ReportKind { table, verification, scan };

struct ScanSummary {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::string band;     // e.g. "[-1.70,-1.30]" or "[-inf,-1.30]"
  double r2_min = 0.0;
  // 1 = pass, 0 = fail, -1 = informational (literal-floor mode).
  int passed = -1;
};

struct ReportDocument {
  ReportKind kind = ReportKind::table;
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string version = kLibraryVersion;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::optional<ScanSummary> summary;
};

std::string format_float17(double v);
std::string render_csv(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);

// table <family>: eulerian -> d,k,value (k = 1..d; the single k = 0 row only
// for d = 0); refined -> d,k,j,value over the full grid; descent ->
// d,n,k,value for k = 0..d.
ReportDocument table_report(Family family, int d, int n);

struct VerifyOptions {
  // Test-harness hook: "eulerian:<d>,<k>" perturbs that recurrence-table
  // entry by +1 before the explicit-vs-recurrence comparison.
  std::string inject_fault;
};

// suite in {oracle, recurrences, bridges, hermite, sincbound, all};
// d_max <= 0 selects each suite's documented default cap (oracle 8,
// recurrences 25, bridges 25, hermite 12, sincbound 200). On failure the
// first failing row carries d,k,j,n and both values; *failures counts them.
ReportDocument verify_report(const std::string& suite, int d_max,
                             const VerifyOptions& options, int* failures);

// Scan rows are (d, sup_error); the summary holds the slope fit and the
// documented band verdict for the family (informational in floor mode).
ReportDocument scan_report(const ScanParams& params,
                           const std::vector<int>& d_list,
                           const GridSpec& grid);

std::vector<int> default_scan_d_list(Family family);

}  // namespace eulerspline
