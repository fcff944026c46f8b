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

// Command-line front end. Intentionally thin: arguments in, C API calls,
// bytes out. Exit codes: 0 success, 1 verification/scan failure, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eulerspline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RenderTarget {
  std::string format = "csv";
  std::string out_path;  // empty = stdout
};

int write_report(es_report* report, const RenderTarget& target) {
  es_format format =
      target.format == "json" ? ES_FORMAT_JSON : ES_FORMAT_CSV;
  char* bytes = nullptr;
  size_t size = 0;
  es_status status = es_report_render(report, format, &bytes, &size);
  if (status != ES_OK) {
    std::cerr << "render failed: " << es_status_name(status) << "\n";
    return kExitUsage;
  }
  if (target.out_path.empty()) {
    std::fwrite(bytes, 1, size, stdout);
  } else {
    std::ofstream file(target.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << target.out_path << "\n";
      es_buffer_free(bytes);
      return kExitUsage;
    }
    file.write(bytes, static_cast<std::streamsize>(size));
  }
  es_buffer_free(bytes);
  return kExitOk;
}

int status_exit(es_status status) {
  std::cerr << "error: " << es_status_name(status) << "\n";
  return kExitUsage;
}

std::vector<int> parse_d_list(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  for (char c : csv) {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) out.push_back(std::stoi(token));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Eulerian / refined Eulerian / descent tables, their "
               "B-spline identities, and Gaussian-approximation scans"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "emit an exact table");
  std::string table_family;
  int table_d = 0;
  int table_n = 1;
  RenderTarget table_target;
  table->add_option("family", table_family, "eulerian|refined|descent")
      ->required()
      ->check(CLI::IsMember({"eulerian", "refined", "descent"}));
  table->add_option("--d", table_d, "order")->required();
  table->add_option("--n", table_n, "index modulus (descent)");
  table->add_option("--format", table_target.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_target.out_path, "output path");

  // verify
  auto* verify = app.add_subcommand("verify", "run exact identity suites");
  std::string verify_suite;
  int verify_d = 0;
  std::string verify_fault;
  RenderTarget verify_target;
  verify
      ->add_option("suite", verify_suite,
                   "bridges|oracle|recurrences|hermite|sincbound|all")
      ->required()
      ->check(CLI::IsMember(
          {"bridges", "oracle", "recurrences", "hermite", "sincbound", "all"}));
  verify->add_option("--d", verify_d, "max order (0 = suite default)");
  verify->add_option("--inject-fault", verify_fault,
                     "testing hook: eulerian:<d>,<k>")
      ->group("");  // hidden
  verify->add_option("--format", verify_target.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", verify_target.out_path, "output path");

  // scan
  auto* scan = app.add_subcommand("scan", "sup-error scan and slope fit");
  std::string scan_family;
  std::string scan_d_list;
  int scan_n = 2;
  int scan_j = 0;
  int scan_deriv = 0;
  double scan_window = 3.0;
  std::string scan_mode = "lattice";
  bool scan_enforce = false;
  RenderTarget scan_target;
  scan->add_option("family", scan_family, "eulerian|refined|descent|bspline")
      ->required()
      ->check(CLI::IsMember({"eulerian", "refined", "descent", "bspline"}));
  scan->add_option("--d-list", scan_d_list, "comma-separated d values");
  scan->add_option("--n", scan_n, "index modulus (descent)");
  scan->add_option("--j", scan_j, "Hermite correction depth (refined)");
  scan->add_option("--deriv", scan_deriv, "derivative order (bspline)");
  scan->add_option("--window", scan_window, "|x| <= window (default 3.0)");
  scan->add_option("--mode", scan_mode, "lattice|floor")
      ->check(CLI::IsMember({"lattice", "floor"}));
  scan->add_flag("--enforce", scan_enforce,
                 "exit 1 if the slope leaves the documented band");
  scan->add_option("--format", scan_target.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", scan_target.out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (table->parsed()) {
    es_family family = table_family == "eulerian" ? ES_FAMILY_EULERIAN
                       : table_family == "refined" ? ES_FAMILY_REFINED
                                                   : ES_FAMILY_DESCENT;
    es_report* report = nullptr;
    es_status status = es_table_report(family, table_d, table_n, &report);
    if (status != ES_OK) return status_exit(status);
    int rc = write_report(report, table_target);
    es_report_free(report);
    return rc;
  }

  if (verify->parsed()) {
    es_report* report = nullptr;
    int failures = 0;
    es_status status = es_verify_report(
        verify_suite.c_str(), verify_d,
        verify_fault.empty() ? nullptr : verify_fault.c_str(), &report,
        &failures);
    if (status != ES_OK) return status_exit(status);
    int rc = write_report(report, verify_target);
    es_report_free(report);
    if (rc != kExitOk) return rc;
    return failures == 0 ? kExitOk : kExitFailure;
  }

  if (scan->parsed()) {
    std::vector<int> d_list;
    if (!scan_d_list.empty()) {
      try {
        d_list = parse_d_list(scan_d_list);
      } catch (const std::exception&) {
        std::cerr << "invalid --d-list\n";
        return kExitUsage;
      }
    }
    es_scan_params params{};
    params.family = scan_family == "eulerian" ? ES_FAMILY_EULERIAN
                    : scan_family == "refined" ? ES_FAMILY_REFINED
                    : scan_family == "descent" ? ES_FAMILY_DESCENT
                                               : ES_FAMILY_BSPLINE;
    params.d_list = d_list.empty() ? nullptr : d_list.data();
    params.d_count = d_list.size();
    params.n = scan_n;
    params.j = scan_j;
    params.deriv = scan_deriv;
    params.window = scan_window;
    params.mode = scan_mode == "floor" ? ES_SCAN_FLOOR : ES_SCAN_LATTICE;

    es_report* report = nullptr;
    es_scan_summary summary{};
    es_status status = es_scan_report(&params, &report, &summary);
    if (status != ES_OK) return status_exit(status);
    int rc = write_report(report, scan_target);
    es_report_free(report);
    if (rc != kExitOk) return rc;
    if (scan_enforce && summary.passed == 0) return kExitFailure;
    return kExitOk;
  }

  return kExitUsage;
}
