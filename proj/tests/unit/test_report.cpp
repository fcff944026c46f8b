#include <doctest.h>

#include "eulerspline/report.hpp"

using namespace eulerspline;

TEST_CASE("float formatting is 17 significant digits and round-trip safe") {
  CHECK(format_float17(0.5) == "0.5");
  CHECK(format_float17(1.0 / 3.0) == "0.33333333333333331");
  double v = 0.024322109157671234;
  CHECK(std::stod(format_float17(v)) == v);
}

TEST_CASE("eulerian table report bytes") {
  ReportDocument doc = table_report(Family::eulerian, 3, 1);
  CHECK(render_csv(doc) ==
        "d,k,value\n"
        "3,1,1\n"
        "3,2,4\n"
        "3,3,1\n");
  // d = 0 keeps the single defined entry.
  ReportDocument zero = table_report(Family::eulerian, 0, 1);
  CHECK(render_csv(zero) == "d,k,value\n0,0,1\n");
}

TEST_CASE("refined and descent table reports") {
  ReportDocument refined = table_report(Family::refined, 2, 1);
  CHECK(render_csv(refined) ==
        "d,k,j,value\n"
        "2,0,1,0\n"
        "2,0,2,1\n"
        "2,1,1,1\n"
        "2,1,2,0\n");
  ReportDocument descent = table_report(Family::descent, 2, 2);
  CHECK(render_csv(descent) ==
        "d,n,k,value\n"
        "2,2,0,1\n"
        "2,2,1,6\n"
        "2,2,2,1\n");
}

TEST_CASE("json mirrors the rows and is deterministic") {
  ReportDocument doc = table_report(Family::eulerian, 3, 1);
  std::string a = render_json(doc);
  std::string b = render_json(table_report(Family::eulerian, 3, 1));
  CHECK(a == b);
  CHECK(a.find("\"kind\": \"table\"") != std::string::npos);
  CHECK(a.find("\"rows\"") != std::string::npos);
  CHECK(a.find("\"value\": \"4\"") != std::string::npos);
  CHECK(a.back() == '\n');
}

TEST_CASE("verify report passes cleanly and honors the fault hook") {
  int failures = -1;
  ReportDocument ok = verify_report("oracle", 4, VerifyOptions{}, &failures);
  CHECK(failures == 0);
  bool found_ok_row = false;
  for (const auto& row : ok.rows) {
    if (row[0] == "oracle_eulerian" && row[5] == "ok") found_ok_row = true;
  }
  CHECK(found_ok_row);

  VerifyOptions fault;
  fault.inject_fault = "eulerian:6,3";
  ReportDocument bad = verify_report("recurrences", 8, fault, &failures);
  CHECK(failures == 1);
  const auto& last = bad.rows.back();
  CHECK(last[0] == "eulerian_recurrence_vs_explicit");
  CHECK(last[1] == "6");
  CHECK(last[2] == "3");
  CHECK(last[5] == "fail");
  // Both values are reported.
  CHECK(last[6] != last[7]);

  CHECK_THROWS_AS(verify_report("recurrences", 8,
                                VerifyOptions{"nonsense"}, &failures),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_report("bogus", 4, VerifyOptions{}, &failures),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_report("oracle", 99, VerifyOptions{}, &failures),
                  std::domain_error);
}

TEST_CASE("scan report carries rows and a summary block") {
  ScanParams params;
  params.family = Family::eulerian;
  GridSpec grid{-2.0, 2.0, ScanMode::lattice};
  ReportDocument doc = scan_report(params, {8, 12, 16, 24}, grid);
  REQUIRE(doc.summary.has_value());
  std::string csv = render_csv(doc);
  CHECK(csv.find("d,sup_error\n8,") != std::string::npos);
  CHECK(csv.find("# slope=") != std::string::npos);
  CHECK(csv.find("# band_slope=[-1.70,-1.30]") != std::string::npos);
  CHECK(csv.find("# result=") != std::string::npos);
  // Determinism across rebuilds.
  CHECK(render_csv(scan_report(params, {8, 12, 16, 24}, grid)) == csv);

  GridSpec floor_grid{-2.0, 2.0, ScanMode::literal_floor};
  ReportDocument floor_doc = scan_report(params, {8, 12, 16, 24}, floor_grid);
  CHECK(render_csv(floor_doc).find("# result=informational") !=
        std::string::npos);
}
