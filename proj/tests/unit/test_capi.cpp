#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "eulerspline.h"

namespace {

std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  es_string_free(s);
  return out;
}

std::string render(es_report* report, es_format format) {
  char* bytes = nullptr;
  size_t size = 0;
  REQUIRE(es_report_render(report, format, &bytes, &size) == ES_OK);
  REQUIRE(bytes != nullptr);
  CHECK(std::strlen(bytes) == size);
  std::string out(bytes, size);
  es_buffer_free(bytes);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(es_version()) == "0.1.0");
  CHECK(std::string(es_status_name(ES_OK)) == "ok");
  CHECK(std::string(es_status_name(ES_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("scalar getters return decimal strings") {
  char* s = nullptr;
  REQUIRE(es_eulerian(3, 2, &s) == ES_OK);
  CHECK(take_string(s) == "4");

  REQUIRE(es_refined(3, 1, 2, &s) == ES_OK);
  CHECK(take_string(s) == "2");

  REQUIRE(es_descent(2, 2, 1, &s) == ES_OK);
  CHECK(take_string(s) == "6");

  // Values beyond any native integer width still round-trip.
  REQUIRE(es_eulerian(40, 20, &s) == ES_OK);
  std::string big = take_string(s);
  CHECK(big.size() > 19);

  CHECK(es_eulerian(3, 7, &s) == ES_ERR_DOMAIN);
  CHECK(es_eulerian(3, 2, nullptr) == ES_ERR_INVALID_ARGUMENT);
}

TEST_CASE("table reports render identically to repeated calls") {
  es_report* report = nullptr;
  REQUIRE(es_table_report(ES_FAMILY_EULERIAN, 3, 1, &report) == ES_OK);
  std::string csv = render(report, ES_FORMAT_CSV);
  CHECK(csv == "d,k,value\n3,1,1\n3,2,4\n3,3,1\n");
  std::string json = render(report, ES_FORMAT_JSON);
  CHECK(json.find("\"value\": \"4\"") != std::string::npos);
  es_report_free(report);

  es_report* again = nullptr;
  REQUIRE(es_table_report(ES_FAMILY_EULERIAN, 3, 1, &again) == ES_OK);
  CHECK(render(again, ES_FORMAT_CSV) == csv);
  es_report_free(again);

  es_report* invalid = nullptr;
  CHECK(es_table_report(ES_FAMILY_EULERIAN, -2, 1, &invalid) == ES_ERR_DOMAIN);
  CHECK(invalid == nullptr);
  CHECK(es_table_report(ES_FAMILY_BSPLINE, 3, 1, &invalid) ==
        ES_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify through the boundary, including the fault hook") {
  es_report* report = nullptr;
  int failures = -1;
  REQUIRE(es_verify_report("oracle", 4, nullptr, &report, &failures) == ES_OK);
  CHECK(failures == 0);
  es_report_free(report);

  REQUIRE(es_verify_report("recurrences", 8, "eulerian:5,2", &report,
                           &failures) == ES_OK);
  CHECK(failures == 1);
  std::string csv = render(report, ES_FORMAT_CSV);
  CHECK(csv.find("fail") != std::string::npos);
  es_report_free(report);

  CHECK(es_verify_report("bogus", 4, nullptr, &report, &failures) ==
        ES_ERR_INVALID_ARGUMENT);
  CHECK(es_verify_report("oracle", 99, nullptr, &report, &failures) ==
        ES_ERR_DOMAIN);
}

TEST_CASE("scan through the boundary") {
  const int d_list[] = {8, 12, 16, 24};
  es_scan_params params{};
  params.family = ES_FAMILY_EULERIAN;
  params.d_list = d_list;
  params.d_count = 4;
  params.window = 2.0;
  params.mode = ES_SCAN_LATTICE;

  es_report* report = nullptr;
  es_scan_summary summary{};
  REQUIRE(es_scan_report(&params, &report, &summary) == ES_OK);
  CHECK(summary.slope < 0.0);
  CHECK(summary.r_squared > 0.0);
  std::string csv = render(report, ES_FORMAT_CSV);
  CHECK(csv.find("# slope=") != std::string::npos);
  es_report_free(report);

  CHECK(es_scan_report(nullptr, &report, &summary) ==
        ES_ERR_INVALID_ARGUMENT);

  // Pre-asymptotic d values genuinely miss the slope band.
  const int short_list[] = {8, 12, 16};
  params.d_list = short_list;
  params.d_count = 3;
  params.window = 3.0;
  es_report* short_report = nullptr;
  REQUIRE(es_scan_report(&params, &short_report, &summary) == ES_OK);
  CHECK(summary.passed == 0);
  es_report_free(short_report);

  const int bad_list[] = {16, 8};
  params.d_list = bad_list;
  params.d_count = 2;
  CHECK(es_scan_report(&params, &report, &summary) ==
        ES_ERR_INVALID_ARGUMENT);
}
