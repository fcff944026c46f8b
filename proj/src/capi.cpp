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

#include "eulerspline.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "eulerspline/combinat.hpp"
#include "eulerspline/report.hpp"

struct es_report {
  eulerspline::ReportDocument doc;
};

namespace {

char* dup_cstring(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
es_status guarded(Fn&& fn) {
  try {
    fn();
    return ES_OK;
  } catch (const std::invalid_argument&) {
    return ES_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return ES_ERR_DOMAIN;
  } catch (const eulerspline::VerificationError&) {
    return ES_ERR_VERIFICATION;
  } catch (const std::bad_alloc&) {
    return ES_ERR_NOMEM;
  } catch (...) {
    return ES_ERR_INTERNAL;
  }
}

eulerspline::Family to_family(es_family family) {
  switch (family) {
    case ES_FAMILY_EULERIAN: return eulerspline::Family::eulerian;
    case ES_FAMILY_REFINED: return eulerspline::Family::refined;
    case ES_FAMILY_DESCENT: return eulerspline::Family::descent;
    case ES_FAMILY_BSPLINE: return eulerspline::Family::bspline;
  }
  throw std::invalid_argument("unknown family");
}

es_status emit_string(const eulerspline::ExactInt& value, char** out) {
  *out = dup_cstring(value.get_str());
  return *out == nullptr ? ES_ERR_NOMEM : ES_OK;
}

}  // namespace

extern "C" {

const char* es_version(void) { return eulerspline::kLibraryVersion; }

const char* es_status_name(es_status status) {
  switch (status) {
    case ES_OK: return "ok";
    case ES_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ES_ERR_DOMAIN: return "domain error";
    case ES_ERR_VERIFICATION: return "verification failure";
    case ES_ERR_NOMEM: return "out of memory";
    case ES_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

es_status es_eulerian(int d, int k, char** out) {
  if (out == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    eulerspline::ExactInt v = eulerspline::eulerian_explicit(d, k);
    if (emit_string(v, out) != ES_OK) throw std::bad_alloc();
  });
}

es_status es_refined(int d, int k, int j, char** out) {
  if (out == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    eulerspline::ExactInt v = eulerspline::refined_explicit(d, k, j);
    if (emit_string(v, out) != ES_OK) throw std::bad_alloc();
  });
}

es_status es_descent(int d, int n, int k, char** out) {
  if (out == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    eulerspline::ExactInt v = eulerspline::descent_explicit(d, n, k);
    if (emit_string(v, out) != ES_OK) throw std::bad_alloc();
  });
}

void es_string_free(char* s) { std::free(s); }

es_status es_table_report(es_family family, int d, int n, es_report** out) {
  if (out == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto doc = eulerspline::table_report(to_family(family), d, n);
    *out = new es_report{std::move(doc)};
  });
}

es_status es_verify_report(const char* suite, int d_max,
                           const char* inject_fault, es_report** out,
                           int* failure_count) {
  if (out == nullptr || suite == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    eulerspline::VerifyOptions options;
    if (inject_fault != nullptr) options.inject_fault = inject_fault;
    int failures = 0;
    auto doc = eulerspline::verify_report(suite, d_max, options, &failures);
    if (failure_count != nullptr) *failure_count = failures;
    *out = new es_report{std::move(doc)};
  });
}

es_status es_scan_report(const es_scan_params* params, es_report** out,
                         es_scan_summary* summary) {
  if (params == nullptr || out == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    eulerspline::ScanParams sp;
    sp.family = to_family(params->family);
    if (params->n < 0 || params->window < 0.0) {
      throw std::invalid_argument("negative scan parameter");
    }
    sp.n = params->n == 0 ? 2 : params->n;
    sp.j = params->j;
    sp.deriv = params->deriv;

    std::vector<int> d_list;
    if (params->d_list == nullptr || params->d_count == 0) {
      d_list = eulerspline::default_scan_d_list(sp.family);
    } else {
      d_list.assign(params->d_list, params->d_list + params->d_count);
    }

    eulerspline::GridSpec grid;
    double window = params->window == 0.0 ? 3.0 : params->window;
    grid.x_lo = -window;
    grid.x_hi = window;
    grid.mode = params->mode == ES_SCAN_FLOOR
                    ? eulerspline::ScanMode::literal_floor
                    : eulerspline::ScanMode::lattice;

    auto doc = eulerspline::scan_report(sp, d_list, grid);
    if (summary != nullptr && doc.summary.has_value()) {
      summary->slope = doc.summary->slope;
      summary->intercept = doc.summary->intercept;
      summary->r_squared = doc.summary->r_squared;
      summary->passed = doc.summary->passed;
    }
    *out = new es_report{std::move(doc)};
  });
}

es_status es_report_render(const es_report* report, es_format format,
                           char** bytes, size_t* size) {
  if (report == nullptr || bytes == nullptr) return ES_ERR_INVALID_ARGUMENT;
  *bytes = nullptr;
  return guarded([&] {
    std::string rendered;
    if (format == ES_FORMAT_CSV) {
      rendered = eulerspline::render_csv(report->doc);
    } else if (format == ES_FORMAT_JSON) {
      rendered = eulerspline::render_json(report->doc);
    } else {
      throw std::invalid_argument("unknown format");
    }
    *bytes = dup_cstring(rendered);
    if (*bytes == nullptr) throw std::bad_alloc();
    if (size != nullptr) *size = rendered.size();
  });
}

void es_buffer_free(char* bytes) { std::free(bytes); }

void es_report_free(es_report* report) { delete report; }

}  // extern "C"
