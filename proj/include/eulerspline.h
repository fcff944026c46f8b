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

/* C interface to the eulerspline shared library.
 *
 * Everything crosses this boundary as plain C: opaque report handles, status
 * codes, and malloc'd strings/buffers that the caller releases with
 * es_string_free / es_buffer_free. Exact integers are decimal strings (table
 * values overflow every native width long before d = 25). Rendered reports
 * are byte-stable: identical inputs produce identical bytes.
 */

#ifndef EULERSPLINE_H
#define EULERSPLINE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_ERR_INVALID_ARGUMENT = 1, /* bad parameter / unknown name */
  ES_ERR_DOMAIN = 2,           /* precondition violated (range, caps) */
  ES_ERR_VERIFICATION = 3,     /* an exact internal identity failed */
  ES_ERR_NOMEM = 4,
  ES_ERR_INTERNAL = 5
} es_status;

typedef enum es_family {
  ES_FAMILY_EULERIAN = 0,
  ES_FAMILY_REFINED = 1,
  ES_FAMILY_DESCENT = 2,
  ES_FAMILY_BSPLINE = 3
} es_family;

typedef enum es_scan_mode {
  ES_SCAN_LATTICE = 0,
  ES_SCAN_FLOOR = 1
} es_scan_mode;

typedef enum es_format {
  ES_FORMAT_CSV = 0,
  ES_FORMAT_JSON = 1
} es_format;

typedef struct es_report es_report; /* opaque */

const char* es_version(void);
const char* es_status_name(es_status status);

/* Exact scalar values as decimal strings. *out is malloc'd; release with
 * es_string_free. */
es_status es_eulerian(int d, int k, char** out);
es_status es_refined(int d, int k, int j, char** out);
es_status es_descent(int d, int n, int k, char** out);
void es_string_free(char* s);

/* table <family>. n is the descent modulus, ignored by the other families. */
es_status es_table_report(es_family family, int d, int n, es_report** out);

/* verify <suite>, suite in {oracle, recurrences, bridges, hermite, sincbound,
 * all}. d_max <= 0 selects the suite's default cap. inject_fault may be NULL;
 * the format "eulerian:<d>,<k>" perturbs one recurrence entry so the failure
 * path can be exercised end to end. *failure_count reports failing rows (the
 * run stops at the first). */
es_status es_verify_report(const char* suite, int d_max,
                           const char* inject_fault, es_report** out,
                           int* failure_count);

typedef struct es_scan_params {
  es_family family;
  const int* d_list; /* strictly increasing; NULL selects the default list */
  size_t d_count;
  int n;             /* descent modulus (descent family); 0 selects 2 */
  int j;             /* Hermite correction depth (refined family) */
  int deriv;         /* derivative order (bspline family) */
  double window;     /* scan window is |x| <= window; 0 selects 3.0 */
  es_scan_mode mode;
} es_scan_params;

typedef struct es_scan_summary {
  double slope;
  double intercept;
  double r_squared;
  int passed; /* 1 pass, 0 fail, -1 informational (floor mode) */
} es_scan_summary;

es_status es_scan_report(const es_scan_params* params, es_report** out,
                         es_scan_summary* summary);

/* Renders a report; *bytes is malloc'd (NUL-terminated, *size excludes the
 * terminator); release with es_buffer_free. */
es_status es_report_render(const es_report* report, es_format format,
                           char** bytes, size_t* size);
void es_buffer_free(char* bytes);
void es_report_free(es_report* report);

#ifdef __cplusplus
}
#endif

#endif /* EULERSPLINE_H */
