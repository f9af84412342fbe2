/* Copyright 2026 The polarblock Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libpolarblock.
 *
 * Every function returns a pb_status. On failure, pb_last_error() describes
 * the error for the calling thread until its next call into the library.
 * Strings returned through char** are owned by the caller and released with
 * pb_string_free. Handles are released with their _free function; passing
 * NULL to a _free function is a no-op.
 */

#ifndef POLARBLOCK_POLARBLOCK_H_
#define POLARBLOCK_POLARBLOCK_H_

#if defined(POLARBLOCK_BUILDING_LIBRARY)
#define POLARBLOCK_API __attribute__((visibility("default")))
#else
#define POLARBLOCK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
  PB_OK = 0,
  PB_ERR_INVALID_ARGUMENT = 1,
  PB_ERR_UNSUPPORTED = 2,
  PB_ERR_BUDGET_EXCEEDED = 3,
  PB_ERR_PARSE = 4,
  PB_ERR_CHECK_FAILED = 5,
  PB_ERR_INTERNAL = 6
} pb_status;

typedef struct pb_space pb_space;
typedef struct pb_set pb_set;

POLARBLOCK_API const char* pb_version(void);
POLARBLOCK_API const char* pb_last_error(void);
POLARBLOCK_API const char* pb_status_name(pb_status status);
POLARBLOCK_API void pb_string_free(char* s);

/* kind: "q", "qminus", "qplus", "h" or "h-odd"; q is the base order (the
 * hermitian kinds live over GF(q^2)). */
POLARBLOCK_API pb_status pb_space_build(const char* kind, int rank, int q, pb_space** out);
POLARBLOCK_API void pb_space_free(pb_space* space);
POLARBLOCK_API pb_status pb_space_counts(const pb_space* space, int* points, int* generators);
POLARBLOCK_API pb_status pb_space_hash(const pb_space* space, char** out);
/* full != 0 adds the point and generator lists. */
POLARBLOCK_API pb_status pb_space_to_json(const pb_space* space, int full, char** out);

/* example: "pencil", "ruling", "ruling:1", "section-cover" or "cone:<row>"
 * with row one of conic-pencil, qplus-spread, elliptic-pencil, q4-cover,
 * hermitian-pencil. seed_json may be NULL or {"vertex": rows} /
 * {"hyperplane": rows}. */
POLARBLOCK_API pb_status pb_construct(const pb_space* space, const char* example, const char* seed_json, pb_set** out);

/* Parses a blocking-set document and rebuilds its space; the space hash
 * must match. */
POLARBLOCK_API pb_status pb_set_from_json(const char* json, pb_set** out);
POLARBLOCK_API pb_status pb_set_from_members(const pb_space* space, const int* members, int count, pb_set** out);
POLARBLOCK_API void pb_set_free(pb_set* set);
POLARBLOCK_API pb_status pb_set_size(const pb_set* set, int* size);
/* Copies up to cap members into buf; *size receives the full size. */
POLARBLOCK_API pb_status pb_set_members(const pb_set* set, int* buf, int cap, int* size);
/* New handle sharing the set's space. */
POLARBLOCK_API pb_status pb_set_space(const pb_set* set, pb_space** out);
POLARBLOCK_API pb_status pb_set_to_json(const pb_set* set, int with_matrices, char** out);

/* Blocking, minimality, coverage profile and the rank-2 counting checks. */
POLARBLOCK_API pb_status pb_verify_json(const pb_set* set, char** report);
/* strip != 0 removes inessential members first. Fails with
 * PB_ERR_CHECK_FAILED when the set is not blocking; a set that is not
 * minimal is labelled Unknown. */
POLARBLOCK_API pb_status pb_classify_json(const pb_set* set, int strip, char** report);

/* mode: "min-blocking", "enumerate-minimal", "min-cover" or
 * "min-maximal-spread". options_json may be NULL or hold any of bound,
 * budget_nodes, budget_secs, workers, max_witnesses. An exhausted budget is
 * reported in the result ("complete": false), not as an error. */
POLARBLOCK_API pb_status pb_search_json(const pb_space* space, const char* mode, const char* options_json,
                                        char** result);

/* Theorem thresholds for q, epsilon and the maximal partial spread bounds. */
POLARBLOCK_API pb_status pb_thresholds_json(int q, char** out);

/* options_json may be NULL or {"only": [ids], "workers": n}. */
POLARBLOCK_API pb_status pb_accept_json(const char* options_json, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* POLARBLOCK_POLARBLOCK_H_ */
