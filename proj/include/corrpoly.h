// Copyright 2026 The corrpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the corrpoly correlation-polytope analyzer.
 *
 * Objects are opaque handles released with their matching *_free call.
 * Every fallible call returns a cp_status; on failure a description is
 * available from cp_last_error() on the same thread until the next call.
 * Strings handed out through char** parameters are heap allocated and
 * owned by the caller, who releases them with cp_string_free().
 *
 * Numeric inputs are text: decimal literals ("0.9744") or fractions
 * ("609/625"). Numeric outputs are exact fraction strings.
 */

#ifndef CORRPOLY_H
#define CORRPOLY_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(CORRPOLY_BUILDING_LIBRARY)
#define CORRPOLY_API __declspec(dllexport)
#else
#define CORRPOLY_API __declspec(dllimport)
#endif
#else
#define CORRPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_INPUT = 1,      /* malformed text, out-of-range weight, duplicate key */
  CP_ERR_SIZE_CAP = 2,   /* concept count above a configured cap */
  CP_ERR_DIMENSION = 3,  /* shapes disagree with the concept system */
  CP_ERR_NOT_FOUND = 4,  /* unknown pair id */
  CP_ERR_IO = 5,         /* file cannot be read */
  CP_ERR_ARGUMENT = 6,   /* null handle or invalid argument */
  CP_ERR_DOMAIN = 7,     /* precondition failed, e.g. decomposing an outside point */
  CP_ERR_INTERNAL = 8
} cp_status;

typedef enum cp_format {
  CP_FORMAT_TABLE = 0,
  CP_FORMAT_STRUCTURED = 1 /* JSON, see docs/structured-output.md */
} cp_format;

typedef enum cp_boundary {
  CP_BOUNDARY_NO = 0,
  CP_BOUNDARY_YES = 1,
  CP_BOUNDARY_UNKNOWN = 2 /* facets beyond the enumeration cap */
} cp_boundary;

typedef struct cp_system cp_system;
typedef struct cp_dataset cp_dataset;
typedef struct cp_report cp_report;

CORRPOLY_API const char* cp_version(void);
CORRPOLY_API const char* cp_last_error(void);
CORRPOLY_API void cp_string_free(char* s);

/* ---- concept systems ------------------------------------------------- */

/* pairs holds pair_count (i, j) index pairs, 1-based, flattened. */
CORRPOLY_API cp_status cp_system_create(unsigned concept_count, const unsigned* pairs,
                                        size_t pair_count, cp_system** out);
/* Same, with explicit caps (0 keeps the default of 16 and 4). */
CORRPOLY_API cp_status cp_system_create_with_limits(unsigned concept_count, const unsigned* pairs,
                                                    size_t pair_count, unsigned max_concepts,
                                                    unsigned max_facet_concepts, cp_system** out);
CORRPOLY_API void cp_system_free(cp_system* system);
CORRPOLY_API size_t cp_system_dimension(const cp_system* system);

/* Membership of a correlation vector given as count numeric strings
 * (p_1..p_n then one p_ij per pair). *inside is set to 1 or 0. The
 * certificate, when requested, is a JSON document holding either the
 * decomposition or the separating inequality. */
CORRPOLY_API cp_status cp_membership(const cp_system* system, const char* const* coords,
                                     size_t count, int* inside, cp_boundary* on_boundary,
                                     char** certificate_json);
CORRPOLY_API cp_status cp_violation_magnitude(const cp_system* system, const char* const* coords,
                                              size_t count, char** magnitude);
CORRPOLY_API cp_status cp_facets(const cp_system* system, cp_format format, char** out,
                                 size_t* facet_count);

/* ---- two-concept diagnostics ------------------------------------------ */

CORRPOLY_API cp_status cp_witness(const char* p1, const char* p2, const char* p12,
                                  cp_format format, char** out, int* inside);
CORRPOLY_API cp_status cp_overextension(const char* p1, const char* p2, const char* p12,
                                        char** degree);

/* ---- datasets ----------------------------------------------------------- */

CORRPOLY_API cp_status cp_dataset_bundled(cp_dataset** out);
/* pairs_csv may be NULL, in which case pairs are synthesized from ids. */
CORRPOLY_API cp_status cp_dataset_parse(const char* pairs_csv, const char* items_csv,
                                        cp_dataset** out);
/* pairs_path may be NULL or empty. */
CORRPOLY_API cp_status cp_dataset_load(const char* pairs_path, const char* items_path,
                                       cp_dataset** out);
CORRPOLY_API void cp_dataset_free(cp_dataset* dataset);
CORRPOLY_API size_t cp_dataset_pair_count(const cp_dataset* dataset);
CORRPOLY_API size_t cp_dataset_item_count(const cp_dataset* dataset);
CORRPOLY_API int cp_dataset_has_pair(const cp_dataset* dataset, const char* pair_id);
CORRPOLY_API cp_status cp_dataset_to_csv(const cp_dataset* dataset, char** pairs_csv,
                                         char** items_csv);

/* ---- classification ----------------------------------------------------- */

/* pair_id may be NULL for all pairs; threads = 0 uses hardware concurrency. */
CORRPOLY_API cp_status cp_classify(const cp_dataset* dataset, const char* pair_id,
                                   unsigned threads, cp_report** out);
CORRPOLY_API void cp_report_free(cp_report* report);
CORRPOLY_API size_t cp_report_total(const cp_report* report);
CORRPOLY_API size_t cp_report_inside_count(const cp_report* report);
CORRPOLY_API size_t cp_report_outside_count(const cp_report* report);
CORRPOLY_API size_t cp_report_mismatch_count(const cp_report* report);
CORRPOLY_API cp_status cp_report_render(const cp_report* report, cp_format format, char** out);

CORRPOLY_API cp_status cp_plotdata(const cp_dataset* dataset, const char* pair_id, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CORRPOLY_H */
