#ifndef FACTORLAB_FACTORLAB_H
#define FACTORLAB_FACTORLAB_H

#include <stdint.h>

#if defined(FACTORLAB_BUILDING_LIBRARY)
#define FL_API __attribute__((visibility("default")))
#else
#define FL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns a status; on failure fl_last_error() describes it.
 * Results are JSON documents owned by the caller: release with
 * fl_string_free. Rationals are always JSON strings such as "3/4". */

typedef enum fl_status {
  FL_OK = 0,
  FL_ERR_PARSE = 1,       /* malformed JSON or rational text */
  FL_ERR_INVALID = 2,     /* well-formed but out-of-domain input */
  FL_ERR_NOT_MEMBER = 3,  /* argument is not an element of the monoid */
  FL_ERR_UNKNOWN_ID = 4,  /* no scenario with that id */
  FL_ERR_UNSUPPORTED = 5, /* outside the fragment the operation decides */
  FL_ERR_INTERNAL = 6
} fl_status;

typedef struct fl_spec fl_spec;

typedef struct fl_budget {
  uint32_t max_k;
  uint64_t max_coefficient;
  uint64_t max_candidates;
} fl_budget;

FL_API const char* fl_version(void);
FL_API const char* fl_status_name(fl_status status);
/* Message of the last failure on the calling thread; "" if none. */
FL_API const char* fl_last_error(void);
FL_API void fl_string_free(char* text);

/* Defaults, with max_k taken from FACTORLAB_BUDGET_K when set. */
FL_API fl_status fl_budget_default(fl_budget* out);

FL_API fl_status fl_spec_parse(const char* json, fl_spec** out);
FL_API void fl_spec_free(fl_spec* spec);
FL_API fl_status fl_spec_to_json(const fl_spec* spec, char** out_json);

/* budget may be NULL for the defaults. */
FL_API fl_status fl_member(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json);
FL_API fl_status fl_divides(const fl_spec* spec, const char* a, const char* b, const fl_budget* budget,
                            char** out_json);
FL_API fl_status fl_is_atom(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json);
FL_API fl_status fl_atoms(const fl_spec* spec, const fl_budget* budget, char** out_json);
FL_API fl_status fl_is_atomic(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json);
FL_API fl_status fl_factorizations(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json);
FL_API fl_status fl_atom_divisors(const fl_spec* spec, const char* q, const fl_budget* budget, char** out_json);
FL_API fl_status fl_classify(const fl_spec* spec, const fl_budget* budget, char** out_json);
FL_API fl_status fl_archimedean(const fl_spec* spec, const char* a, const char* b, const fl_budget* budget,
                                char** out_json);

/* {"semigroup": [...], "terms": [...]} */
FL_API fl_status fl_primitive(const char* bipoly_json, char** out_json);
/* {"semigroup": [...], "f": [terms], "g": [terms]} */
FL_API fl_status fl_gl_check(const char* json, char** out_json);
/* {"variant": "zxq"|"l19", "coefficients": [...]} */
FL_API fl_status fl_dpm_classify(const char* json, char** out_json);
FL_API fl_status fl_l19_witness(const char* json, char** out_json);

FL_API fl_status fl_suite_list(char** out_json);
/* id NULL runs every scenario. *out_pass receives the overall result. */
FL_API fl_status fl_suite_run(const char* id, int inject_fault, const fl_budget* budget, char** out_json,
                              int* out_pass);

#ifdef __cplusplus
}
#endif

#endif
