#ifndef SECTORFORM_H
#define SECTORFORM_H

/* C interface to the sectorform library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns an sf_status; on anything
 * other than SF_OK or SF_CHECK_FAILED, sf_last_error() describes the failure
 * for the calling thread. Strings returned through char** are released with
 * sf_string_free. All JSON uses the field order documented in json_io.hpp. */

#include <stddef.h>

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SF_API __attribute__((visibility("default")))
#else
#define SF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK            = 0,
  SF_CHECK_FAILED  = 1, /* the call ran, but a verified property failed */
  SF_ERR_INPUT     = 2, /* null handle or invalid argument */
  SF_ERR_RESOURCE  = 3, /* a resource cap was exceeded */
  SF_ERR_JSON      = 4,
  SF_ERR_DIMENSION = 5,
  SF_ERR_INDEX     = 6,
  SF_ERR_DOMAIN    = 7, /* e.g. factoring a non-surjection, non-sector input */
  SF_ERR_INTERNAL  = 8
} sf_status;

typedef struct sf_map  sf_map;
typedef struct sf_word sf_word;
typedef struct sf_form sf_form;

typedef struct sf_limits {
  size_t max_n;
  size_t max_m;
  size_t max_d;
  size_t max_candidates;
} sf_limits;

SF_API void sf_limits_default(sf_limits* out);

SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status s);
SF_API void        sf_string_free(char* s);

SF_API sf_status sf_map_from_json(const char* json, sf_map** out);
SF_API sf_status sf_map_to_json(const sf_map* f, char** out);
SF_API void      sf_map_free(sf_map* f);

SF_API sf_status sf_word_from_json(const char* json, sf_word** out);
SF_API sf_status sf_word_to_json(const sf_word* w, char** out);
SF_API void      sf_word_free(sf_word* w);

SF_API sf_status sf_form_from_json(const char* json, sf_form** out);
SF_API sf_status sf_form_to_json(const sf_form* w, char** out);
SF_API void      sf_form_free(sf_form* w);

/* full = 0: epsilon / sigma only, f must be surjective;
 * full != 0: epsilon / sigma / delta_1 for any f. */
SF_API sf_status sf_factor(const sf_map* f, int full, sf_word** out);
SF_API sf_status sf_word_eval(const sf_word* w, sf_map** out);

/* *is_sector is set to 1 or 0. */
SF_API sf_status sf_form_check(const sf_form* w, int* is_sector);
/* position 0: the exterior derivative; otherwise the coface at position. */
SF_API sf_status sf_form_derive(const sf_form* w, size_t position, sf_form** out);
SF_API sf_status sf_form_apply(const sf_form* w, const sf_map* f, sf_form** out);

/* Verification sweeps write a JSON report to *report and return
 * SF_CHECK_FAILED when any instance fails. */
SF_API sf_status sf_verify_relations(size_t max_n, size_t jobs, char** report);
SF_API sf_status sf_verify_axioms(size_t dim,
                                  size_t depth,
                                  const sf_limits* limits,
                                  char**           report);
SF_API sf_status sf_complex_report(size_t           dim,
                                   size_t           deg,
                                   size_t           levels,
                                   const sf_limits* limits,
                                   char**           report);
SF_API sf_status sf_sector_basis(size_t           n,
                                 size_t           dim,
                                 size_t           deg,
                                 const sf_limits* limits,
                                 char**           report);

#ifdef __cplusplus
}
#endif

#endif
