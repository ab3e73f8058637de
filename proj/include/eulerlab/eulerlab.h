/* Copyright 2026 The EulerLab Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the EulerLab identity verifier and special functions.
 *
 * Every fallible call returns an eulerlab_status; on failure a description
 * is available from eulerlab_last_error() on the calling thread until its
 * next failing call. Report sets are opaque and owned by the caller.
 */
#ifndef EULERLAB_EULERLAB_H_
#define EULERLAB_EULERLAB_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EULERLAB_BUILDING_LIBRARY)
#    define EULERLAB_API __declspec(dllexport)
#  else
#    define EULERLAB_API __declspec(dllimport)
#  endif
#else
#  define EULERLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eulerlab_status {
  EULERLAB_OK = 0,
  EULERLAB_ERROR_INVALID_ARGUMENT = 1,
  EULERLAB_ERROR_DOMAIN = 2,
  EULERLAB_ERROR_POLE = 3,
  EULERLAB_ERROR_ILL_CONDITIONED = 4,
  EULERLAB_ERROR_INTEGRAND_INVALID = 5,
  EULERLAB_ERROR_UNKNOWN_IDENTITY = 6,
  EULERLAB_ERROR_MISSING_PARAMETER = 7,
  EULERLAB_ERROR_NOT_PARAMETERIZED = 8,
  EULERLAB_ERROR_INTERNAL = 9
} eulerlab_status;

typedef enum eulerlab_format {
  EULERLAB_FORMAT_TEXT = 0,
  EULERLAB_FORMAT_JSON = 1,
  EULERLAB_FORMAT_CSV = 2
} eulerlab_format;

typedef struct eulerlab_complex {
  double re;
  double im;
} eulerlab_complex;

/* Opaque ordered collection of reports (and skipped grid points). */
typedef struct eulerlab_reports eulerlab_reports;

/* Borrowed view of one entry; strings live as long as the owning set. */
typedef struct eulerlab_report_view {
  const char* id;
  int skipped; /* 1: grid point not evaluated, see skip_reason */
  const char* skip_reason;
  int has_s;
  eulerlab_complex s;
  eulerlab_complex lhs;
  eulerlab_complex rhs;
  double abs_err;
  int has_rel_err;
  double rel_err;
  double tol;
  int pass;
  const char* lhs_route;
  const char* rhs_route;
  long long evaluations;
  double elapsed_seconds;
} eulerlab_report_view;

typedef struct eulerlab_identity_info {
  const char* id;
  const char* description;
  int parameterized;
  int has_re_lower_bound;
  double re_lower_bound;
  double default_tol;
  const char* lhs_route;
  const char* rhs_route;
} eulerlab_identity_info;

typedef struct eulerlab_constant_estimate {
  double value;
  const char* method; /* static string */
  long long terms_or_n;
  int has_error_bound;
  double error_bound;
} eulerlab_constant_estimate;

EULERLAB_API const char* eulerlab_version(void);
EULERLAB_API const char* eulerlab_last_error(void);
EULERLAB_API const char* eulerlab_status_name(eulerlab_status status);

/* Registry. */
EULERLAB_API size_t eulerlab_identity_count(void);
EULERLAB_API eulerlab_status eulerlab_identity_at(size_t index,
                                                  eulerlab_identity_info* out);
/* Space-separated identity tokens; static storage. */
EULERLAB_API const char* eulerlab_identity_tokens(void);

/* Verification. `s` and `tol` may be NULL. max_threads = 0 uses all cores. */
EULERLAB_API eulerlab_status eulerlab_verify(const char* id,
                                             const eulerlab_complex* s,
                                             const double* tol,
                                             eulerlab_reports** out);
EULERLAB_API eulerlab_status eulerlab_grid(const char* id, double re_lo,
                                           double re_hi, double re_step,
                                           double im_lo, double im_hi,
                                           double im_step, const double* tol,
                                           unsigned max_threads,
                                           eulerlab_reports** out);
EULERLAB_API eulerlab_status eulerlab_verify_all(
    const char* const* override_ids, const double* override_tols,
    size_t override_count, unsigned max_threads, eulerlab_reports** out);

EULERLAB_API void eulerlab_reports_free(eulerlab_reports* reports);
EULERLAB_API size_t eulerlab_reports_size(const eulerlab_reports* reports);
/* 1 when every evaluated (non-skipped) entry passed. */
EULERLAB_API int eulerlab_reports_all_pass(const eulerlab_reports* reports);
EULERLAB_API eulerlab_status eulerlab_reports_get(
    const eulerlab_reports* reports, size_t index, eulerlab_report_view* out);

/* Renders the set. `summary` adds the per-identity table (text only).
 * The returned string must be released with eulerlab_string_free. */
EULERLAB_API eulerlab_status eulerlab_reports_render(
    const eulerlab_reports* reports, eulerlab_format format,
    int include_timing, int summary, char** out);
EULERLAB_API void eulerlab_string_free(char* text);

/* Function evaluation: gamma, eta, eta_prime, zeta, zeta_prime,
 * zeta_minus_pole. */
EULERLAB_API eulerlab_status eulerlab_eval(const char* function,
                                           eulerlab_complex s,
                                           eulerlab_complex* out);

/* Constants: gamma, ln4pi, glaisher, sqrt2pi, ln2. `method` may be NULL for
 * the default route; n <= 0 selects the default term count. */
EULERLAB_API eulerlab_status eulerlab_constant(const char* name,
                                               const char* method, long long n,
                                               eulerlab_constant_estimate* out);

/* RE, RE+IMi or RE-IMi. */
EULERLAB_API eulerlab_status eulerlab_parse_complex(const char* text,
                                                    eulerlab_complex* out);
/* Fixed 15-decimal rendering into buf; returns the needed length. */
EULERLAB_API size_t eulerlab_format_complex(eulerlab_complex value, char* buf,
                                            size_t size);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EULERLAB_EULERLAB_H_ */
