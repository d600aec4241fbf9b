#ifndef ZETACERT_H
#define ZETACERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(ZC_BUILDING)
#define ZC_API __attribute__((visibility("default")))
#else
#define ZC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zc_status {
  ZC_OK = 0,
  ZC_ERR_INVALID_ARGUMENT = 1,
  ZC_ERR_DOMAIN = 2,
  ZC_ERR_RANGE = 3,
  ZC_ERR_NO_ADMISSIBLE_R = 4,
  ZC_ERR_ITERATION_LIMIT = 5,
  ZC_ERR_INFEASIBLE_INTERVAL = 6,
  ZC_ERR_HYPOTHESIS = 7,
  ZC_ERR_PRECISION = 8,
  ZC_ERR_IO = 9,
  ZC_ERR_INTERNAL = 10
} zc_status;

typedef enum zc_mode { ZC_MODE_ENDPOINTS = 0, ZC_MODE_GEOMETRIC = 1, ZC_MODE_FULL = 2 } zc_mode;

typedef enum zc_format { ZC_FORMAT_CSV = 0, ZC_FORMAT_JSON = 1, ZC_FORMAT_MARKDOWN = 2 } zc_format;

typedef struct zc_session zc_session;

typedef struct zc_check {
  const char* name; /* owned by the session, valid until the next run or destroy */
  double value;
  double bound;
  double margin;
  int passed;
} zc_check;

ZC_API const char* zc_version(void);
ZC_API const char* zc_status_name(zc_status s);
/* message of the last failed call on this thread, "" if none */
ZC_API const char* zc_last_error(void);

/* scalar entry points */
ZC_API zc_status zc_lambert_w0(double x, double* out);
ZC_API zc_status zc_g_of_y(double y, double* out);
ZC_API zc_status zc_sup_g(double* y, double* value);
ZC_API zc_status zc_certify_k(int64_t k, int64_t* s, double* rho, double* theta);
ZC_API zc_status zc_tyrina_x_of_y(int64_t k, double y, double* out);
ZC_API zc_status zc_tyrina_y_of_x(int64_t k, double x, double* out);
ZC_API zc_status zc_constant_A(double C, double D, double t0, double* out);
ZC_API zc_status zc_constant_B(double D, double* out);
ZC_API zc_status zc_pnt_constant_d(double c, double* out);
ZC_API zc_status zc_hurwitz_zeta(double sigma, double t, double u, double target, double* re, double* im, double* err);
ZC_API zc_status zc_snt_bound(double N, double t, double* out);
ZC_API zc_status zc_snt_bruteforce(int64_t N, double t, int u_grid, double* out);

/* sessions */
ZC_API zc_status zc_session_create(zc_session** out);
ZC_API void zc_session_destroy(zc_session* s);
ZC_API zc_status zc_session_set_k_range(zc_session* s, int64_t lo, int64_t hi);
ZC_API zc_status zc_session_set_lambda_range(zc_session* s, double lo, double hi);
ZC_API zc_status zc_session_set_mode(zc_session* s, zc_mode mode);
ZC_API zc_status zc_session_set_threads(zc_session* s, unsigned threads);
ZC_API zc_status zc_session_set_seed(zc_session* s, uint64_t seed);
/* command: rho-theta, tyrina, sweep, large-lambda, constants, zeta-check, verify-all */
ZC_API zc_status zc_session_run(zc_session* s, const char* command);
ZC_API size_t zc_session_check_count(const zc_session* s);
ZC_API zc_status zc_session_check(const zc_session* s, size_t i, zc_check* out);
ZC_API size_t zc_session_failed_count(const zc_session* s);
ZC_API size_t zc_session_warning_count(const zc_session* s);
ZC_API const char* zc_session_warning(const zc_session* s, size_t i);
/* *out is malloc'd; release with zc_free_string */
ZC_API zc_status zc_session_render(const zc_session* s, zc_format format, char** out);
ZC_API void zc_free_string(char* p);

#ifdef __cplusplus
}
#endif

#endif
