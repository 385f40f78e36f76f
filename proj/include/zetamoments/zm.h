#ifndef ZETAMOMENTS_ZM_H
#define ZETAMOMENTS_ZM_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ZM_BUILDING_LIBRARY)
#define ZM_API __declspec(dllexport)
#else
#define ZM_API __declspec(dllimport)
#endif
#else
#define ZM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zm_status {
  ZM_OK = 0,
  ZM_E_DOMAIN = 1,
  ZM_E_POLE = 2,
  ZM_E_PRECONDITION = 3,
  ZM_E_NEAR_ZERO = 4,
  ZM_E_INSUFFICIENT_CACHE = 5,
  ZM_E_UNRESOLVED_BLOCK = 6,
  ZM_E_IO = 7,
  ZM_E_FORMAT = 8,
  ZM_E_VERSION = 9,
  ZM_E_CHECKSUM = 10,
  ZM_E_INVARIANT = 11,
  ZM_E_EMPTY = 12,
  ZM_E_SCHEMA = 13,
  ZM_E_EVALUATION = 14,
  ZM_E_INTERNAL = 15,
  ZM_E_NULL_ARGUMENT = 16
} zm_status;

typedef enum zm_x_policy { ZM_X_TAU_SQUARED_LOG = 0, ZM_X_SQRT_T = 1, ZM_X_EXPLICIT = 2 } zm_x_policy;

typedef struct zm_cache zm_cache;
typedef struct zm_campaign zm_campaign;

/* Message of the last failing call on this thread; never NULL. */
ZM_API const char* zm_last_error_message(void);
ZM_API const char* zm_status_name(zm_status s);
ZM_API const char* zm_version(void);

/* 0 selects the hardware concurrency. */
ZM_API void zm_set_threads(unsigned n);

/* JSON strings returned through char** are owned by the caller. */
ZM_API void zm_string_free(char* s);

ZM_API zm_status zm_zeta(double re, double im, double* out_re, double* out_im, double* abs_error);
ZM_API zm_status zm_zeta_prime(double re, double im, double* out_re, double* out_im, double* abs_error);
ZM_API zm_status zm_hardy_z(double t, double* out, double* abs_error);
ZM_API zm_status zm_theta(double t, double* out);

/* Zero cache handles. refine_tol must lie in [1e-12, 1e-9]. */
ZM_API zm_status zm_sweep(double t_max, double refine_tol, zm_cache** out);
ZM_API zm_status zm_cache_load(const char* path, zm_cache** out);
ZM_API zm_status zm_cache_save(const zm_cache* c, const char* path);
ZM_API void zm_cache_free(zm_cache* c);
ZM_API size_t zm_cache_size(const zm_cache* c);
ZM_API double zm_cache_t_max(const zm_cache* c);
ZM_API zm_status zm_cache_zero(const zm_cache* c, size_t i, long* index, double* gamma, double* residual);

/* Report operations; each writes a JSON object. */
ZM_API zm_status zm_count_audit_json(const zm_cache* c, char** json);
ZM_API zm_status zm_moment_json(const zm_cache* c, double k, int ell, char** json);
ZM_API zm_status zm_shifted_json(const zm_cache* c, double k, double alpha_re, double alpha_im, char** json);
/* grid may be NULL (n = 0) for the default integer grid. */
ZM_API zm_status zm_largeval_json(const zm_cache* c, double k, double alpha_re, double alpha_im, const double* grid,
                                  size_t n, char** json);
ZM_API zm_status zm_dyadic_json(const zm_cache* c, double k, double alpha_re, double alpha_im, char** json);
ZM_API zm_status zm_cauchy_json(const zm_cache* c, int k, int ell, double R, int n_samples, char** json);
ZM_API zm_status zm_gonek_json(const zm_cache* c, double x, char** json);
/* a_im may be NULL for real coefficients. */
ZM_API zm_status zm_meansquare_json(const zm_cache* c, const double* a_re, const double* a_im, size_t n,
                                    double alpha_re, double alpha_im, char** json);
ZM_API zm_status zm_continuous_json(double k, double t_max, double step, char** json);
ZM_API zm_status zm_lemma21_json(double x, double lambda, int prime_only, double t_lo, double t_hi, size_t n_samples,
                                 unsigned long long seed, char** json);

/* Audit campaigns. */
ZM_API zm_status zm_campaign_new(double t_max, zm_campaign** out);
ZM_API void zm_campaign_free(zm_campaign* c);
ZM_API zm_status zm_campaign_set_k_list(zm_campaign* c, const double* k, size_t n);
ZM_API zm_status zm_campaign_set_ell_list(zm_campaign* c, const int* ell, size_t n);
ZM_API zm_status zm_campaign_set_alpha_list(zm_campaign* c, const double* re, const double* im, size_t n);
ZM_API zm_status zm_campaign_set_x_policy(zm_campaign* c, zm_x_policy p, double x_explicit);
ZM_API zm_status zm_campaign_set_seed(zm_campaign* c, unsigned long long seed);
/* cache may be NULL, in which case zeros are swept. */
ZM_API zm_status zm_campaign_run_json(const zm_campaign* c, const zm_cache* cache, char** json);
ZM_API zm_status zm_compare_reports_json(const char* path_a, const char* path_b, char** json);

#ifdef __cplusplus
}
#endif

#endif
