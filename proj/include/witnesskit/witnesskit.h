/*
 * witnesskit C API.
 *
 * Every function returns a wk_status. On failure a human-readable message is
 * available from wk_last_error() on the calling thread until the next failing
 * call. Handles are opaque. Every handle returned through an out-parameter
 * must be released with the matching destroy function, which also nulls it.
 *
 * Strings are returned through caller buffers: pass buf/cap, receive the full
 * length (excluding the terminator) in *len. WK_ERR_BUFFER_TOO_SMALL means
 * *len holds the required size; call again with cap > *len.
 */
#ifndef WITNESSKIT_H
#define WITNESSKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WITNESSKIT_BUILDING)
#    define WK_API __declspec(dllexport)
#  else
#    define WK_API __declspec(dllimport)
#  endif
#else
#  define WK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
  WK_SUCCESS = 0,
  WK_ERR_INVALID_ARGUMENT = 1,
  WK_ERR_DIMENSION_MISMATCH = 2,
  WK_ERR_CONVERGENCE_FAILURE = 3,
  WK_ERR_RANK_DEFICIENT = 4,
  WK_ERR_NOT_HERMITIAN = 5,
  WK_ERR_NOT_ORTHONORMAL = 6,
  WK_ERR_NOT_NORMALIZED = 7,
  WK_ERR_NOT_PROJECTOR = 8,
  WK_ERR_INVALID_RANK = 9,
  WK_ERR_INVALID_PARAMS = 10,
  WK_ERR_NON_REAL_EXPECTATION = 11,
  WK_ERR_NOT_A_STATE = 12,
  WK_ERR_PARSE = 13,
  WK_ERR_IO = 14,
  WK_ERR_NULL_POINTER = 100,
  WK_ERR_INVALID_HANDLE = 101,
  WK_ERR_BUFFER_TOO_SMALL = 102,
  WK_ERR_UNKNOWN = 199
} wk_status;

typedef struct wk_matrix_s* wk_matrix;
typedef struct wk_verdict_s* wk_verdict;

WK_API const char* wk_status_string(wk_status status);
WK_API const char* wk_last_error(void);

/* 1e-9 unless WITNESSKIT_TOL holds a non-negative number. */
WK_API double wk_default_tolerance(void);

/* ---- matrices ---------------------------------------------------------- */

/* re/im are row-major rows*cols arrays; im may be NULL for a real matrix. */
WK_API wk_status wk_matrix_create(size_t rows, size_t cols, const double* re, const double* im,
                                  wk_matrix* out);
WK_API wk_status wk_matrix_destroy(wk_matrix* m);
WK_API wk_status wk_matrix_shape(wk_matrix m, size_t* rows, size_t* cols);
WK_API wk_status wk_matrix_get(wk_matrix m, size_t row, size_t col, double* re, double* im);

/* MatrixFile JSON. d and hermitian may be NULL when not needed. */
WK_API wk_status wk_matrix_load_json(const char* path, wk_matrix* out, size_t* d, int* hermitian);
WK_API wk_status wk_matrix_save_json(wk_matrix m, size_t d, int hermitian, const char* path);

/* P_d^+, the projector onto sum_i |ii>/sqrt(d). */
WK_API wk_status wk_maxent_projector(size_t d, wk_matrix* out);

/* (1 (x) map) w for map_name in {"identity", "reduction", "inverse-reduction"}. */
WK_API wk_status wk_partial_apply(const char* map_name, wk_matrix w, wk_matrix* out);

/* ---- Choi family ------------------------------------------------------- */

/* a has d entries. Either output may be NULL. */
WK_API wk_status wk_family_build(size_t d, const double* a, double x, wk_matrix* wtilde,
                                 wk_matrix* w);
WK_API wk_status wk_family_feasibility_json(size_t d, const double* a, double x, char* buf,
                                            size_t cap, size_t* len);

/* ---- certification and detection --------------------------------------- */

/* w must be Hermitian of dimension d^2; the map acts on C^d. */
WK_API wk_status wk_certify(wk_matrix w, const char* map_name, double tol, wk_verdict* out);
WK_API wk_status wk_verdict_destroy(wk_verdict* v);
WK_API wk_status wk_verdict_certified(wk_verdict v, int* certified);
WK_API wk_status wk_verdict_min_eigenvalue(wk_verdict v, double* value);
WK_API wk_status wk_verdict_transformed_min_eigenvalue(wk_verdict v, double* value);
/* Runs the seesaw product-state minimization on the verdict's operator and
   records the result in the verdict (reported by wk_verdict_to_json). */
WK_API wk_status wk_verdict_attach_blockpos(wk_verdict v, int restarts, int iters, uint64_t seed);
WK_API wk_status wk_verdict_to_json(wk_verdict v, char* buf, size_t cap, size_t* len);

WK_API wk_status wk_blockpos_min(wk_matrix w, int restarts, int iters, uint64_t seed,
                                 double* value);

WK_API wk_status wk_detect(wk_matrix w, wk_matrix rho, double tol, int* detected, double* value);

/* ---- sweeps ------------------------------------------------------------ */

typedef struct wk_sweep_config {
  size_t d;
  const char* a_grid; /* comma-separated, one start:stop:step (or value) per a_i */
  const char* x_grid; /* start:stop:step or a single value */
  int restarts;
  int iters;
  uint64_t seed;
  double tol;
  int parallel;
} wk_sweep_config;

WK_API wk_status wk_sweep_run_csv(const wk_sweep_config* config, const char* csv_path,
                                  size_t* rows_written);

#ifdef __cplusplus
}
#endif

#endif /* WITNESSKIT_H */
