#ifndef MOVSURF_MOVSURF_H
#define MOVSURF_MOVSURF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MS_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define MS_API __attribute__((visibility("default")))
#else
#  define MS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero codes leave a message in ms_last_error(). */
typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_PARSE = 1,
  MS_ERR_DEGREE = 2,
  MS_ERR_INVALID_ARGUMENT = 3,
  MS_ERR_SINGULAR = 4,
  MS_ERR_BASE_POINTS = 5,
  MS_ERR_RESULTANT_VANISHES = 6,
  MS_ERR_INTERPOLATION = 7,
  MS_ERR_INTERNAL = 99
} ms_status;

typedef enum ms_patch { MS_PATCH_TENSOR = 0, MS_PATCH_TRIANGULAR = 1 } ms_patch;

typedef enum ms_matrix_kind {
  MS_MATRIX_MP = 0,
  MS_MATRIX_MP_I = 1,
  MS_MATRIX_MQ = 2,
  MS_MATRIX_MS = 3,
  MS_MATRIX_MT = 4
} ms_matrix_kind;

typedef enum ms_engine { MS_ENGINE_KOSZUL = 0, MS_ENGINE_DIXON = 1, MS_ENGINE_MACAULAY = 2 } ms_engine;

typedef enum ms_method { MS_METHOD_MOVING_QUADRICS = 0, MS_METHOD_RESULTANT = 1 } ms_method;

typedef struct ms_surface ms_surface;
typedef struct ms_matrix ms_matrix;
typedef struct ms_implicit ms_implicit;
typedef struct ms_report ms_report;

/* Message of the last failed call on this thread ("" if none). */
MS_API const char* ms_last_error(void);
MS_API const char* ms_status_name(ms_status status);
MS_API const char* ms_version(void);
/* Every char* handed out by the library is released with this. */
MS_API void ms_string_free(char* s);

/* Surfaces ------------------------------------------------------------- */

/* key=value document: case, m, n, x1..x4. */
MS_API ms_status ms_surface_from_text(const char* text, ms_surface** out);
/* x1..x4 parsed in the parameter variables of `patch` (m ignored for triangular). */
MS_API ms_status ms_surface_create(ms_patch patch, int m, int n, const char* const x[4], ms_surface** out);
/* Integer coefficients in [-9, 9] from a seeded stream. */
MS_API ms_status ms_surface_random(ms_patch patch, int m, int n, uint64_t seed, ms_surface** out);
MS_API ms_status ms_surface_describe(const ms_surface* s, char** out);
MS_API void ms_surface_free(ms_surface* s);

/* Matrices ------------------------------------------------------------- */

/* `pairs` holds 2*pair_count ints (i0, j0, i1, j1, ...) naming the index set I of a
   triangular surface; pass NULL/0 to use the default choice (MP_I, MS, MT) or none. */
MS_API ms_status ms_build_matrix(const ms_surface* s, ms_matrix_kind kind, int d, const int* pairs,
                                 size_t pair_count, ms_matrix** out);
MS_API size_t ms_matrix_rows(const ms_matrix* m);
MS_API size_t ms_matrix_cols(const ms_matrix* m);
MS_API ms_status ms_matrix_entry(const ms_matrix* m, size_t row, size_t col, char** out);
/* "R x C" header, column labels, one labelled line per row. */
MS_API ms_status ms_matrix_to_text(const ms_matrix* m, char** out);
MS_API ms_status ms_matrix_to_json(const ms_matrix* m, char** out);
MS_API ms_status ms_matrix_det(const ms_matrix* m, char** out);
MS_API ms_status ms_matrix_rank(const ms_matrix* m, size_t* out);
MS_API void ms_matrix_free(ms_matrix* m);

/* Moving d-surfaces of (bi)degree (sigma1, sigma2) following s. Triangular uses sigma1.
   `text` receives "dimension N" followed by the basis (or JSON when json != 0). */
MS_API ms_status ms_moving_space(const ms_surface* s, int d, int sigma1, int sigma2, int json,
                                 size_t* dimension, char** text);

/* Resultants ----------------------------------------------------------- */

/* key=value document with case, m, n and f1..f3 (or x1..x3). Dixon needs a tensor
   triple, Macaulay a triangular one. */
MS_API ms_status ms_resultant_from_text(const char* text, ms_engine engine, char** value);

/* Implicitization ------------------------------------------------------ */

MS_API ms_status ms_implicitize(const ms_surface* s, ms_method method, int check_identity, ms_implicit** out);
/* Homogeneous primitive implicit polynomial in X1..X4. */
MS_API ms_status ms_implicit_equation(const ms_implicit* r, char** out);
MS_API ms_status ms_implicit_root(const ms_implicit* r, char** root, unsigned* power);
/* 1 holds, 0 fails, -1 not checked. */
MS_API int ms_implicit_identity(const ms_implicit* r);
MS_API ms_status ms_implicit_to_text(const ms_implicit* r, char** out);
MS_API ms_status ms_implicit_to_json(const ms_implicit* r, char** out);
/* Evaluates the equation at `trials` random image points; *zeros counts exact zeros. */
MS_API ms_status ms_validate(const ms_implicit* r, const ms_surface* s, int trials, uint64_t seed, int* zeros);
MS_API void ms_implicit_free(ms_implicit* r);

/* Identity suites ------------------------------------------------------ */

/* identity: thm-mt, lemma-mt, conj-61, conj-62, thm-mth, remark-pm, dim-formula */
MS_API ms_status ms_verify_suite(const char* identity, ms_patch patch, int m, int n, int d, int trials,
                                 uint64_t seed, ms_report** out);
MS_API ms_status ms_verify_surface(const ms_surface* s, const char* identity, int d, const int* pairs,
                                   size_t pair_count, ms_report** out);
MS_API int ms_report_passed(const ms_report* r);
MS_API ms_status ms_report_to_text(const ms_report* r, char** out);
MS_API ms_status ms_report_to_json(const ms_report* r, char** out);
MS_API void ms_report_free(ms_report* r);

#ifdef __cplusplus
}
#endif

#endif
