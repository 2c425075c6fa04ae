/*
 * cofilt: complex-order derivative and integral filters.
 *
 * C interface over the C++ core. Objects are opaque handles created by
 * cofilt_*_create-style calls and released with the matching *_destroy.
 * Every fallible call returns a cofilt_status; on failure a message for the
 * calling thread is available from cofilt_last_error().
 */
#ifndef COFILT_COFILT_H
#define COFILT_COFILT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(COFILT_BUILDING_LIBRARY)
#    define COFILT_API __declspec(dllexport)
#  else
#    define COFILT_API __declspec(dllimport)
#  endif
#else
#  define COFILT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cofilt_status {
  COFILT_OK = 0,
  COFILT_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, length mismatch */
  COFILT_ERR_DOMAIN = 2,           /* e.g. singular power */
  COFILT_ERR_PRECONDITION = 3,     /* e.g. folded route with Re(alpha) <= 0 */
  COFILT_ERR_IO = 4,
  COFILT_ERR_FORMAT = 5,
  COFILT_ERR_BUFFER_TOO_SMALL = 6,
  COFILT_ERR_INTERNAL = 7
} cofilt_status;

typedef enum cofilt_kind { COFILT_DERIVATIVE = 0, COFILT_INTEGRAL = 1 } cofilt_kind;

typedef enum cofilt_route { COFILT_ROUTE_SPECTRAL = 0, COFILT_ROUTE_FOLDED = 1 } cofilt_route;

typedef enum cofilt_boundary {
  COFILT_BOUNDARY_REPLICATE = 0,
  COFILT_BOUNDARY_ZERO = 1,
  COFILT_BOUNDARY_CIRCULAR = 2
} cofilt_boundary;

/* Plane selection for cofilt_field_write_planes. */
enum {
  COFILT_PLANE_RE = 1,
  COFILT_PLANE_IM = 2,
  COFILT_PLANE_ANGLE = 4,
  COFILT_PLANE_MOD = 8,
  COFILT_PLANE_ALL = 15
};

typedef struct cofilt_complex {
  double re;
  double im;
} cofilt_complex;

typedef struct cofilt_filter cofilt_filter;
typedef struct cofilt_kernel cofilt_kernel;
typedef struct cofilt_field cofilt_field;

typedef struct cofilt_report {
  char check_name[32];
  char kind[8];
  cofilt_complex alpha;
  size_t n;
  double tolerance;
  double residual;
  int passed;
  char detail[160];
  char line[256]; /* PASS|FAIL <name> kind=.. alpha=.. n=.. residual=.. */
} cofilt_report;

COFILT_API const char* cofilt_version(void);
/* Message of the last failed call on this thread ("" if none). */
COFILT_API const char* cofilt_last_error(void);

/* ---- scalars ---------------------------------------------------------- */

COFILT_API cofilt_status cofilt_principal_power(cofilt_complex base, cofilt_complex exponent,
                                                cofilt_complex* out);
COFILT_API cofilt_status cofilt_generalized_binomial(cofilt_complex alpha, size_t k, cofilt_complex* out);
COFILT_API cofilt_status cofilt_parse_alpha(const char* text, cofilt_complex* out);
/* Writes the canonical `<re>+<im>i` text; *needed receives the length
 * excluding the terminator. */
COFILT_API cofilt_status cofilt_format_alpha(cofilt_complex alpha, char* buf, size_t cap, size_t* needed);
COFILT_API cofilt_status cofilt_parse_kind(const char* text, cofilt_kind* out);
COFILT_API cofilt_status cofilt_parse_boundary(const char* text, cofilt_boundary* out);

/* ---- filters ---------------------------------------------------------- */

COFILT_API cofilt_status cofilt_filter_spectral(cofilt_kind kind, cofilt_complex alpha, size_t n,
                                                cofilt_filter** out);
/* Requires Re(alpha) > 0 (COFILT_ERR_PRECONDITION otherwise). */
COFILT_API cofilt_status cofilt_filter_folded(cofilt_kind kind, cofilt_complex alpha, size_t n, double tol,
                                              size_t max_terms, cofilt_filter** out);
COFILT_API cofilt_status cofilt_filter_read(const char* path, cofilt_filter** out);
COFILT_API void cofilt_filter_destroy(cofilt_filter* f);

COFILT_API size_t cofilt_filter_length(const cofilt_filter* f);
COFILT_API cofilt_status cofilt_filter_taps(const cofilt_filter* f, cofilt_complex* buf, size_t cap);
COFILT_API cofilt_status cofilt_filter_info(const cofilt_filter* f, cofilt_kind* kind, cofilt_complex* alpha,
                                            cofilt_route* route);
/* Folded route only: nonzero when max_terms was hit before the tolerance rule. */
COFILT_API int cofilt_filter_budget_exhausted(const cofilt_filter* f);
/* Filter dump; path "-" writes to stdout. */
COFILT_API cofilt_status cofilt_filter_write(const cofilt_filter* f, const char* path);

/* ---- kernels ---------------------------------------------------------- */

COFILT_API cofilt_status cofilt_kernel_recenter(const cofilt_filter* f, cofilt_kernel** out);
/* prod(dims) must equal the filter length. */
COFILT_API cofilt_status cofilt_kernel_place(const cofilt_filter* f, const size_t* dims, size_t rank,
                                             cofilt_kernel** out);
/* rank 1 or 2; size odd. */
COFILT_API cofilt_status cofilt_kernel_log(size_t size, double sigma, size_t rank, cofilt_kernel** out);
COFILT_API cofilt_status cofilt_kernel_gaussian(size_t size, double sigma, size_t rank, cofilt_kernel** out);
COFILT_API void cofilt_kernel_destroy(cofilt_kernel* k);

COFILT_API size_t cofilt_kernel_rank(const cofilt_kernel* k);
COFILT_API cofilt_status cofilt_kernel_dims(const cofilt_kernel* k, size_t* dims, size_t cap);
COFILT_API cofilt_status cofilt_kernel_reference(const cofilt_kernel* k, size_t* ref, size_t cap);
COFILT_API size_t cofilt_kernel_size(const cofilt_kernel* k);
COFILT_API cofilt_status cofilt_kernel_taps(const cofilt_kernel* k, cofilt_complex* buf, size_t cap);
COFILT_API cofilt_status cofilt_kernel_write(const cofilt_kernel* k, const char* path);

/* ---- fields ----------------------------------------------------------- */

COFILT_API cofilt_status cofilt_field_synth(cofilt_field** out);
/* rank 1: dims[0] samples; rank 2: dims[0] rows x dims[1] cols, row-major. */
COFILT_API cofilt_status cofilt_field_create(const size_t* dims, size_t rank, const cofilt_complex* samples,
                                             cofilt_field** out);
/* 8-bit grayscale PGM (P5) or PNG. */
COFILT_API cofilt_status cofilt_field_read_image(const char* path, cofilt_field** out);
/* `t,re,im` text. */
COFILT_API cofilt_status cofilt_field_read_signal(const char* path, cofilt_field** out);
COFILT_API cofilt_status cofilt_field_read_cfd(const char* path, cofilt_field** out);
COFILT_API void cofilt_field_destroy(cofilt_field* f);

COFILT_API size_t cofilt_field_rank(const cofilt_field* f);
COFILT_API cofilt_status cofilt_field_dims(const cofilt_field* f, size_t* dims, size_t cap);
COFILT_API size_t cofilt_field_size(const cofilt_field* f);
COFILT_API cofilt_status cofilt_field_samples(const cofilt_field* f, cofilt_complex* buf, size_t cap);
/* Decomposed planes; any output pointer may be NULL. Each buffer needs
 * cofilt_field_size() entries. */
COFILT_API cofilt_status cofilt_field_decompose(const cofilt_field* f, double* re, double* im, double* angle,
                                                double* modulus);

/* Kernel rank must match the field rank. */
COFILT_API cofilt_status cofilt_field_convolve(const cofilt_field* x, const cofilt_kernel* k,
                                               cofilt_boundary boundary, cofilt_field** out);

COFILT_API cofilt_status cofilt_field_write_signal(const cofilt_field* f, const char* path);
/* `t,re,im,angle,mod` text. */
COFILT_API cofilt_status cofilt_field_write_signal_planes(const cofilt_field* f, const char* path);
COFILT_API cofilt_status cofilt_field_write_cfd(const cofilt_field* f, const char* path);
/* 2-D fields: writes <prefix>_re.png, _im.png, _angle.png, _mod.png for the
 * selected planes, each min-max scaled to [0, 255]. */
COFILT_API cofilt_status cofilt_field_write_planes(const cofilt_field* f, const char* prefix, int planes);

COFILT_API cofilt_status cofilt_pearson(const double* a, const double* b, size_t n, double* out);

/* ---- verification ----------------------------------------------------- */

COFILT_API cofilt_status cofilt_check_realness(double alpha, size_t n, cofilt_report* out);
COFILT_API cofilt_status cofilt_check_integer_reduction(unsigned m, size_t n, cofilt_report* out);
COFILT_API cofilt_status cofilt_check_sums(cofilt_complex alpha, size_t n, cofilt_report* out);
COFILT_API cofilt_status cofilt_check_convolution_inverse(cofilt_kind kind, cofilt_complex alpha, size_t n,
                                                          cofilt_report* out);
COFILT_API cofilt_status cofilt_check_nullspace(cofilt_complex alpha, size_t n, cofilt_report* out);
COFILT_API cofilt_status cofilt_check_integral_constraints(cofilt_complex alpha, size_t n, cofilt_report* out);

/* Runs the full default grid. With buf == NULL only *count is filled. */
COFILT_API cofilt_status cofilt_verify_default(cofilt_report* buf, size_t cap, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* COFILT_COFILT_H */
