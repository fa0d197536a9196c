#ifndef ZCHEB_ZCHEB_H
#define ZCHEB_ZCHEB_H

/*
 * C interface to the Zernike-to-Chebyshev coupling library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a zcheb_status; on
 * failure zcheb_last_error() holds a message for the calling thread. Strings
 * returned by accessors live as long as the handle they came from.
 */

#include <stddef.h>
#include <stdint.h>
#include <stdio.h>

#if defined(ZCHEB_BUILDING_LIBRARY)
#define ZCHEB_API __attribute__((visibility("default")))
#else
#define ZCHEB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zcheb_status {
    ZCHEB_OK = 0,
    ZCHEB_ERR_INVALID_ARGUMENT = 1, /* malformed index, unknown name, null pointer */
    ZCHEB_ERR_PRECONDITION = 2,     /* the chosen method does not cover the index */
    ZCHEB_ERR_DOMAIN = 3,           /* evaluation point outside [0, 1] */
    ZCHEB_ERR_IO = 4,
    ZCHEB_ERR_OUT_OF_RANGE = 5,
    ZCHEB_ERR_INTERNAL = 6
} zcheb_status;

typedef struct zcheb_value zcheb_value;
typedef struct zcheb_table zcheb_table;
typedef struct zcheb_report zcheb_report;

typedef struct zcheb_eval_result {
    double series; /* Clenshaw sum of the Chebyshev expansion */
    double direct; /* R_n^m at the exact rational value of x, rounded */
    double diff;   /* series - direct */
} zcheb_eval_result;

ZCHEB_API const char* zcheb_last_error(void);
ZCHEB_API const char* zcheb_status_name(zcheb_status status);

/* ---- single coefficients ---- */

/* method: direct, product, rec5, i0, i1, oracle, best (and the finer-grained
 * product_low, product_high, hyper, hyper_low, hyper_high, i0_hyper,
 * i1_rec, i1_hyper, mm). NULL means best. */
ZCHEB_API zcheb_status zcheb_coeff(long n, long m, long i, const char* method, zcheb_value** out);

ZCHEB_API const char* zcheb_value_exact(const zcheb_value* value);
/* Shortest decimal that round-trips to zcheb_value_double(). */
ZCHEB_API const char* zcheb_value_decimal(const zcheb_value* value);
/* Nearest double. */
ZCHEB_API double zcheb_value_double(const zcheb_value* value);
ZCHEB_API int zcheb_value_sign(const zcheb_value* value);
ZCHEB_API void zcheb_value_free(zcheb_value* value);

/* ---- tables ---- */

/* threads == 0 uses every hardware thread. */
ZCHEB_API zcheb_status zcheb_table_build(long n_max, unsigned threads, zcheb_table** out);
ZCHEB_API void zcheb_table_free(zcheb_table* table);
ZCHEB_API long zcheb_table_n_max(const zcheb_table* table);
ZCHEB_API size_t zcheb_table_size(const zcheb_table* table);
ZCHEB_API zcheb_status zcheb_table_get(const zcheb_table* table, long n, long m, long i, zcheb_value** out);
/* k-th entry in (n, m, i) order. */
ZCHEB_API zcheb_status zcheb_table_entry(const zcheb_table* table, size_t k, long* n, long* m, long* i,
                                         zcheb_value** out);
ZCHEB_API uint64_t zcheb_table_recurrence_steps(const zcheb_table* table);
/* One "n m i float exact" line per entry. */
ZCHEB_API zcheb_status zcheb_table_write_asc(const zcheb_table* table, FILE* out);

/* Number of (n, m, i) with n <= n_max, n - m and n - i even, 0 <= m, i <= n. */
ZCHEB_API size_t zcheb_lattice_size(long n_max);

/* ---- evaluation ---- */

/* Requires 0 <= x <= 1. exact_direct may be NULL; otherwise it receives the
 * exact value of R_n^m at x. */
ZCHEB_API zcheb_status zcheb_eval(long n, long m, double x, zcheb_eval_result* out, zcheb_value** exact_direct);

/* ---- verification ---- */

/* suite: golden, cross, sumrule, nonneg, roundtrip, all. n_max < 0 selects the
 * per-suite default (cross 20, sumrule 60, nonneg 120, roundtrip 24). */
ZCHEB_API zcheb_status zcheb_verify(const char* suite, long n_max, zcheb_report** out);
/* 1 iff every hard check passed; non-negativity findings do not count. */
ZCHEB_API int zcheb_report_passed(const zcheb_report* report);
ZCHEB_API const char* zcheb_report_text(const zcheb_report* report);
ZCHEB_API size_t zcheb_report_negative_entries(const zcheb_report* report);
ZCHEB_API void zcheb_report_free(zcheb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ZCHEB_ZCHEB_H */
