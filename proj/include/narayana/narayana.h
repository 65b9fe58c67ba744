/*
 * C interface to the Narayana polynomial library.
 *
 * Every object is an opaque handle created by a nar_*_create/build/run call
 * and released with the matching nar_*_free. Functions return a nar_status;
 * on failure nar_last_error() holds a message for the calling thread.
 * Strings returned by accessors are owned by the handle they came from.
 */
#ifndef NARAYANA_H
#define NARAYANA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NARAYANA_BUILDING)
#    define NAR_API __declspec(dllexport)
#  else
#    define NAR_API __declspec(dllimport)
#  endif
#else
#  define NAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nar_status {
  NAR_OK = 0,
  NAR_ERR_DOMAIN = 1,          /* argument outside the documented range */
  NAR_ERR_DIVISION_BY_ZERO = 2,
  NAR_ERR_NOT_DIVISIBLE = 3,   /* exact division by z^k failed: identity broken */
  NAR_ERR_INCONSISTENT = 4,    /* odd power of sqrt(z) survived expectation */
  NAR_ERR_PARSE = 5,
  NAR_ERR_INVALID_ARGUMENT = 6, /* unknown name, null pointer, ... */
  NAR_ERR_DISAGREEMENT = 7,    /* construction methods produced different polynomials */
  NAR_ERR_INTERNAL = 99
} nar_status;

typedef enum nar_method {
  NAR_METHOD_DIRECT = 0,
  NAR_METHOD_RECURRENCE = 1,
  NAR_METHOD_MOMENT = 2
} nar_method;

typedef struct nar_poly nar_poly;
typedef struct nar_strings nar_strings;
typedef struct nar_verifier nar_verifier;
typedef struct nar_report nar_report;
typedef struct nar_bench nar_bench;

typedef struct nar_bench_record {
  nar_method method;
  int64_t r;
  uint64_t wall_time_ns;
  uint64_t max_coeff_bits;
} nar_bench_record;

NAR_API const char* nar_last_error(void);
NAR_API const char* nar_status_string(nar_status status);

/* ---- methods ---------------------------------------------------------- */

NAR_API nar_status nar_method_from_name(const char* name, nar_method* out);
NAR_API const char* nar_method_name(nar_method method);

/* ---- polynomials ------------------------------------------------------ */

/* N_r built by the given method, r >= 1. */
NAR_API nar_status nar_poly_build(int64_t r, nar_method method, nar_poly** out);
/* Polynomial from ascending coefficient strings ("n" or "n/d"). */
NAR_API nar_status nar_poly_parse(const char* const* coeffs, size_t count, nar_poly** out);
NAR_API void nar_poly_free(nar_poly* p);
/* Number of stored coefficients; 0 for the zero polynomial. */
NAR_API size_t nar_poly_size(const nar_poly* p);
/* Canonical string of the coefficient of z^i, NULL past the end. */
NAR_API const char* nar_poly_coeff(const nar_poly* p, size_t i);
/* 1 if equal, 0 otherwise. */
NAR_API int nar_poly_equal(const nar_poly* a, const nar_poly* b);

/* ---- sequences -------------------------------------------------------- */

/* name: catalan | narayana-row | lassalle | schroder-half | large-schroder |
 * weighted1 | weighted2. Values for index 1..n, except narayana-row which
 * yields the full row r = n. */
NAR_API nar_status nar_sequence(const char* name, int64_t n, nar_strings** out);
NAR_API size_t nar_strings_size(const nar_strings* s);
NAR_API const char* nar_strings_at(const nar_strings* s, size_t i);
NAR_API void nar_strings_free(nar_strings* s);

/* ---- verification ----------------------------------------------------- */

NAR_API size_t nar_identity_count(void);
NAR_API const char* nar_identity_name(size_t index);
NAR_API nar_status nar_identity_range(const char* identity, int64_t* r_min, int64_t* r_default);

NAR_API nar_status nar_verifier_create(nar_verifier** out);
NAR_API void nar_verifier_free(nar_verifier* v);
/* Replaces the reference polynomial N_r used by the checks. */
NAR_API nar_status nar_verifier_override_row(nar_verifier* v, int64_t r, const nar_poly* p);
/* Runs one identity over its range up to r_max. A failing identity is still
 * NAR_OK; inspect the report. r_max below the range gives NAR_ERR_DOMAIN. */
NAR_API nar_status nar_verify(const nar_verifier* v, const char* identity, int64_t r_max, uint64_t seed,
                              nar_report** out);
NAR_API int nar_report_passed(const nar_report* rep);
/* r of the first failure, 0 when the report passed. */
NAR_API int64_t nar_report_failure_r(const nar_report* rep);
NAR_API const char* nar_report_json(const nar_report* rep);
NAR_API void nar_report_free(nar_report* rep);

/* ---- benchmark -------------------------------------------------------- */

/* NAR_OK when all three methods agree for r <= r_max; otherwise
 * NAR_ERR_DISAGREEMENT with *first_bad_r set. */
NAR_API nar_status nar_methods_agree(int64_t r_max, int64_t* first_bad_r);
NAR_API nar_status nar_bench_run(int64_t r_max, uint32_t reps, const nar_method* methods, size_t method_count,
                                 nar_bench** out);
NAR_API size_t nar_bench_size(const nar_bench* b);
NAR_API nar_status nar_bench_record_at(const nar_bench* b, size_t i, nar_bench_record* out);
NAR_API void nar_bench_free(nar_bench* b);

#ifdef __cplusplus
}
#endif

#endif /* NARAYANA_H */
