/*
 * etaq — truncated GF(2) power-series arithmetic for eta-quotients, with
 * congruence verification and large-scale parity scanners for the partition
 * function a(n) counting partitions with no part congruent to 3 mod 6.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * canonical JSON reports. Every handle type has a matching _free; passing
 * NULL to a _free is a no-op. On failure the thread-local message from
 * etaq_last_error() stays valid until the next failing call on the thread.
 */

#ifndef ETAQ_H
#define ETAQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ETAQ_API __declspec(dllexport)
#else
#define ETAQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etaq_status {
	ETAQ_OK = 0,
	ETAQ_EINVAL = 1,    /* invalid argument / precondition violation */
	ETAQ_ETRUNC = 2,    /* truncation mismatch between series */
	ETAQ_ERANGE = 3,    /* index at or beyond the truncation */
	ETAQ_ENOTINV = 4,   /* constant term 0: not invertible */
	ETAQ_EPARSE = 5,    /* eta-expression syntax error */
	ETAQ_ECAP = 6,      /* request beyond the exact-oracle cap */
	ETAQ_ETAG = 7,      /* unknown identity or proof tag */
	ETAQ_EEMPTY = 8,    /* empty residue class */
	ETAQ_EEVEN = 9,     /* identically even residue class */
	ETAQ_ENOMEM = 10,
	ETAQ_EINTERNAL = 11
} etaq_status;

typedef struct etaq_expr etaq_expr;     /* parsed eta-quotient */
typedef struct etaq_series etaq_series; /* GF(2) coefficient stream */
typedef struct etaq_exact etaq_exact;   /* exact integer expansion */
typedef struct etaq_report etaq_report; /* verification / scan result */

ETAQ_API const char *etaq_version(void);
ETAQ_API const char *etaq_status_name(etaq_status s);
ETAQ_API const char *etaq_last_error(void);
/* Byte offset of a syntax error after ETAQ_EPARSE, (size_t)-1 otherwise. */
ETAQ_API size_t etaq_last_error_offset(void);

/* Worker count for the multiplication kernel and the scanners; 0 resets to
 * the hardware default. Results are bit-identical for every setting. */
ETAQ_API void etaq_set_threads(unsigned n);
ETAQ_API unsigned etaq_threads(void);

/* ----- eta-quotient expressions -------------------------------------
 * Grammar (whitespace ignored):
 *   expr := term ('/' term)? ; term := factor ('*' factor)* ;
 *   factor := 'f' INT ('^' SIGNED_INT)? | '(' term ')'
 * Examples: "f3/(f1*f6)", "f8/f12", "f1^12".                          */
ETAQ_API etaq_status etaq_expr_parse(const char *text, etaq_expr **out);
/* Canonical normalized form, owned by the expression. */
ETAQ_API const char *etaq_expr_str(const etaq_expr *e);
ETAQ_API void etaq_expr_free(etaq_expr *e);

/* ----- GF(2) coefficient streams ------------------------------------ */
ETAQ_API etaq_status etaq_eval(const etaq_expr *e, uint64_t trunc, etaq_series **out);
ETAQ_API uint64_t etaq_series_trunc(const etaq_series *s);
/* Reading at or past the truncation is ETAQ_ERANGE, never a silent 0. */
ETAQ_API etaq_status etaq_series_coeff(const etaq_series *s, uint64_t n, int *bit);
ETAQ_API etaq_status etaq_series_popcount(const etaq_series *s, uint64_t *count);
ETAQ_API void etaq_series_free(etaq_series *s);

/* ----- exact integer expansions (oracle scale, trunc <= 5000) ------- */
ETAQ_API etaq_status etaq_eval_exact(const etaq_expr *e, uint64_t trunc, etaq_exact **out);
ETAQ_API uint64_t etaq_exact_trunc(const etaq_exact *s);
/* Decimal string for the coefficient of q^n, owned by the handle and valid
 * until the next etaq_exact_coeff call on it or until it is freed. */
ETAQ_API etaq_status etaq_exact_coeff(etaq_exact *s, uint64_t n, const char **decimal);
ETAQ_API void etaq_exact_free(etaq_exact *s);

/* ----- verification --------------------------------------------------
 * Tags: gen_fn f6_eq_f3sq pentagonal triangular eq99 eq33 eq12 eq44
 *       f1p4_eq_f4 f3p4_eq_f12 frobenius_<t> a_eq_inv_f1f3
 *       theorem proof_first proof_second proof_third
 * '-' and '_' are interchangeable ("proof-second" works).              */
ETAQ_API etaq_status etaq_verify(const char *tag, uint64_t trunc, etaq_report **out);
/* The theorem scan on an arbitrary stream; expr NULL means f3/(f1*f6). */
ETAQ_API etaq_status etaq_verify_theorem(const char *expr, uint64_t trunc, etaq_report **out);
/* Comma-separated list of the known tags (static storage). */
ETAQ_API const char *etaq_verify_tags(void);

/* ----- scanners ------------------------------------------------------
 * expr NULL selects the a(n) stream f3/(f1*f6) in all scanners.        */
ETAQ_API etaq_status etaq_scan_density(const char *expr, uint64_t trunc, uint64_t modulus,
                                       etaq_report **out);
ETAQ_API etaq_status etaq_scan_ap(const char *expr, uint64_t trunc, uint64_t max_modulus,
                                  etaq_report **out);
ETAQ_API etaq_status etaq_scan_equi(const char *expr, uint64_t modulus, uint64_t residue,
                                    uint64_t trunc, etaq_report **out);
ETAQ_API etaq_status etaq_scan_link(uint64_t trunc, etaq_report **out);

/* 1 = passed, 0 = failed, -1 = descriptive report with no pass/fail. */
ETAQ_API int etaq_report_passed(const etaq_report *r);
/* Canonical JSON payload, owned by the report. */
ETAQ_API const char *etaq_report_json(const etaq_report *r);
ETAQ_API void etaq_report_free(etaq_report *r);

#ifdef __cplusplus
}
#endif

#endif /* ETAQ_H */
