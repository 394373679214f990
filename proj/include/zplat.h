/* zplat - exact-arithmetic toolkit for lattices over cyclic p-groups.
 *
 * C interface to the shared library: opaque handles, status codes, and
 * heap-allocated report strings.  Every function is thread-safe; handles are
 * immutable after creation and may be shared across threads.
 *
 * Strings returned through `char **out` parameters are NUL-terminated,
 * allocated by the library, and must be released with zpl_string_free().
 * On failure, functions that take a `char **diag` parameter store a
 * diagnostic message there (also to be freed by the caller) and leave
 * `*out` untouched.
 */
#ifndef ZPLAT_H
#define ZPLAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zpl_status {
    ZPL_OK = 0,
    ZPL_ERR_SYNTAX = 1,      /* malformed input document */
    ZPL_ERR_VALIDATION = 2,  /* well-formed but invalid (order check, fields) */
    ZPL_ERR_VERSION = 3,     /* unsupported format version */
    ZPL_ERR_BAD_LEVEL = 4,   /* subgroup level out of range */
    ZPL_ERR_CAP = 5,         /* refused: computation exceeds the configured cap */
    ZPL_ERR_UNSUPPORTED = 6, /* operation outside the supported range */
    ZPL_ERR_BAD_ARGUMENT = 7,
    ZPL_ERR_INCONSISTENT = 8, /* inputs contradict each other */
    ZPL_ERR_INTERNAL = 9      /* internal assertion failed */
} zpl_status;

/* Stable name for a status code ("ok", "syntax_error", ...). */
const char* zpl_status_name(zpl_status s);

void zpl_string_free(char* s);

/* ---- lattices ---------------------------------------------------------- */

typedef struct zpl_lattice zpl_lattice;

/* Parses a lattice document (JSON text).  strict != 0 rejects unknown
 * fields.  The generator-order invariant is re-verified. */
zpl_status zpl_lattice_parse(const char* text, int strict, zpl_lattice** out, char** diag);

/* Catalog constructors; kind is one of "permutation", "cyclotomic",
 * "augmentation" (level ignored for augmentation). */
zpl_status zpl_lattice_catalog(const char* kind, long p, long n, long level, zpl_lattice** out,
                               char** diag);

/* Seeded random direct sum of catalog lattices, conjugated; the recipe is
 * echoed in reports. */
zpl_status zpl_lattice_random(long p, long n, uint64_t seed, long max_rank, zpl_lattice** out,
                              char** diag);

void zpl_lattice_free(zpl_lattice* L);

long zpl_lattice_rank(const zpl_lattice* L);
long zpl_lattice_p(const zpl_lattice* L);
long zpl_lattice_n(const zpl_lattice* L);

/* Canonical document; parse(serialize(L)) reproduces L byte-for-byte. */
zpl_status zpl_lattice_serialize(const zpl_lattice* L, char** out, char** diag);

/* ---- reports ----------------------------------------------------------- */

/* H^1 and Hhat^0 at one subgroup level. */
zpl_status zpl_report_cohomology(const zpl_lattice* L, long level, char** out, char** diag);

/* Full pipeline: input echo, character profile, cohomology, decomposition
 * statistics, diagram with axiom check, bound table. */
zpl_status zpl_report_pipeline(const zpl_lattice* L, char** out, char** diag);

/* Decomposition statistics at one group level.  reference_profile is either
 * NULL or a comma-separated list m_0,...,m_n for the permutation-multiplicity
 * solve. */
zpl_status zpl_report_decompose(const zpl_lattice* L, long group_level,
                                const char* reference_profile, char** out, char** diag);

/* Hom/Ext tables over (Z/p)[C_p], plus (Z/p^2)[C_p] when modp2 != 0. */
zpl_status zpl_report_ext(long p, int modp2, char** out, char** diag);

/* Exhaustive diagram enumeration (n = number of rank caps; only n = 2 is
 * supported) with the counting-bound comparison. */
zpl_status zpl_report_enumerate(long p, const long* rank_caps, size_t n_caps, uint64_t size_cap,
                                char** out, char** diag);

/* Closed-form bound evaluators.  formula is one of: thmA, thmB1, thmB2proof,
 * counting, countingref, fixedpart, rosen, rescores3, adhoc.  params is a
 * comma-separated k=v list; list-valued parameters use colons (d=1:1). */
zpl_status zpl_report_bounds(const char* formula, const char* params, char** out, char** diag);

/* The full cross-module invariant suite.  Deterministic for a fixed seed;
 * returns ZPL_ERR_INTERNAL (with the report still written to *out) if any
 * check fails. */
zpl_status zpl_report_verify(uint64_t seed, uint64_t cap, char** out, char** diag);

#ifdef __cplusplus
}
#endif

#endif /* ZPLAT_H */
