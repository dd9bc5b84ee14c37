#ifndef CELLHECKE_H
#define CELLHECKE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChAlgebraKind {
  CH_ALGEBRA_KIND_HECKE = 0,
  CH_ALGEBRA_KIND_HECKE_CLIFFORD = 1,
} ChAlgebraKind;

typedef enum ChStatus {
  CH_STATUS_OK = 0,
  CH_STATUS_INVALID_RING = 1,
  CH_STATUS_INVALID_INPUT = 2,
  CH_STATUS_NON_FIELD = 3,
  CH_STATUS_SIZE_LIMIT = 4,
  CH_STATUS_INVARIANT = 5,
  CH_STATUS_NULL_POINTER = 6,
  CH_STATUS_UTF8 = 7,
  CH_STATUS_PANIC = 8,
} ChStatus;

// `H_n` or `H^c_n` over a ring.
typedef struct ChAlgebra ChAlgebra;

// A coefficient ring.
typedef struct ChRing ChRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or null. Owned by
// the library; valid until the next failing call.
const char *ch_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void ch_string_free(char *s);

// Library version, static storage.
const char *ch_version(void);

// Parses a ring descriptor (`ZaQ`, `Qaq`, `cyclo:e[,a=r]`, `gf:p,q=v,a=v`,
// `Q:q=r,a=r`).
//
// # Safety
// `descriptor` must be a nul-terminated string; `out` a valid pointer.
enum ChStatus ch_ring_new(const char *descriptor, struct ChRing **out);

// # Safety
// `ring` must be null or a handle from [`ch_ring_new`], not yet freed.
void ch_ring_free(struct ChRing *ring);

// Canonical descriptor of `ring`; free with [`ch_string_free`].
//
// # Safety
// Pointers must be valid.
enum ChStatus ch_ring_describe(const struct ChRing *ring, char **out);

// `H_n` (or `H^c_n`) over a copy of `ring`, `n` within the size caps.
//
// # Safety
// Pointers must be valid.
enum ChStatus ch_algebra_new(const struct ChRing *ring,
                             enum ChAlgebraKind kind,
                             size_t n,
                             struct ChAlgebra **out);

// # Safety
// `algebra` must be null or a handle from [`ch_algebra_new`], not yet freed.
void ch_algebra_free(struct ChAlgebra *algebra);

// `n!` or `2ⁿn!`.
//
// # Safety
// Pointers must be valid.
enum ChStatus ch_algebra_dim(const struct ChAlgebra *algebra, size_t *out);

// The product of two words (`T1*c2*T[2,1,3]*m(2,1)`, `1`) as a JSON array
// of terms; free with [`ch_string_free`].
//
// # Safety
// Pointers must be valid; strings nul-terminated.
enum ChStatus ch_algebra_product(const struct ChAlgebra *algebra,
                                 const char *left,
                                 const char *right,
                                 char **out_json);

// `dim S_{λ;μ}` (or `dim S^c_{λ;μ}`) over a field; compositions as `"2,1"`.
//
// # Safety
// Pointers must be valid; strings nul-terminated.
enum ChStatus ch_specht_dim(const struct ChRing *ring,
                            enum ChAlgebraKind kind,
                            const char *lambda,
                            const char *mu,
                            size_t *out);

// Number of simple modules (Hecke, via Gram ranks) or simple supermodules
// up to parity change (Hecke–Clifford) over a field.
//
// # Safety
// Pointers must be valid.
enum ChStatus ch_count_simples(const struct ChRing *ring,
                               enum ChAlgebraKind kind,
                               size_t n,
                               size_t *out);

// Runs one CLI command line (arguments separated by whitespace, without
// the program name), returning its exit code and captured stdout (stderr
// on failure); free `out_text` with [`ch_string_free`].
//
// # Safety
// Pointers must be valid; `args` nul-terminated.
enum ChStatus ch_cli_run(const char *args, int32_t *exit_code, char **out_text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CELLHECKE_H */
