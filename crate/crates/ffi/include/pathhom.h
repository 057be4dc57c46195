#ifndef PATHHOM_H
#define PATHHOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every `pathhom_*` call.
 */
typedef enum PathhomStatus {
  PATHHOM_STATUS_OK = 0,
  PATHHOM_STATUS_NULL_POINTER = 1,
  /**
   * An argument is out of range (for example `k == 0`).
   */
  PATHHOM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The quantity is not defined for these arguments.
   */
  PATHHOM_STATUS_DOMAIN = 3,
  /**
   * The input exceeds a size limit, or a value does not fit the output type.
   */
  PATHHOM_STATUS_SIZE_LIMIT = 4,
  /**
   * Text input could not be parsed.
   */
  PATHHOM_STATUS_PARSE = 5,
  /**
   * Input parsed but is not a valid homomorphism, word or partition.
   */
  PATHHOM_STATUS_INVALID = 6,
  /**
   * Caller-provided buffer is too small; the required length was written.
   */
  PATHHOM_STATUS_BUFFER_TOO_SMALL = 7,
  PATHHOM_STATUS_INTERNAL = 8,
} PathhomStatus;

/**
 * Opaque exact nonnegative integer.
 */
typedef struct PathhomCount PathhomCount;

/**
 * Opaque epispectrum `(l_1(n), ..., l_(n-1)(n))`.
 */
typedef struct PathhomSpectrum PathhomSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next `pathhom_*` call on the thread.
 */
const char *pathhom_last_error(void);

/**
 * `|Hom(P_n, P_k)|`.
 */
enum PathhomStatus pathhom_hom(uint32_t n, uint32_t k, struct PathhomCount **out);

/**
 * Homomorphisms `P_n -> P_k` with `f(1) = j`, `1 <= j <= k`.
 */
enum PathhomStatus pathhom_homj(uint32_t n, uint32_t k, uint32_t j, struct PathhomCount **out);

/**
 * Homomorphisms `P_n -> P_k` with `f(1) = 1`.
 */
enum PathhomStatus pathhom_hom1(uint32_t n, uint32_t k, struct PathhomCount **out);

/**
 * `|End(P_n)|`.
 */
enum PathhomStatus pathhom_end(uint32_t n, struct PathhomCount **out);

/**
 * Surjective homomorphisms `P_n -> P_k`.
 */
enum PathhomStatus pathhom_epi(uint32_t n, uint32_t k, struct PathhomCount **out);

/**
 * `l_k(n)`, defined for `1 <= k <= n - 1`.
 */
enum PathhomStatus pathhom_lk(uint32_t n, uint32_t k, struct PathhomCount **out);

/**
 * Lattice paths from `(0, 0)` to `(e, nn)` staying within `x - s <= y <= x + t`.
 */
enum PathhomStatus pathhom_lattice(uint64_t e,
                                   uint64_t nn,
                                   uint64_t t,
                                   uint64_t s,
                                   struct PathhomCount **out);

/**
 * Decimal representation of `count`. Free with `pathhom_string_free`.
 *
 * # Safety
 * `count` must be a live handle from this library and `out` a writable pointer.
 */
enum PathhomStatus pathhom_count_to_string(const struct PathhomCount *count, char **out);

/**
 * Writes `count` to `out` if it fits in 64 bits; `SIZE_LIMIT` otherwise.
 *
 * # Safety
 * `count` must be a live handle from this library and `out` a writable pointer.
 */
enum PathhomStatus pathhom_count_to_u64(const struct PathhomCount *count, uint64_t *out);

/**
 * Releases a count handle. Null is ignored.
 *
 * # Safety
 * `count` must be null or a handle from this library that has not been freed.
 */
void pathhom_count_free(struct PathhomCount *count);

/**
 * Epispectrum of `P_n`, `n >= 2`.
 */
enum PathhomStatus pathhom_epispectrum(uint32_t n, struct PathhomSpectrum **out);

/**
 * Number of entries, `n - 1`. Zero for a null handle.
 *
 * # Safety
 * `spectrum` must be null or a live handle from this library.
 */
size_t pathhom_spectrum_len(const struct PathhomSpectrum *spectrum);

/**
 * Entry `l_k(n)` for `1 <= k <= n - 1`, as a new count handle.
 *
 * # Safety
 * `spectrum` must be a live handle from this library and `out` a writable pointer.
 */
enum PathhomStatus pathhom_spectrum_get(const struct PathhomSpectrum *spectrum,
                                        size_t k,
                                        struct PathhomCount **out);

/**
 * Releases an epispectrum handle. Null is ignored.
 *
 * # Safety
 * `spectrum` must be null or a handle from this library that has not been freed.
 */
void pathhom_spectrum_free(struct PathhomSpectrum *spectrum);

/**
 * E/N word of the homomorphism `images[0..len]` into `P_k` (`images[0]` must be 1).
 * Free the word with `pathhom_string_free`.
 *
 * # Safety
 * `images` must point to `len` readable values and `out_word` must be writable.
 */
enum PathhomStatus pathhom_encode(const uint32_t *images, size_t len, uint32_t k, char **out_word);

/**
 * Decodes an E/N word into images `f(1), ..., f(n)` in `P_k`.
 *
 * Writes `n` to `out_len`. If `cap < n` nothing is copied and
 * `BUFFER_TOO_SMALL` is returned, so the call can be repeated with a larger buffer.
 *
 * # Safety
 * `word` must be a NUL-terminated string, `out_images` must have `cap` writable slots and `out_len` must be writable.
 */
enum PathhomStatus pathhom_decode(const char *word,
                                  uint32_t k,
                                  uint32_t *out_images,
                                  size_t cap,
                                  size_t *out_len);

/**
 * The two block arrangements of a partition such as `"{1,3}{2}"`, written as
 * `"<first> <second>"`. Returns `INVALID` (with the reason in
 * `pathhom_last_error`) if the partition is not induced by an epimorphism.
 *
 * # Safety
 * `partition` must be a NUL-terminated string and `out` must be writable.
 */
enum PathhomStatus pathhom_arrange(const char *partition, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that has not been freed.
 */
void pathhom_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PATHHOM_H */
