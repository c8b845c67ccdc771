#ifndef ROWMOTION_H
#define ROWMOTION_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Actions on order ideals.
 */
typedef enum RmAction {
  RM_ACTION_ROW = 0,
  RM_ACTION_ROW_INVERSE = 1,
  RM_ACTION_PRO = 2,
  RM_ACTION_GYRATION = 3,
  /**
   * Superpromotion; ASM posets only.
   */
  RM_ACTION_SPRO = 4,
} RmAction;

/**
 * Result code of every fallible call.
 */
typedef enum RmStatus {
  RM_STATUS_OK = 0,
  RM_STATUS_NULL_ARGUMENT = 1,
  RM_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The request is well formed but the family does not support it.
   */
  RM_STATUS_UNSUPPORTED = 3,
  /**
   * State space over the cap, or a value too wide for the output type.
   */
  RM_STATUS_RESOURCE_LIMIT = 4,
  RM_STATUS_BUFFER_TOO_SMALL = 5,
  RM_STATUS_INDEX_OUT_OF_RANGE = 6,
  RM_STATUS_INTERNAL = 7,
} RmStatus;

/**
 * A parsed family together with its poset.
 */
typedef struct RmFamily RmFamily;

/**
 * Orbit decomposition of the ideals of a family.
 */
typedef struct RmOrbits RmOrbits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *rm_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *rm_version(void);

/**
 * Parses a family such as `product:2,3,4` or `asm:5` and builds its poset.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum RmStatus rm_family_parse(const char *spec, struct RmFamily **out);

/**
 * Releases a family. Null is ignored.
 *
 * # Safety
 * `family` must come from [`rm_family_parse`] and not be freed twice.
 */
void rm_family_free(struct RmFamily *family);

/**
 * Number of poset elements.
 *
 * # Safety
 * `family` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_family_element_count(const struct RmFamily *family, size_t *out);

/**
 * Number of order ideals; fails with `ResourceLimit` above `cap`.
 *
 * # Safety
 * `family` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_family_ideal_count(const struct RmFamily *family, size_t cap, size_t *out);

/**
 * Decomposes the ideals of `family` into orbits of `action`.
 *
 * `threads` of 0 is treated as 1. The result does not depend on it.
 *
 * # Safety
 * `family` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_orbits_compute(const struct RmFamily *family,
                                enum RmAction action,
                                size_t cap,
                                size_t threads,
                                struct RmOrbits **out);

/**
 * Releases an orbit table. Null is ignored.
 *
 * # Safety
 * `orbits` must come from [`rm_orbits_compute`] and not be freed twice.
 */
void rm_orbits_free(struct RmOrbits *orbits);

/**
 * Number of orbits.
 *
 * # Safety
 * `orbits` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_orbits_count(const struct RmOrbits *orbits, size_t *out);

/**
 * Copies the orbit sizes into `buf`, in canonical orbit order.
 *
 * `needed` always receives the orbit count, so a first call with `len == 0`
 * sizes the buffer. Returns `BufferTooSmall` when `len` is short.
 *
 * # Safety
 * `buf` must hold `len` writable values (or be null when `len == 0`);
 * `needed` must be writable.
 */
enum RmStatus rm_orbits_sizes(const struct RmOrbits *orbits,
                              size_t *buf,
                              size_t len,
                              size_t *needed);

/**
 * Order of the action, the lcm of the orbit sizes.
 *
 * # Safety
 * `orbits` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_orbits_order(const struct RmOrbits *orbits, uint64_t *out);

/**
 * Representative of orbit `index` as a string of `0`/`1`, one per element.
 * Free the result with [`rm_string_free`].
 *
 * # Safety
 * `orbits` must be a live handle; `out` must be writable.
 */
enum RmStatus rm_orbits_representative(const struct RmOrbits *orbits, size_t index, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void rm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROWMOTION_H */
