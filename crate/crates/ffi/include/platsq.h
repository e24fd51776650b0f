/* C interface to the platsq library. Generated by cbindgen; do not edit. */

#ifndef PLATSQ_H
#define PLATSQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum {
  /**
   * Success.
   */
  PLATSQ_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  PLATSQ_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  PLATSQ_STATUS_INVALID_UTF8 = 2,
  /**
   * JSON input could not be parsed.
   */
  PLATSQ_STATUS_PARSE_ERROR = 3,
  /**
   * Arguments were structurally valid but out of range or inconsistent.
   */
  PLATSQ_STATUS_INVALID_INPUT = 4,
  /**
   * Quandle tables violate the quandle or good-involution axioms.
   */
  PLATSQ_STATUS_VALIDATION_FAILED = 5,
  /**
   * The requested search exceeds the assignment ceiling.
   */
  PLATSQ_STATUS_CEILING_EXCEEDED = 6,
  /**
   * The operation is only defined for genuine systems.
   */
  PLATSQ_STATUS_NOT_GENUINE = 7,
} PlatsqStatus;

/**
 * Opaque handle to a braid system.
 */
typedef struct PlatsqBraidSystem PlatsqBraidSystem;

/**
 * Opaque handle to a validated finite symmetric quandle.
 */
typedef struct PlatsqQuandle PlatsqQuandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a braid system from its JSON encoding
 * `{ "degree": n, "entries": [ { "conjugator": [..], "band": k, "sign": ±1 } ] }`.
 *
 * # Safety
 * `json` must point to a NUL-terminated string. On success `*out` receives
 * a handle that must be released with [`platsq_system_free`].
 */
PlatsqStatus platsq_system_from_json(const char *json, PlatsqBraidSystem **out);

/**
 * Builds the twisted family system b(m,p) with `g` extra handle pairs
 * (degree `2m`; requires `m >= 2`, `p >= 1`).
 *
 * # Safety
 * On success `*out` receives a handle that must be released with
 * [`platsq_system_free`].
 */
PlatsqStatus platsq_system_family(size_t m, size_t p, size_t g, PlatsqBraidSystem **out);

/**
 * Releases a braid system handle. Passing null is a no-op.
 *
 * # Safety
 * `system` must be a handle returned by this library, not yet freed.
 */
void platsq_system_free(PlatsqBraidSystem *system);

/**
 * Serializes a braid system back to JSON.
 *
 * # Safety
 * `system` must be a live handle. On success `*out` receives a string that
 * must be released with [`platsq_string_free`].
 */
PlatsqStatus platsq_system_to_json(const PlatsqBraidSystem *system, char **out);

/**
 * Writes the braid degree of the system.
 *
 * # Safety
 * `system` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_system_degree(const PlatsqBraidSystem *system, size_t *out);

/**
 * Writes the number of branch-point entries.
 *
 * # Safety
 * `system` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_system_entry_count(const PlatsqBraidSystem *system, size_t *out);

/**
 * Writes `true` iff the boundary braid is trivial (the system presents a
 * 2-dimensional braid).
 *
 * # Safety
 * `system` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_system_is_genuine(const PlatsqBraidSystem *system, bool *out);

/**
 * Writes the Euler characteristic of the plat closure (`degree - entries`;
 * requires an even degree).
 *
 * # Safety
 * `system` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_system_euler_characteristic(const PlatsqBraidSystem *system, int64_t *out);

/**
 * Writes the number of connected components of the plat closure. Only
 * defined for genuine systems of even degree.
 *
 * # Safety
 * `system` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_system_component_count(const PlatsqBraidSystem *system, size_t *out);

/**
 * Applies one slide move at position `j` (`1 <= j <= entries - 1`),
 * forward if `forward` is true, and returns the transformed system as a
 * new handle.
 *
 * # Safety
 * `system` must be a live handle. On success `*out` receives a handle that
 * must be released with [`platsq_system_free`].
 */
PlatsqStatus platsq_system_slide(const PlatsqBraidSystem *system,
                                 size_t j,
                                 bool forward,
                                 PlatsqBraidSystem **out);

/**
 * Parses and validates a quandle from its JSON encoding
 * `{ "size": n, "op": [[..]], "rho": [..] }` (0-based tables). Axiom
 * violations yield `PLATSQ_STATUS_VALIDATION_FAILED`.
 *
 * # Safety
 * `json` must point to a NUL-terminated string. On success `*out` receives
 * a handle that must be released with [`platsq_quandle_free`].
 */
PlatsqStatus platsq_quandle_from_json(const char *json, PlatsqQuandle **out);

/**
 * Builds the dihedral quandle R_p with the identity involution
 * (requires `p >= 1`).
 *
 * # Safety
 * On success `*out` receives a handle that must be released with
 * [`platsq_quandle_free`].
 */
PlatsqStatus platsq_quandle_dihedral(size_t p, PlatsqQuandle **out);

/**
 * Releases a quandle handle. Passing null is a no-op.
 *
 * # Safety
 * `quandle` must be a handle returned by this library, not yet freed.
 */
void platsq_quandle_free(PlatsqQuandle *quandle);

/**
 * Writes the order of the quandle.
 *
 * # Safety
 * `quandle` must be a live handle and `out` a valid pointer.
 */
PlatsqStatus platsq_quandle_size(const PlatsqQuandle *quandle, size_t *out);

/**
 * Counts the colorings of the system's plat closure by the quandle.
 * `ceiling` bounds the number of candidate assignments; pass 0 for the
 * default of 10^9. Searches above the ceiling are refused with
 * `PLATSQ_STATUS_CEILING_EXCEEDED`, never truncated.
 *
 * # Safety
 * `system` and `quandle` must be live handles and `out` a valid pointer.
 */
PlatsqStatus platsq_coloring_count(const PlatsqBraidSystem *system,
                                   const PlatsqQuandle *quandle,
                                   uint64_t ceiling,
                                   uint64_t *out);

/**
 * Writes `ceil(log_order(count))`, the plat-index lower bound certified by
 * a coloring count. Requires `count >= 1` and `order >= 2`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PlatsqStatus platsq_plat_lower_bound(uint64_t count, uint64_t order, uint32_t *out);

/**
 * Emits the plat-form symmetric quandle presentation of the system as
 * text, or the associated group presentation if `as_group` is true.
 * Requires an even degree.
 *
 * # Safety
 * `system` must be a live handle. On success `*out` receives a string that
 * must be released with [`platsq_string_free`].
 */
PlatsqStatus platsq_presentation_text(const PlatsqBraidSystem *system, bool as_group, char **out);

/**
 * Releases a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed.
 */
void platsq_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLATSQ_H */
