#ifndef OM_H
#define OM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OmStatus {
  OM_STATUS_OK = 0,
  OM_STATUS_USAGE = 1,
  OM_STATUS_PARSE = 2,
  OM_STATUS_REALIZATION = 3,
  OM_STATUS_DELETION = 4,
  OM_STATUS_NO_DELETABLE_ELEMENT = 5,
  OM_STATUS_CONTRACTION = 6,
  OM_STATUS_SIZE_GUARD = 7,
  OM_STATUS_INVALID = 8,
  OM_STATUS_CONSTRUCTION = 9,
  OM_STATUS_INTERNAL = 10,
  OM_STATUS_IO = 11,
  OM_STATUS_NULL_POINTER = 12,
  OM_STATUS_UTF8 = 13,
  OM_STATUS_PANIC = 14,
} OmStatus;

/**
 * Opaque chirotope handle.
 */
typedef struct OmChirotope OmChirotope;

/**
 * Opaque hyperline sequence handle.
 */
typedef struct OmHls OmHls;

typedef struct OmFaceCensus {
  size_t vertices;
  size_t edges;
  size_t faces;
  int64_t euler;
} OmFaceCensus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next `om_` call on the same thread.
 */
const char *om_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void om_string_free(char *s);

/**
 * Parses a chirotope file (`"r n\n<body>\n"`) and checks the axioms.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum OmStatus om_chirotope_parse(const char *text, struct OmChirotope **out);

/**
 * Chirotope of a CSV vector configuration (integers or `p/q`).
 *
 * # Safety
 * `csv` must be a NUL-terminated string; `out` must be writable.
 */
enum OmStatus om_chirotope_from_vectors(const char *csv, struct OmChirotope **out);

/**
 * Checks the chirotope axioms on a chirotope file without requiring them
 * to hold. `*valid` is set and `*report` receives the report text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `valid` and `report` writable.
 */
enum OmStatus om_sign_map_check(const char *text, bool *valid, char **report);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_chirotope_serialize(const struct OmChirotope *h, char **out);

/**
 * Rank, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t om_chirotope_rank(const struct OmChirotope *h);

/**
 * Ground set size, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t om_chirotope_size(const struct OmChirotope *h);

/**
 * Writes the original element id of each position into `labels`, which
 * must have room for `om_chirotope_size(h)` entries.
 *
 * # Safety
 * `h` must be a live handle; `labels` must be writable for that many ids.
 */
enum OmStatus om_chirotope_labels(const struct OmChirotope *h, uint32_t *labels);

/**
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void om_chirotope_free(struct OmChirotope *h);

/**
 * Deletes the listed element ids. Fails with `Invalid` if the result is
 * not a chirotope.
 *
 * # Safety
 * `h` must be a live handle; `ids_` must point to `len` ids.
 */
enum OmStatus om_chirotope_delete(const struct OmChirotope *h,
                                  const uint32_t *ids_,
                                  size_t len,
                                  struct OmChirotope **out);

/**
 * Smallest element whose deletion keeps a chirotope of the same rank.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_chirotope_find_deletable(const struct OmChirotope *h, uint32_t *out);

/**
 * # Safety
 * `h` must be a live handle; `ids_` must point to `len` ids.
 */
enum OmStatus om_chirotope_contract(const struct OmChirotope *h,
                                    const uint32_t *ids_,
                                    size_t len,
                                    struct OmChirotope **out);

/**
 * Vertex, edge and face counts of a rank-3 chirotope.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_chirotope_face_census(const struct OmChirotope *h, struct OmFaceCensus *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_chirotope_to_hls(const struct OmChirotope *h, struct OmHls **out);

/**
 * Parses hyperline JSON. The axioms are not checked; see `om_hls_check`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum OmStatus om_hls_parse(const char *json, struct OmHls **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_hls_serialize(const struct OmHls *h, char **out);

/**
 * # Safety
 * `h` must be a live handle; `valid` and `report` must be writable.
 */
enum OmStatus om_hls_check(const struct OmHls *h, bool *valid, char **report);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum OmStatus om_hls_to_chirotope(const struct OmHls *h, struct OmChirotope **out);

/**
 * # Safety
 * `h` must be null or a handle not yet freed.
 */
void om_hls_free(struct OmHls *h);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OM_H */
