#ifndef ABMOD_H
#define ABMOD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbmodStatus {
  ABMOD_STATUS_OK = 0,
  ABMOD_STATUS_NULL_POINTER = 1,
  ABMOD_STATUS_INVALID_ARGUMENT = 2,
  ABMOD_STATUS_PARSE_ERROR = 3,
  ABMOD_STATUS_BUFFER_TOO_SMALL = 4,
  ABMOD_STATUS_PANIC = 5,
} AbmodStatus;

/**
 * A list of vertex sets.
 */
typedef struct AbmodFamily AbmodFamily;

/**
 * A graph with its vertex labels.
 */
typedef struct AbmodGraph AbmodGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *abmod_last_error(void);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m` ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable ids (or be NULL when `m == 0`) and
 * `out` must be writable.
 */
enum AbmodStatus abmod_graph_new(size_t n,
                                 const uint32_t *edges,
                                 size_t m,
                                 struct AbmodGraph **out);

/**
 * Parses a NUL-terminated `.g` document.
 *
 * # Safety
 * `text` must be a valid C string and `out` writable.
 */
enum AbmodStatus abmod_graph_parse(const char *text, struct AbmodGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. NULL is a no-op.
 */
void abmod_graph_free(struct AbmodGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t abmod_graph_vertex_count(const struct AbmodGraph *g);

/**
 * # Safety
 * `g` must be a live handle, `ids` must hold `len` ids and `out` be writable.
 */
enum AbmodStatus abmod_is_module(const struct AbmodGraph *g,
                                 const uint32_t *ids,
                                 size_t len,
                                 uint32_t alpha,
                                 uint32_t beta,
                                 bool *out);

/**
 * The smallest module containing the given set.
 *
 * # Safety
 * `g` must be a live handle, `ids` must hold `len` ids, `out` must have room
 * for `capacity` ids and `out_len` be writable.
 */
enum AbmodStatus abmod_closure(const struct AbmodGraph *g,
                               const uint32_t *ids,
                               size_t len,
                               uint32_t alpha,
                               uint32_t beta,
                               uint32_t *out,
                               size_t capacity,
                               size_t *out_len);

/**
 * Inclusion-minimal non-trivial modules.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AbmodStatus abmod_minimal_modules(const struct AbmodGraph *g,
                                       uint32_t alpha,
                                       uint32_t beta,
                                       struct AbmodFamily **out);

/**
 * Number of members, or 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live family handle.
 */
size_t abmod_family_len(const struct AbmodFamily *f);

/**
 * Copies member `index` into `out`.
 *
 * # Safety
 * `f` must be a live handle, `out` must have room for `capacity` ids and
 * `out_len` be writable.
 */
enum AbmodStatus abmod_family_get(const struct AbmodFamily *f,
                                  size_t index,
                                  uint32_t *out,
                                  size_t capacity,
                                  size_t *out_len);

/**
 * # Safety
 * `f` must come from this library and not be used afterwards. NULL is a no-op.
 */
void abmod_family_free(struct AbmodFamily *f);

/**
 * Whether the graph has only trivial modules. Small (degenerate) graphs count
 * as prime.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AbmodStatus abmod_is_prime(const struct AbmodGraph *g,
                                uint32_t alpha,
                                uint32_t beta,
                                bool *out);

/**
 * The decomposition tree as a JSON string, freed with `abmod_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AbmodStatus abmod_tree_json(const struct AbmodGraph *g,
                                 uint32_t alpha,
                                 uint32_t beta,
                                 char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. NULL is a no-op.
 */
void abmod_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABMOD_H */
