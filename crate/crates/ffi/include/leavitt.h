#ifndef LEAVITT_H
#define LEAVITT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// `*out` value of [`leavitt_gk_dimension`] for infinite GK-dimension.
#define LEAVITT_GK_INFINITE -1

typedef enum LeavittStatus {
  LEAVITT_STATUS_OK = 0,
  LEAVITT_STATUS_NULL_POINTER = 1,
  LEAVITT_STATUS_INVALID_UTF8 = 2,
  LEAVITT_STATUS_PARSE = 3,
  LEAVITT_STATUS_INVALID_CHAR = 4,
  LEAVITT_STATUS_EMPTY_GRAPH = 5,
  LEAVITT_STATUS_DISCONNECTED = 6,
  LEAVITT_STATUS_LATTICE_BOUND = 7,
  LEAVITT_STATUS_INCONSISTENT = 8,
  LEAVITT_STATUS_PANIC = 9,
  LEAVITT_STATUS_OTHER = 10,
} LeavittStatus;

// An immutable parsed graph.
typedef struct LeavittGraph LeavittGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses the line-oriented text format (`vertex <id>`, `edge <id> <src> <dst>`).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LeavittStatus leavitt_graph_parse(const char *text, struct LeavittGraph **out);

// Parses `{"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}]}`.
//
// # Safety
// As [`leavitt_graph_parse`].
enum LeavittStatus leavitt_graph_parse_json(const char *text, struct LeavittGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must come from a parse call and not be freed twice.
void leavitt_graph_free(struct LeavittGraph *g);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_graph_vertex_count(const struct LeavittGraph *g, size_t *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_graph_edge_count(const struct LeavittGraph *g, size_t *out);

// GK-dimension, or [`LEAVITT_GK_INFINITE`].
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_gk_dimension(const struct LeavittGraph *g, int32_t *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_is_simple(const struct LeavittGraph *g, bool *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_is_graded_simple(const struct LeavittGraph *g, bool *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_lie_solvable(const struct LeavittGraph *g, uint64_t p, bool *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_lie_nilpotent(const struct LeavittGraph *g, bool *out);

// Simplicity of the commutator Lie algebra; connected graphs only.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_lie_simple(const struct LeavittGraph *g, uint64_t p, bool *out);

// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_one_in_commutator(const struct LeavittGraph *g, uint64_t p, bool *out);

// The full classification report as pretty JSON, identical to the CLI's.
//
// # Safety
// `g` must be a live handle; `id` a NUL-terminated string; `out` writable.
enum LeavittStatus leavitt_classify_json(const struct LeavittGraph *g,
                                         const char *id,
                                         uint64_t p,
                                         char **out);

// The hereditary saturated lattice as JSON. `exhaustive` forces the
// brute-force enumeration; otherwise the size bound picks the method.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_lattice_json(const struct LeavittGraph *g, bool exhaustive, char **out);

// The composition series as `{"chain":[...],"types":[...]}`.
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum LeavittStatus leavitt_series_json(const struct LeavittGraph *g, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void leavitt_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *leavitt_last_error(void);

// Library version, statically allocated.
const char *leavitt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEAVITT_H */
