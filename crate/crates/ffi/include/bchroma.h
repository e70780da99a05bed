#ifndef BCHROMA_H
#define BCHROMA_H

/* Generated by cbindgen from the bchroma-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes for every fallible call.
 */
typedef enum BchromaStatus {
  BCHROMA_STATUS_OK = 0,
  /*
   A pointer argument was null.
   */
  BCHROMA_STATUS_NULL_POINTER = 1,
  /*
   Arguments were structurally invalid (range, encoding, size guard).
   */
  BCHROMA_STATUS_INVALID_ARGUMENT = 2,
  /*
   The input file did not parse.
   */
  BCHROMA_STATUS_PARSE_ERROR = 3,
  /*
   The solver gave up before proving a value exact.
   */
  BCHROMA_STATUS_INCONCLUSIVE = 4,
  /*
   The operation needs a regular graph.
   */
  BCHROMA_STATUS_NOT_REGULAR = 5,
  /*
   The constructive procedure did not reach its goal.
   */
  BCHROMA_STATUS_PROCEDURE_FAILED = 6,
} BchromaStatus;

/*
 Opaque graph handle.
 */
typedef struct BchromaGraph BchromaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the most recent failure on this thread, or null.
 The pointer stays valid until the next failing call on the thread.
 */
const char *bchroma_last_error(void);

/*
 Frees a string returned by this library. Null is ignored.

 # Safety
 `s` must come from a bchroma function that documents this free call,
 and must not be used afterwards.
 */
void bchroma_string_free(char *s);

/*
 Frees a graph handle. Null is ignored.

 # Safety
 `g` must be a handle produced by this library, freed at most once.
 */
void bchroma_graph_free(struct BchromaGraph *g);

/*
 Loads a graph from a file. `format` is "dimacs", "edgelist", or null
 to pick by extension.

 # Safety
 `path` (and `format` when non-null) must be valid C strings; `out`
 must be a valid pointer.
 */
enum BchromaStatus bchroma_graph_from_file(const char *path,
                                           const char *format,
                                           struct BchromaGraph **out);

/*
 Builds one of the embedded named graphs (petersen, heawood, mcgee,
 robertson, hoffman_singleton).

 # Safety
 `name` must be a valid C string; `out` must be a valid pointer.
 */
enum BchromaStatus bchroma_graph_named(const char *name, struct BchromaGraph **out);

/*
 Builds a graph from an edge array `[u0, v0, u1, v1, ...]` of
 `2 * edge_count` vertex indices.

 # Safety
 `edges` must point to `2 * edge_count` readable values (or be null
 with `edge_count == 0`); `out` must be a valid pointer.
 */
enum BchromaStatus bchroma_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t edge_count,
                                            struct BchromaGraph **out);

/*
 Seeded random d-regular graph via the pairing model.

 # Safety
 `out` must be a valid pointer.
 */
enum BchromaStatus bchroma_graph_random_regular(size_t n,
                                                size_t d,
                                                uint64_t seed,
                                                struct BchromaGraph **out);

/*
 Point-line incidence graph of the projective plane of prime order q.

 # Safety
 `out` must be a valid pointer.
 */
enum BchromaStatus bchroma_graph_projective(size_t q, struct BchromaGraph **out);

/*
 Number of vertices; 0 for a null handle.

 # Safety
 `g` must be a live handle or null.
 */
size_t bchroma_graph_vertex_count(const struct BchromaGraph *g);

/*
 Number of edges; 0 for a null handle.

 # Safety
 `g` must be a live handle or null.
 */
size_t bchroma_graph_edge_count(const struct BchromaGraph *g);

/*
 Writes the degree of `v`.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_graph_degree(const struct BchromaGraph *g, size_t v, size_t *out);

/*
 Writes the common degree, or -1 when the graph is not regular.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_graph_regular_degree(const struct BchromaGraph *g, int64_t *out);

/*
 Writes the girth, or -1 for a forest.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_graph_girth(const struct BchromaGraph *g, int64_t *out);

/*
 Writes the diameter, or -1 when the graph is disconnected.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_graph_diameter(const struct BchromaGraph *g, int64_t *out);

/*
 Exact chromatic number. Zero limits mean the defaults.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_chromatic_number(const struct BchromaGraph *g,
                                            uint64_t node_limit,
                                            uint64_t time_limit_ms,
                                            uint64_t *out);

/*
 Exact b-chromatic number. Zero limits mean the defaults.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_b_number(const struct BchromaGraph *g,
                                    uint64_t node_limit,
                                    uint64_t time_limit_ms,
                                    uint64_t *out);

/*
 Exact dominant-color number f of a regular graph. Zero limits mean
 the defaults.

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_f_number(const struct BchromaGraph *g,
                                    uint64_t node_limit,
                                    uint64_t time_limit_ms,
                                    uint64_t *out);

/*
 JSON report with the structural signature and theorem hypothesis
 flags. Free with [`bchroma_string_free`].

 # Safety
 `g` must be a live handle; `out` a valid pointer.
 */
enum BchromaStatus bchroma_info_json(const struct BchromaGraph *g, char **out);

/*
 Runs a constructive procedure ("thm21", "thm22", "thm23", "ux",
 "thm31"); `center` below 0 picks the default. On success and on
 procedure failure alike, the full JSON report lands in `out` (free
 with [`bchroma_string_free`]); the status tells them apart.

 # Safety
 `g` must be a live handle; `procedure` a valid C string; `out` a
 valid pointer.
 */
enum BchromaStatus bchroma_construct_json(const struct BchromaGraph *g,
                                          const char *procedure,
                                          int64_t center,
                                          char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCHROMA_H */
