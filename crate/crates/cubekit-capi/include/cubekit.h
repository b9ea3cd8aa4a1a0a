/* C interface for cubekit; generated from crates/cubekit-capi. */

#ifndef CUBEKIT_H
#define CUBEKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum CubekitStatus {
  CUBEKIT_STATUS_OK = 0,
  CUBEKIT_STATUS_NULL_ARGUMENT = 1,
  CUBEKIT_STATUS_INVALID_UTF8 = 2,
  CUBEKIT_STATUS_PARSE = 3,
  CUBEKIT_STATUS_NOT_PARTIAL_CUBE = 4,
  CUBEKIT_STATUS_BOUND_EXCEEDED = 5,
  CUBEKIT_STATUS_PANIC = 6,
} CubekitStatus;

/**
 * Shape of a classify verdict.
 */
typedef enum CubekitOutcome {
  CUBEKIT_OUTCOME_HYPERCUBE = 0,
  CUBEKIT_OUTCOME_DOUBLED_ODD = 1,
  CUBEKIT_OUTCOME_EVEN_CYCLE = 2,
  CUBEKIT_OUTCOME_EXCLUDED = 3,
} CubekitOutcome;

/**
 * Why a graph fell outside the three families; `None` accompanies a
 * positive outcome.
 */
typedef enum CubekitExclusion {
  CUBEKIT_EXCLUSION_NONE = 0,
  CUBEKIT_EXCLUSION_NOT_PARTIAL_CUBE = 1,
  CUBEKIT_EXCLUSION_TRIVIAL_K1K2 = 2,
  CUBEKIT_EXCLUSION_NOT_REGULAR = 3,
  CUBEKIT_EXCLUSION_NO_CYCLES = 4,
  CUBEKIT_EXCLUSION_MIXED_CYCLE_LENGTHS = 5,
} CubekitExclusion;

/**
 * Opaque graph handle. Create with a constructor, release with
 * `cubekit_graph_free`.
 */
typedef struct CubekitGraph CubekitGraph;

/**
 * Classification verdict. `parameter` is k for HYPERCUBE and DOUBLED_ODD
 * and n for EVEN_CYCLE (the cycle has 2n vertices); 0 when excluded.
 * Measurements that do not apply are -1.
 */
typedef struct CubekitClassification {
  enum CubekitOutcome outcome;
  enum CubekitExclusion exclusion;
  uint32_t parameter;
  int64_t convex_cycle_length;
  int64_t degree;
  int64_t isometric_dimension;
  bool certified;
} CubekitClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph from `edge_count` endpoint pairs laid out as
 * u0,v0,u1,v1,... over `vertex_count` vertices.
 */
enum CubekitStatus cubekit_graph_from_edges(const uint32_t *endpoints,
                                            size_t edge_count,
                                            uint32_t vertex_count,
                                            struct CubekitGraph **out);

/**
 * Parses one graph6 line (optionally with the `>>graph6<<` header).
 */
enum CubekitStatus cubekit_graph_from_graph6(const char *text, struct CubekitGraph **out);

/**
 * Builds a family graph from a spec such as "Q:4", "DO:3", "C:10",
 * "GRID:3x4" or "PROD(Q:2,C:6)".
 */
enum CubekitStatus cubekit_graph_from_family(const char *spec, struct CubekitGraph **out);

/**
 * Releases a graph handle. Passing null is a no-op.
 */
void cubekit_graph_free(struct CubekitGraph *graph);

/**
 * Number of vertices; 0 for a null handle.
 */
size_t cubekit_vertex_count(const struct CubekitGraph *graph);

/**
 * Number of edges; 0 for a null handle.
 */
size_t cubekit_edge_count(const struct CubekitGraph *graph);

/**
 * Length of a shortest cycle, or -1 when the graph is acyclic or null.
 */
int64_t cubekit_girth(const struct CubekitGraph *graph);

/**
 * Writes whether the graph is a partial cube into `out`.
 */
enum CubekitStatus cubekit_is_partial_cube(const struct CubekitGraph *graph, bool *out);

/**
 * Writes the number of Djokovic-Winkler classes into `out`; fails with
 * NOT_PARTIAL_CUBE (see `cubekit_last_error`) otherwise.
 */
enum CubekitStatus cubekit_isometric_dimension(const struct CubekitGraph *graph, size_t *out);

/**
 * Classifies the graph by its uniform convex cycle length. With `certify`
 * set, DOUBLED_ODD and EVEN_CYCLE verdicts carry an isomorphism check and
 * graphs above the size bound fail with BOUND_EXCEEDED.
 */
enum CubekitStatus cubekit_classify(const struct CubekitGraph *graph,
                                    bool certify,
                                    struct CubekitClassification *out);

/**
 * Recognition report as a JSON string; free with `cubekit_string_free`.
 */
enum CubekitStatus cubekit_recognize_json(const struct CubekitGraph *graph, char **out);

/**
 * Classification report as a JSON string; free with `cubekit_string_free`.
 */
enum CubekitStatus cubekit_classify_json(const struct CubekitGraph *graph, char **out);

/**
 * Class-chain report (median, almost-median, tiled, semi-median) as a
 * JSON string; free with `cubekit_string_free`.
 */
enum CubekitStatus cubekit_classes_json(const struct CubekitGraph *graph, char **out);

/**
 * Releases a string returned by a `_json` function. Null is a no-op.
 */
void cubekit_string_free(char *s);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *cubekit_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBEKIT_H */
