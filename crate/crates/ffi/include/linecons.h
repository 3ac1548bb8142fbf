#ifndef LINECONS_H
#define LINECONS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

/**
 * Result codes.
 */
typedef enum LcStatus {
  LC_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  LC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  LC_STATUS_INVALID_UTF8 = 2,
  /**
   * The JSON document was malformed or described an invalid graph.
   */
  LC_STATUS_INVALID_GRAPH = 3,
  /**
   * The simple-graph criterion was asked about a graph with parallel edges.
   */
  LC_STATUS_NOT_SIMPLE = 4,
  /**
   * The graph has too many circles for the brute-force oracle.
   */
  LC_STATUS_TOO_MANY_CIRCLES = 5,
  /**
   * The methods disagree with each other or produced an invalid witness.
   */
  LC_STATUS_DISAGREEMENT = 6,
  /**
   * An unexpected internal failure.
   */
  LC_STATUS_INTERNAL = 7,
} LcStatus;

/**
 * Decision procedures, in the order the CLI lists them.
 */
typedef enum LcMethod {
  LC_METHOD_CONDITION_I = 0,
  LC_METHOD_CONDITION_II = 1,
  LC_METHOD_CONDITION_III = 2,
  LC_METHOD_SIMPLE_CRITERION = 3,
  LC_METHOD_STRUCTURE = 4,
  LC_METHOD_ORACLE = 5,
} LcMethod;

/**
 * A signed multigraph.
 */
typedef struct LcGraph LcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph from a NUL-terminated JSON document and stores a new handle
 * in `*out`. Release it with [`lc_graph_free`].
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum LcStatus lc_graph_from_json(const char *json, struct LcGraph **out);

/**
 * Releases a graph handle. NULL is ignored.
 *
 * # Safety
 * `graph` must come from [`lc_graph_from_json`] and not be used afterwards.
 */
void lc_graph_free(struct LcGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LcStatus lc_graph_vertex_count(const struct LcGraph *graph, size_t *out);

/**
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum LcStatus lc_graph_edge_count(const struct LcGraph *graph, size_t *out);

/**
 * Decides line consistency with one method and stores the answer in
 * `*out_consistent`.
 *
 * # Safety
 * `graph` must be a live handle and `out_consistent` a valid pointer.
 */
enum LcStatus lc_check(const struct LcGraph *graph, enum LcMethod method, bool *out_consistent);

/**
 * Like [`lc_check`], but returns the whole verdict as JSON: the method, the
 * answer, the failed clause and a witness circle of the line graph.
 *
 * # Safety
 * `graph` must be a live handle and `out_json` a valid pointer.
 */
enum LcStatus lc_check_json(const struct LcGraph *graph, enum LcMethod method, char **out_json);

/**
 * Runs every method and the oracle. The JSON report is stored even when the
 * methods disagree, in which case the status is `LC_STATUS_DISAGREEMENT`.
 *
 * # Safety
 * `graph` must be a live handle and `out_json` a valid pointer.
 */
enum LcStatus lc_check_all(const struct LcGraph *graph, char **out_json);

/**
 * The classification of the negative subgraph's components, as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out_json` a valid pointer.
 */
enum LcStatus lc_decompose_json(const struct LcGraph *graph, char **out_json);

/**
 * The sign-marked line graph, as JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out_json` a valid pointer.
 */
enum LcStatus lc_line_graph_json(const struct LcGraph *graph, char **out_json);

/**
 * The graph in canonical JSON.
 *
 * # Safety
 * `graph` must be a live handle and `out_json` a valid pointer.
 */
enum LcStatus lc_graph_to_json(const struct LcGraph *graph, char **out_json);

/**
 * The graph in Graphviz DOT, with the negative-subgraph components as
 * clusters when `annotate` is true.
 *
 * # Safety
 * `graph` must be a live handle and `out_dot` a valid pointer.
 */
enum LcStatus lc_graph_to_dot(const struct LcGraph *graph, bool annotate, char **out_dot);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void lc_string_free(char *s);

/**
 * The message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *lc_last_error_message(void);

/**
 * The library version as a static C string.
 */
const char *lc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LINECONS_H */
