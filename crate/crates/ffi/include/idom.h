#ifndef IDOM_H
#define IDOM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IdomMethod {
  IDOM_METHOD_AUTO = 0,
  IDOM_METHOD_DAG = 1,
  IDOM_METHOD_EVEN = 2,
  IDOM_METHOD_BIPARTITE = 3,
  IDOM_METHOD_LAYERS = 4,
  IDOM_METHOD_EXACT = 5,
  IDOM_METHOD_BRUTE = 6,
} IdomMethod;

// Result codes. Zero is success.
typedef enum IdomStatus {
  IDOM_STATUS_OK = 0,
  IDOM_STATUS_NULL_POINTER = 1,
  IDOM_STATUS_INVALID_UTF8 = 2,
  IDOM_STATUS_PARSE = 3,
  IDOM_STATUS_INVALID_ARGUMENT = 4,
  // The graph does not satisfy the chosen method's precondition.
  IDOM_STATUS_PRECONDITION = 5,
  // Size guard or work budget exceeded.
  IDOM_STATUS_RESOURCE_LIMIT = 6,
  IDOM_STATUS_CONSTRUCTION = 7,
  IDOM_STATUS_INTERNAL = 8,
} IdomStatus;

// Opaque directed graph.
typedef struct IdomGraph IdomGraph;

// Opaque solver outcome.
typedef struct IdomSolution IdomSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next failing call on the same thread; do not free.
const char *idom_last_error(void);

// Parses an arc list (`n m` header, then `m` lines `u v`).
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum IdomStatus idom_graph_parse(const char *text, struct IdomGraph **out);

// Builds a graph on `n` vertices from `m` arcs `tails[i] -> heads[i]`.
// Duplicate arcs are merged.
//
// # Safety
// `tails` and `heads` must each point to `m` readable values (either may
// be NULL when `m == 0`); `out` must be writable.
enum IdomStatus idom_graph_from_arcs(size_t n,
                                     const size_t *tails,
                                     const size_t *heads,
                                     size_t m,
                                     struct IdomGraph **out);

// Directed cycle on `n >= 2` vertices.
//
// # Safety
// `out` must be writable.
enum IdomStatus idom_gen_cycle(size_t n, struct IdomGraph **out);

// The layered family with period `h` (odd, >= 3) over a `k`-set.
// `with_ids` selects the variant that has an IDS; `figure_rules` selects
// the alternative first arc rule.
//
// # Safety
// `out` must be writable.
enum IdomStatus idom_gen_dhk(size_t h,
                             size_t k,
                             bool with_ids,
                             bool figure_rules,
                             struct IdomGraph **out);

// # Safety
// `graph` must be NULL or a handle from this library not yet freed.
void idom_graph_free(struct IdomGraph *graph);

// Zero for NULL.
//
// # Safety
// `graph` must be NULL or a live handle.
size_t idom_graph_vertex_count(const struct IdomGraph *graph);

// Zero for NULL.
//
// # Safety
// `graph` must be NULL or a live handle.
size_t idom_graph_arc_count(const struct IdomGraph *graph);

// gcd of cycle lengths; 0 for acyclic graphs.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum IdomStatus idom_graph_period(const struct IdomGraph *graph, size_t *out);

// Normalized arc-list text. Release with [`idom_string_free`].
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum IdomStatus idom_graph_to_arc_list(const struct IdomGraph *graph, char **out);

// # Safety
// `s` must be NULL or a string returned by this library not yet freed.
void idom_string_free(char *s);

// Runs a solver. `budget == 0` means the default work budget and
// `threads == 0` means one thread.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum IdomStatus idom_solve(const struct IdomGraph *graph,
                           enum IdomMethod method,
                           uint64_t budget,
                           size_t threads,
                           struct IdomSolution **out);

// # Safety
// `solution` must be NULL or a handle from [`idom_solve`] not yet freed.
void idom_solution_free(struct IdomSolution *solution);

// True when an IDS was found. False for NULL.
//
// # Safety
// `solution` must be NULL or a live handle.
bool idom_solution_found(const struct IdomSolution *solution);

// Number of vertices in the found set (0 when none was found).
//
// # Safety
// `solution` must be NULL or a live handle.
size_t idom_solution_size(const struct IdomSolution *solution);

// Copies up to `capacity` vertex ids, ascending, into `buffer` and returns
// the full set size.
//
// # Safety
// `solution` must be NULL or a live handle; `buffer` must have room for
// `capacity` values (it may be NULL when `capacity == 0`).
size_t idom_solution_vertices(const struct IdomSolution *solution, size_t *buffer, size_t capacity);

// Layer seeds tried by the search.
//
// # Safety
// `solution` must be NULL or a live handle.
uint64_t idom_solution_seeds_explored(const struct IdomSolution *solution);

// Checks whether `vertices[0..len]` is independent and dominating.
// Either output pointer may be NULL.
//
// # Safety
// `graph` must be a live handle and `vertices` must point to `len`
// readable values (or be NULL when `len == 0`).
enum IdomStatus idom_verify(const struct IdomGraph *graph,
                            const size_t *vertices,
                            size_t len,
                            bool *independent,
                            bool *dominating);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* IDOM_H */
