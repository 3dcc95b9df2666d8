#ifndef PALETTE_INDEX_H
#define PALETTE_INDEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum PaletteStatus {
  PALETTE_STATUS_OK = 0,
  PALETTE_STATUS_NULL_POINTER = 1,
  PALETTE_STATUS_INVALID_ARGUMENT = 2,
  PALETTE_STATUS_PRECONDITION_FAILED = 3,
  PALETTE_STATUS_BUDGET_EXCEEDED = 4,
  PALETTE_STATUS_IMPROPER = 5,
  // A verification suite ran and at least one case failed.
  PALETTE_STATUS_CHECK_FAILED = 6,
  PALETTE_STATUS_PANIC = 7,
} PaletteStatus;

// Opaque edge-coloring handle.
typedef struct PaletteColoring PaletteColoring;

// Opaque graph handle.
typedef struct PaletteGraph PaletteGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *palette_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
//
// `s` must come from this library and must not be used afterwards.
void palette_string_free(char *s);

// Builds a generator graph from a spec such as `"cycle:5"` or `"petersen"`.
//
// # Safety
//
// `spec` must be a NUL-terminated string; `out` must be writable.
enum PaletteStatus palette_graph_generate(const char *spec, struct PaletteGraph **out);

// Parses a graph from its JSON document.
//
// # Safety
//
// `json` must be a NUL-terminated string; `out` must be writable.
enum PaletteStatus palette_graph_from_json(const char *json, struct PaletteGraph **out);

// The Cartesian product `a □ b`.
//
// # Safety
//
// `a` and `b` must be live graph handles; `out` must be writable.
enum PaletteStatus palette_graph_product(const struct PaletteGraph *a,
                                         const struct PaletteGraph *b,
                                         struct PaletteGraph **out);

// Vertex and edge counts.
//
// # Safety
//
// `g` must be a live graph handle; the out-pointers must be writable.
enum PaletteStatus palette_graph_size(const struct PaletteGraph *g,
                                      uintptr_t *vertices,
                                      uintptr_t *edges);

// The graph as a JSON document.
//
// # Safety
//
// `g` must be a live graph handle; `out` must be writable.
enum PaletteStatus palette_graph_to_json(const struct PaletteGraph *g, char **out);

// Releases a graph handle. Null is ignored.
//
// # Safety
//
// `g` must come from this library and must not be used afterwards.
void palette_graph_free(struct PaletteGraph *g);

// The six-color, three-palette coloring of `C_s □ C_t` for odd `s >= t >= 3`.
//
// # Safety
//
// `out` must be writable.
enum PaletteStatus palette_torus_coloring(uintptr_t s, uintptr_t t, struct PaletteColoring **out);

// The matching reduction coloring of `C_s □ G` (or `P_s □ G` when
// `path_mode` is nonzero) for class-2 cubic `G`. `budget_nodes == 0` uses the
// default budget.
//
// # Safety
//
// `g` must be a live graph handle; `out` must be writable.
enum PaletteStatus palette_cubic_reduction(const struct PaletteGraph *g,
                                           uintptr_t s,
                                           int32_t path_mode,
                                           uint64_t budget_nodes,
                                           struct PaletteColoring **out);

// Number of distinct vertex palettes of a proper coloring.
//
// # Safety
//
// `f` must be a live coloring handle; `out` must be writable.
enum PaletteStatus palette_coloring_palette_count(const struct PaletteColoring *f, uintptr_t *out);

// Writes 1 if the coloring is proper, else 0.
//
// # Safety
//
// `f` must be a live coloring handle; `out` must be writable.
enum PaletteStatus palette_coloring_is_proper(const struct PaletteColoring *f, int32_t *out);

// The coloring as a JSON document.
//
// # Safety
//
// `f` must be a live coloring handle; `out` must be writable.
enum PaletteStatus palette_coloring_to_json(const struct PaletteColoring *f, char **out);

// The palette report of a proper coloring as JSON.
//
// # Safety
//
// `f` must be a live coloring handle; `out` must be writable.
enum PaletteStatus palette_coloring_palettes_json(const struct PaletteColoring *f, char **out);

// Releases a coloring handle. Null is ignored.
//
// # Safety
//
// `f` must come from this library and must not be used afterwards.
void palette_coloring_free(struct PaletteColoring *f);

// Palette index certificate. `max_palettes == 0` uses the default ceiling;
// `budget_nodes == 0` the default budget. `exact` receives 0 when the
// bounds did not meet, `upper` receives 0 when no witness was found.
//
// # Safety
//
// `g` must be a live graph handle; the out-pointers must be writable.
enum PaletteStatus palette_oracle_exact(const struct PaletteGraph *g,
                                        uintptr_t max_palettes,
                                        uint64_t budget_nodes,
                                        uintptr_t *lower,
                                        uintptr_t *upper,
                                        uintptr_t *exact);

// Certificate JSON for the palette index.
//
// # Safety
//
// `g` must be a live graph handle; `out` must be writable.
enum PaletteStatus palette_oracle_json(const struct PaletteGraph *g,
                                       uintptr_t max_palettes,
                                       uint64_t budget_nodes,
                                       char **out);

// Runs a verification suite by name with default parameters and writes the
// JSON report. Returns `CheckFailed` if a case failed and `BudgetExceeded`
// if a case was indeterminate; the report is written in both cases.
//
// # Safety
//
// `suite` must be a NUL-terminated string; `out` must be writable.
enum PaletteStatus palette_verify_suite(const char *suite, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PALETTE_INDEX_H */
