/* gridchroma: periodic h-hop colorings of infinite-grid sensor networks.
 *
 * C API over the C++ core. All functions return a gc_status code; results
 * come back through out-parameters. Handles are opaque and must be released
 * with their destroy function.
 */
#ifndef GRIDCHROMA_H
#define GRIDCHROMA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
    GC_OK = 0,
    GC_ERR_INVALID_ARG = 1,   /* bad flag/value (usage error) */
    GC_ERR_DOMAIN = 2,        /* precondition violated (e.g. VC2 with R <= sqrt2) */
    GC_ERR_INVALID_BASIS = 3, /* vectors do not yield a valid coloring */
    GC_ERR_OVERFLOW = 4,      /* 64-bit overflow detected */
    GC_ERR_INTERNAL = 5
} gc_status;

/* A problem instance (R, h). Owns the memoized hop field. */
typedef struct gc_problem gc_problem;

typedef enum gc_color_method { GC_NCC1 = 1, GC_NCC2 = 2 } gc_color_method;
typedef enum gc_verify_method { GC_VC_AUTO = 0, GC_VC1 = 1, GC_VC2 = 2 } gc_verify_method;
typedef enum gc_heuristic {
    GC_PRIORITY_LINE = 0,
    GC_PRIORITY_DIAGONAL = 1,
    GC_PRIORITY_CENTER = 2,
    GC_PRIORITY_RANDOM = 3
} gc_heuristic;

const char* gc_strerror(gc_status code);

/* Human-readable detail of the most recent error on this thread ("" if none). */
const char* gc_last_error(void);

/* range_decimal: decimal string >= 1, e.g. "2" or "1.5"; hops >= 1. */
gc_status gc_problem_create(const char* range_decimal, int hops, gc_problem** out);
void gc_problem_destroy(gc_problem* p);

/* -- optimal vector search ------------------------------------------------ */

typedef struct gc_solution {
    int64_t vectors[4];          /* x1, y1, x2, y2 (sign-normalized, det > 0) */
    int64_t num_colors;
    int64_t candidates_examined;
    int validity_method;         /* 1 = VC1, 2 = VC2 */
} gc_solution;

gc_status gc_solve(gc_problem* p, gc_solution* out);

/* -- validity ------------------------------------------------------------- */

/* *valid is 1/0; on invalid, witness receives a lattice point within h hops. */
gc_status gc_verify(gc_problem* p, const int64_t vectors[4], gc_verify_method method,
                    int* valid, int64_t witness[2]);

/* -- coloring ------------------------------------------------------------- */

/* colors: caller-allocated, width*height entries, row-major from origin. */
gc_status gc_color_window(gc_problem* p, const int64_t vectors[4], gc_color_method method,
                          int64_t origin_x, int64_t origin_y, int width, int height,
                          int32_t* colors);

/* Number of colors of the basis = |det|. */
gc_status gc_num_colors(const int64_t vectors[4], int64_t* out);

/* Scan a colored window for a same-color pair within h infinite-grid hops.
 * *conflict_found is 1/0; on 1, conflict receives (x1,y1,x2,y2) window
 * coordinates. */
gc_status gc_check_window(gc_problem* p, const int32_t* colors, int width, int height,
                          int* conflict_found, int64_t conflict[4]);

/* -- greedy baselines ----------------------------------------------------- */

gc_status gc_greedy_color(gc_problem* p, int width, int height, gc_heuristic heuristic,
                          uint64_t seed, int32_t* colors, int64_t* num_colors);

/* -- bounds --------------------------------------------------------------- */

typedef struct gc_bounds_report {
    double lower;              /* < 0 when undefined (R <= sqrt2) */
    double upper;
    int64_t hexagonal[4];      /* near-hexagonal basis vectors */
    int64_t hexagonal_colors;
    int64_t square[4];         /* near-square basis vectors */
    int64_t square_colors;
} gc_bounds_report;

gc_status gc_bounds(gc_problem* p, gc_bounds_report* out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDCHROMA_H */
