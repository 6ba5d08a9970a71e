/* C interface to the wallcrys engine.
 *
 * All objects are opaque handles created/destroyed through this API.
 * Functions return wc_status; results are written to out-parameters.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with wc_string_free().
 */
#ifndef WALLCRYS_H
#define WALLCRYS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wc_status {
  WC_OK = 0,
  WC_ERR_INVALID_TYPE = 1,   /* bad type string / rank out of range */
  WC_ERR_INVALID_WEIGHT = 2, /* lambda not level 1 for the type */
  WC_ERR_INVALID_ARG = 3,
  WC_ERR_BUDGET = 4,         /* node budget exhausted, output truncated */
  WC_ERR_VERIFY_FAIL = 5,    /* isomorphism check found a counterexample */
  WC_ERR_DEAD_END = 6,       /* e_i / f_i gave 0 at some step of a word */
} wc_status;

typedef struct wc_engine wc_engine;  /* one (affine type, level-1 lambda) */
typedef struct wc_graph wc_graph;
typedef struct wc_wall wc_wall;

typedef enum wc_model { WC_MODEL_WALL = 0, WC_MODEL_PATH = 1 } wc_model;

/* ---- engine ---- */
wc_status wc_engine_create(const char* type_str, const char* lambda_str, wc_engine** out);
void wc_engine_destroy(wc_engine* e);
int wc_engine_rank(const wc_engine* e);

/* ---- crystal graphs ---- */
wc_status wc_graph_generate(wc_engine* e, wc_model model, int depth, size_t node_budget,
                            wc_graph** out);
void wc_graph_destroy(wc_graph* g);
size_t wc_graph_node_count(const wc_graph* g);
int wc_graph_truncated(const wc_graph* g);
wc_status wc_graph_json(const wc_graph* g, char** out);
wc_status wc_graph_dot(const wc_graph* g, char** out);

/* ---- Theorem-7.1 verification ----
 * *passed is set to 1 on success, 0 on counterexample (report still filled).
 */
wc_status wc_verify(wc_engine* e, int depth, size_t node_budget, char** report_json, int* passed);

/* ---- character table ---- */
wc_status wc_character_json(wc_engine* e, int max_blocks, char** out);

/* ---- wall manipulation ---- */
wc_status wc_wall_create(wc_engine* e, wc_wall** out);                /* ground wall */
wc_status wc_wall_parse(wc_engine* e, const char* counts, wc_wall** out);
void wc_wall_destroy(wc_wall* w);
wc_status wc_wall_apply(wc_wall* w, char op, int i);                  /* op in {'e','f'} */
wc_status wc_wall_render(const wc_wall* w, char** out);
wc_status wc_wall_info_json(const wc_wall* w, char** out);            /* wt, eps, phi, reduced */

void wc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WALLCRYS_H */
