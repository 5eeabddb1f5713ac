/* C interface to the gemkit library.
 *
 * Graphs are opaque handles owned by the caller and released with
 * gemkit_graph_free. Reports are returned as NUL-terminated JSON strings
 * allocated by the library and released with gemkit_string_free. Every
 * function returns GEMKIT_OK or an error code; the message of the last
 * failure on the calling thread is available from gemkit_last_error.
 */
#ifndef GEMKIT_GEMKIT_H
#define GEMKIT_GEMKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(GEMKIT_BUILDING)
#define GEMKIT_API __declspec(dllexport)
#else
#define GEMKIT_API __declspec(dllimport)
#endif
#else
#define GEMKIT_API __attribute__((visibility("default")))
#endif

typedef struct gemkit_graph gemkit_graph;

typedef enum gemkit_status {
  GEMKIT_OK = 0,
  GEMKIT_E_INVALID_ARGUMENT = 1,
  GEMKIT_E_PARSE = 2,
  GEMKIT_E_DUPLICATE_VERTEX = 3,
  GEMKIT_E_NON_PERFECT_MATCHING = 4,
  GEMKIT_E_LOOP_EDGE = 5,
  GEMKIT_E_VERTEX_OUT_OF_RANGE = 6,
  GEMKIT_E_DISCONNECTED = 7,
  GEMKIT_E_INVALID_COLOR = 8,
  GEMKIT_E_CLOSED_GRAPH = 9,
  GEMKIT_E_DIMENSION = 10,
  GEMKIT_E_BOUNDARY_GRAPH = 11,
  GEMKIT_E_SURFACE_CHECK_FAILED = 12,
  GEMKIT_E_NOT_A_CRYSTALLIZATION = 13,
  GEMKIT_E_DISCONNECTED_BOUNDARY = 14,
  GEMKIT_E_COLOR_MISMATCH = 15,
  GEMKIT_E_INVALID_SITE = 16,
  GEMKIT_E_CONNECTED_BOUNDARY = 17,
  GEMKIT_E_INVALID_SURFACE = 18,
  GEMKIT_E_INTERNAL = 99
} gemkit_status;

typedef enum gemkit_verify_mode {
  GEMKIT_VERIFY_AUTO = 0,
  GEMKIT_VERIFY_CLOSED = 1,
  GEMKIT_VERIFY_BOUNDARY = 2
} gemkit_verify_mode;

typedef enum gemkit_seed { GEMKIT_SEED_S2XS1 = 0, GEMKIT_SEED_RP3 = 1, GEMKIT_SEED_TWISTED_S2XS1 = 2 } gemkit_seed;

/* Diagnostics. */
GEMKIT_API const char* gemkit_last_error(void);
GEMKIT_API const char* gemkit_status_name(int status);
GEMKIT_API const char* gemkit_version(void);
GEMKIT_API void gemkit_string_free(char* s);

/* Construction, text format, lifetime. */
GEMKIT_API int gemkit_graph_parse(const char* text, size_t length, gemkit_graph** out);
/* edges: flattened (a, b) pairs; counts[c] edges for color c, c = 0..dim. */
GEMKIT_API int gemkit_graph_from_edges(int dim, int vertex_count, const int* edges, const size_t* counts,
                                       gemkit_graph** out);
GEMKIT_API int gemkit_graph_serialize(const gemkit_graph* g, char** out);
GEMKIT_API int gemkit_graph_clone(const gemkit_graph* g, gemkit_graph** out);
GEMKIT_API int gemkit_graph_equal(const gemkit_graph* a, const gemkit_graph* b, int* equal);
GEMKIT_API void gemkit_graph_free(gemkit_graph* g);
GEMKIT_API int gemkit_graph_dim(const gemkit_graph* g, int* dim);
GEMKIT_API int gemkit_graph_vertex_count(const gemkit_graph* g, int* count);
/* Partner of v in color c, or -1. */
GEMKIT_API int gemkit_graph_partner(const gemkit_graph* g, int color, int v, int* partner);
GEMKIT_API int gemkit_graph_has_boundary(const gemkit_graph* g, int* has_boundary);

/* Census queries. */
GEMKIT_API int gemkit_residue_count(const gemkit_graph* g, unsigned color_mask, int* count);
GEMKIT_API int gemkit_cycle_count(const gemkit_graph* g, int i, int j, int* count);

/* JSON reports (schemas in docs/json-reports.md). */
GEMKIT_API int gemkit_report_gem(const gemkit_graph* g, char** json);
GEMKIT_API int gemkit_report_census(const gemkit_graph* g, char** json);
GEMKIT_API int gemkit_report_genus(const gemkit_graph* g, char** json);
/* verdict receives 1 when the gem verifies, 0 otherwise. */
GEMKIT_API int gemkit_report_verify(const gemkit_graph* g, int mode, int* verdict, char** json);
GEMKIT_API int gemkit_report_boundary_genus(const gemkit_graph* g, char** json);
GEMKIT_API int gemkit_report_relations(const gemkit_graph* g, int* all_hold, char** json);
GEMKIT_API int gemkit_report_handlebody(const gemkit_graph* g, int* handlebody, char** json);
GEMKIT_API int gemkit_report_bounds(const gemkit_graph* g, char** json);
GEMKIT_API int gemkit_report_dipoles(const gemkit_graph* g, char** json);

/* Boundary graph. */
GEMKIT_API int gemkit_boundary_component_count(const gemkit_graph* g, int* h);
GEMKIT_API int gemkit_boundary_component(const gemkit_graph* g, int index, gemkit_graph** out);
GEMKIT_API int gemkit_report_boundary(const gemkit_graph* g, char** json);

/* Generators. */
GEMKIT_API int gemkit_generate_handlebody(int genus, int nonorientable, gemkit_graph** out);
GEMKIT_API int gemkit_generate_surface(int parameter, int nonorientable, gemkit_graph** out);
GEMKIT_API int gemkit_generate_product(const gemkit_graph* surface, gemkit_graph** out);
GEMKIT_API int gemkit_generate_seed(int seed, gemkit_graph** out);
GEMKIT_API int gemkit_seed_from_name(const char* name, int* seed);
GEMKIT_API int gemkit_generate_non_handlebody(int genus, int nonorientable, int seed, gemkit_graph** out);

/* Moves. Optional `json` outputs describe relabeling maps and flags; pass
 * NULL to skip them. */
GEMKIT_API int gemkit_connected_sum(const gemkit_graph* g1, int v1, const gemkit_graph* g2, int v2,
                                    int open_boundary_weld, gemkit_graph** out, char** json);
GEMKIT_API int gemkit_cancel_dipole(const gemkit_graph* g, int x, int y, int color, gemkit_graph** out,
                                    char** json);
GEMKIT_API int gemkit_insert_dipole(const gemkit_graph* g, int v, int color, gemkit_graph** out);
GEMKIT_API int gemkit_reduce_dipoles(const gemkit_graph* g, gemkit_graph** out, char** json);
GEMKIT_API int gemkit_join_boundary(const gemkit_graph* g, gemkit_graph** out, char** json);

#ifdef __cplusplus
}
#endif

#endif /* GEMKIT_GEMKIT_H */
