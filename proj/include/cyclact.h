/* cyclact: exact combinatorial realizations of finite cyclic group actions
 * on closed orientable surfaces, and their integer symplectic
 * representations.
 *
 * C API: opaque handles + status codes. Structured data crosses the
 * boundary as JSON strings (schemas documented in the README); strings
 * returned by the library are heap-allocated and must be released with
 * cyclact_string_free. All functions are thread-compatible; error details
 * are stored per thread.
 */
#ifndef CYCLACT_H
#define CYCLACT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyclact_status {
  CYCLACT_OK = 0,
  CYCLACT_ERR_DOMAIN = 1,   /* violated precondition / incompatibility */
  CYCLACT_ERR_USAGE = 2,    /* malformed arguments, bad JSON, null handle */
  CYCLACT_ERR_INTERNAL = 3
} cyclact_status;

typedef struct cyclact_dataset cyclact_dataset;
typedef struct cyclact_polygon cyclact_polygon;
typedef struct cyclact_fatgraph cyclact_fatgraph;
typedef struct cyclact_autom cyclact_autom;     /* fat graph + automorphism */
typedef struct cyclact_matrix cyclact_matrix;
typedef struct cyclact_decomp cyclact_decomp;

/* last error of the calling thread: short name (e.g. "NotCompatible") and
 * a human-readable message; pointers remain valid until the next failing
 * call on the same thread */
const char *cyclact_last_error_name(void);
const char *cyclact_last_error_message(void);

void cyclact_string_free(char *s);
void cyclact_dataset_free(cyclact_dataset *d);
void cyclact_polygon_free(cyclact_polygon *p);
void cyclact_fatgraph_free(cyclact_fatgraph *g);
void cyclact_autom_free(cyclact_autom *a);
void cyclact_matrix_free(cyclact_matrix *m);
void cyclact_decomp_free(cyclact_decomp *d);

/* ---- data sets ---- */
/* cones: array of 2*n_cones longs (c_1, n_1, c_2, n_2, ...) */
cyclact_status cyclact_dataset_make(int64_t n, int64_t g0, int64_t r,
                                    const int64_t *cones, int n_cones,
                                    cyclact_dataset **out);
cyclact_status cyclact_dataset_parse(const char *json, cyclact_dataset **out);
/* total validation; always returns a report JSON, even for invalid input */
cyclact_status cyclact_validate(int64_t n, int64_t g0, int64_t r,
                                const int64_t *cones, int n_cones, char **report_json);
cyclact_status cyclact_dataset_to_json(const cyclact_dataset *d, char **out);
cyclact_status cyclact_genus(const cyclact_dataset *d, int64_t *out);
/* {"kind":"rotational"|"type1"|"type2","irreducible":bool} */
cyclact_status cyclact_classify(const cyclact_dataset *d, char **out);
cyclact_status cyclact_self_compatible_indices(const cyclact_dataset *d, char **out);
cyclact_status cyclact_compose_self(const cyclact_dataset *d, int r, int s, cyclact_dataset **out);
cyclact_status cyclact_compose_trivial_self(const cyclact_dataset *d, int64_t g, cyclact_dataset **out);
cyclact_status cyclact_strip_trivial_handles(const cyclact_dataset *d, cyclact_dataset **out,
                                             int64_t *stripped);
cyclact_status cyclact_compose_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                    int r, int s, cyclact_dataset **out);
cyclact_status cyclact_compose_trivial_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                            cyclact_dataset **out);
cyclact_status cyclact_enumerate(int64_t n, int64_t g, char **out_json_array);
cyclact_status cyclact_reduction_size(const cyclact_dataset *d, int64_t *out);
cyclact_status cyclact_reduction_size_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                           int r, int s, int64_t *out);

/* ---- polygons ---- */
cyclact_status cyclact_build_polygon(const cyclact_dataset *d, cyclact_polygon **out);
cyclact_status cyclact_polygon_to_json(const cyclact_polygon *p, char **out);
cyclact_status cyclact_polygon_genus(const cyclact_polygon *p, int64_t *out);
/* signed letter permutation of the rotation: [["a0","a1"],...] */
cyclact_status cyclact_polygon_rotation(const cyclact_polygon *p, char **out);
cyclact_status cyclact_realized_dataset(const cyclact_polygon *p, cyclact_dataset **out);
cyclact_status cyclact_polygon_render_svg(const cyclact_polygon *p, char **out);
/* canonical word + abelianized basis f-values over the polygon letters */
cyclact_status cyclact_polygon_normalize(const cyclact_polygon *p, char **out);

/* ---- words ---- */
/* word: JSON array of signed letter strings ("a3","a3^-1") */
cyclact_status cyclact_cyclic_reduce(const char *word_json, char **out);
cyclact_status cyclact_normalize_word(const char *word_json, char **out);

/* ---- fat graphs ---- */
cyclact_status cyclact_fatgraph_from_polygon(const cyclact_polygon *p, cyclact_fatgraph **out);
cyclact_status cyclact_fatgraph_parse(const char *json, cyclact_fatgraph **out);
cyclact_status cyclact_fatgraph_to_json(const cyclact_fatgraph *g, char **out);
cyclact_status cyclact_fatgraph_boundaries(const cyclact_fatgraph *g, char **out);
cyclact_status cyclact_fatgraph_genus(const cyclact_fatgraph *g, int64_t *out);
cyclact_status cyclact_autom_from_rotation(const cyclact_polygon *p, cyclact_autom **out);
cyclact_status cyclact_autom_order(const cyclact_autom *a, int64_t *out);
cyclact_status cyclact_autom_is_irreducible(const cyclact_autom *a, int *out);
cyclact_status cyclact_autom_dataset(const cyclact_autom *a, cyclact_dataset **out);
cyclact_status cyclact_autom_graph(const cyclact_autom *a, cyclact_fatgraph **out);
/* map as JSON [["e","f^-1"],...] */
cyclact_status cyclact_autom_map(const cyclact_autom *a, char **out);
cyclact_status cyclact_glue_compatible(const cyclact_dataset *a, const cyclact_dataset *b,
                                       int r, int s, cyclact_autom **out);

/* ---- symplectic representations ---- */
/* basis: "interleaved" (l1,m1,...) or "split" (l1..lg,m1..mg) */
cyclact_status cyclact_rep_type1(const cyclact_dataset *d, const char *basis,
                                 cyclact_matrix **out);
cyclact_status cyclact_rep_direct_sum(const cyclact_dataset *a, const cyclact_dataset *b,
                                      int r, int s, const char *basis, cyclact_matrix **out);
cyclact_status cyclact_rep_comp_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                     int r, int s, const char *basis, cyclact_matrix **out);
cyclact_status cyclact_matrix_to_json(const cyclact_matrix *m, char **out);
cyclact_status cyclact_matrix_order(const cyclact_matrix *m, int64_t *out);
cyclact_status cyclact_matrix_is_symplectic(const cyclact_matrix *m, int *out);

/* ---- roots of Dehn twists ---- */
cyclact_status cyclact_is_root_realizing(const cyclact_dataset *d, int *out);
cyclact_status cyclact_split_root(const cyclact_dataset *d, cyclact_dataset **d1,
                                  cyclact_dataset **d2);
/* blocks E, B, C, I plus the assembled matrix */
cyclact_status cyclact_rep_root_nonsep(const cyclact_dataset *d, const char *basis, char **out);
cyclact_status cyclact_rep_root_sep(const cyclact_dataset *a, int i1,
                                    const cyclact_dataset *b, int i2,
                                    const char *basis, cyclact_matrix **out);

/* ---- decomposition ---- */
cyclact_status cyclact_decompose(const cyclact_dataset *d, int64_t budget, cyclact_decomp **out);
cyclact_status cyclact_decomp_to_json(const cyclact_decomp *d, char **out);
cyclact_status cyclact_decomp_evaluate(const cyclact_decomp *d, cyclact_dataset **out);

/* ---- diagnostics ---- */
/* runs the golden-example suite; returns CYCLACT_OK when everything passes
 * and fills `report` with one line per check */
cyclact_status cyclact_selftest(char **report);

#ifdef __cplusplus
}
#endif

#endif /* CYCLACT_H */
