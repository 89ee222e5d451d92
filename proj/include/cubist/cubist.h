/* C API for the cubist library: graph-braid cube complexes, right-angled
 * Artin groups, and the certificate checkers behind them.
 *
 * All functions return a status code; results come back through out
 * parameters. Structured results are JSON strings owned by the library,
 * released with cubist_string_free. Handles are opaque and released with
 * their _free function. On any nonzero status, cubist_last_error() holds a
 * message for the calling thread.
 */
#ifndef CUBIST_CUBIST_H
#define CUBIST_CUBIST_H

#ifdef __cplusplus
extern "C" {
#endif

#define CUBIST_OK 0
#define CUBIST_ERR_INPUT 1   /* malformed input or invariant violation */
#define CUBIST_VIOLATION 2   /* a check ran and found violations        */
#define CUBIST_ERR_BUDGET 3  /* an enumeration exceeded its budget      */

typedef struct cubist_graph cubist_graph;
typedef struct cubist_complex cubist_complex;
typedef struct cubist_morphism cubist_morphism;

const char* cubist_version(void);
const char* cubist_last_error(void);
void cubist_string_free(char* s);
void cubist_graph_free(cubist_graph* g);
void cubist_complex_free(cubist_complex* x);
void cubist_morphism_free(cubist_morphism* m);

/* ---- graphs ---- */
int cubist_graph_parse(const char* json, cubist_graph** out);
int cubist_graph_builtin(const char* spec, cubist_graph** out); /* "complete:5" */
int cubist_graph_to_json(const cubist_graph* g, char** json_out);
int cubist_graph_delta(const cubist_graph* g, cubist_graph** out);
int cubist_graph_opposite(const cubist_graph* g, cubist_graph** out);
int cubist_graph_line(const cubist_graph* g, cubist_graph** out);
int cubist_graph_subdivide(const cubist_graph* g, int k, cubist_graph** out);
int cubist_graph_isomorphic(const cubist_graph* a, const cubist_graph* b, int* iso);

/* Uncertified fineness heuristic for modelling n points on a subdivided
 * graph (chain lengths between essential vertices and girth). */
int cubist_subdivision_hint(const cubist_graph* g, int n, char** report_json);

/* Planarity with a machine-checkable witness either way; report JSON holds
 * the rotation system or the Kuratowski subdivision. */
int cubist_graph_planarity(const cubist_graph* g, char** report_json, int* planar);

/* Covering-map validation. Returns CUBIST_VIOLATION when invalid; the
 * report carries the failure detail. */
int cubist_morphism_parse(const char* json, cubist_morphism** out);
int cubist_cover_validate(const cubist_morphism* m, int sheets, char** report_json);

/* ---- cube complexes ---- */
int cubist_config_space(const cubist_graph* g, int n, long budget, cubist_complex** out);
int cubist_salvetti(const cubist_graph* defining, int max_dim, cubist_complex** out);
int cubist_complex_parse(const char* json, cubist_complex** out);
int cubist_complex_to_json(const cubist_complex* x, char** json_out);
int cubist_complex_f_vector(const cubist_complex* x, char** json_out);
int cubist_complex_euler(const cubist_complex* x, long* chi);

/* Flag condition on every vertex link. CUBIST_VIOLATION when a clique
 * spans no simplex; the report localizes each offender. */
int cubist_check_flag(const cubist_complex* x, char** report_json);

/* Closed-surface recognition for 2-dimensional complexes. */
int cubist_surface_id(const cubist_complex* x, char** report_json);

/* ---- maps and certificates ---- */
/* Build Phi: X_n(G) -> T_Delta(G) and check the local-isometry criterion.
 * CUBIST_VIOLATION when any vertex fails; the report embeds per-vertex
 * link map tables. */
int cubist_phi_certificate(const cubist_graph* g, int n, long budget, int jobs,
                           char** report_json);

/* Fundamental group presentation of a connected square complex; empty
 * basepoint means the least vertex label. */
int cubist_presentation(const cubist_complex* x, const char* basepoint, char** json_out);

/* Presentation of X_n(G) plus generator images and relator verification
 * under the homomorphism induced by Phi. */
int cubist_phi_induced_hom(const cubist_graph* g, int n, long budget, char** report_json);

/* Cover homomorphism j into the covering RAAG; checks lift commutation and
 * reducedness of letterwise images of all delta-reduced words of length
 * <= test_len. */
int cubist_cover_hom(const cubist_graph* delta, const cubist_morphism* opposite_cover,
                     int sheets, int test_len, char** report_json);

/* ---- words over a RAAG (defining graph = delta) ---- */
int cubist_word_reduce(const cubist_graph* delta, const char* word, char** out_word);
int cubist_word_normal_form(const cubist_graph* delta, const char* word, char** out_word);
int cubist_word_equal(const cubist_graph* delta, const char* w1, const char* w2, int* equal);
int cubist_word_conjugate(const cubist_graph* delta, const char* w1, const char* w2,
                          int* conjugate);
/* Identity certificate: trivial words yield a replay-checked move sequence
 * (JSON); nontrivial words yield CUBIST_VIOLATION and a report with the
 * normal form. */
int cubist_word_certify(const cubist_graph* delta, const char* word, char** report_json);

/* Exhaustive x^2 y^2 = z^2 search over delta-reduced words of length
 * <= max_len, every triple verified pairwise commuting. */
int cubist_search_square(const cubist_graph* delta, int max_len, long budget,
                         char** report_json);

#ifdef __cplusplus
}
#endif

#endif
