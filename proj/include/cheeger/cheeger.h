/* Public C interface of the cheeger shared library.
 *
 * Conventions:
 *   - Every function returns a chg_status; CHG_OK means success.
 *   - On failure, chg_last_error() returns a thread-local message valid
 *     until the next failing call on the same thread.
 *   - Strings returned through char** are heap-allocated; release them
 *     with chg_string_free.  Handles are released with their _free call.
 *   - JSON payloads have sorted keys and are byte-stable across runs and
 *     thread counts.  Rationals are strings: "p" or "p/q".
 */
#ifndef CHEEGER_H
#define CHEEGER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chg_status {
  CHG_OK = 0,
  CHG_ERR_ARGUMENT = 1,   /* invalid argument or precondition violation */
  CHG_ERR_PARSE = 2,      /* malformed partition/graph/number text */
  CHG_ERR_INFEASIBLE = 3, /* instance exceeds a documented size cap */
  CHG_ERR_OVERFLOW = 4,   /* exact arithmetic left the 64-bit range */
  CHG_ERR_DOMAIN = 5,     /* operation undefined for this value */
  CHG_ERR_INTERNAL = 6    /* invariant breach; indicates a library bug */
} chg_status;

typedef struct chg_partition chg_partition;
typedef struct chg_graph chg_graph;

const char* chg_version(void);
const char* chg_last_error(void);
void chg_string_free(char* s);

/* ---- partitions ------------------------------------------------------- */

/* text: comma-separated weakly decreasing parts, e.g. "3,3,1"; power
 * syntax "3^2,1" is accepted. */
chg_status chg_partition_parse(const char* text, chg_partition** out);
/* the corner partition (t, t-1, ..., 1) */
chg_status chg_partition_corner(long long t, chg_partition** out);
/* the family (2t-1, 2t-1, 2t-3, 2t-3, ..., 3, 3, 1), t >= 2 */
chg_status chg_partition_pow2_family(long long t, chg_partition** out);
chg_status chg_partition_blowup(const chg_partition* p, long long c, chg_partition** out);
void chg_partition_free(chg_partition* p);
/* {parts, conjugate, box, depth, weight, sq_weight, n_r, n_r_conj, n_d,
 *  n_min, h, deficiency} */
chg_status chg_partition_info_json(const chg_partition* p, char** json_out);

/* ---- graphs ----------------------------------------------------------- */

/* text: first line n, then one "u v" edge per line (1-based, u < v),
 * terminated by a blank line or end of input. */
chg_status chg_graph_parse(const char* text, chg_graph** out);
/* bipartite graph whose adjacency pattern is the Ferrers diagram of p,
 * padded with isolated vertices up to n */
chg_status chg_graph_staircase(int n, const chg_partition* p, chg_graph** out);
/* replace each vertex by c pairwise non-adjacent clones */
chg_status chg_graph_blowup(const chg_graph* g, int c, chg_graph** out);
void chg_graph_free(chg_graph* g);
chg_status chg_graph_format(const chg_graph* g, char** text_out);
/* {n, edges, h, odd_triangles} */
chg_status chg_graph_h_json(const chg_graph* g, char** json_out);
/* {n, edges, cut_minimal, witness?} */
chg_status chg_graph_cut_check_json(const chg_graph* g, char** json_out);
/* {n, edges, m_total, m_min, m_v, sharp, odd_triangles} */
chg_status chg_graph_vertex_cert_json(const chg_graph* g, char** json_out);
/* lowercase hex of the canonical upper-triangular adjacency bits (n <= 10) */
chg_status chg_graph_canonical_hex(const chg_graph* g, char** hex_out);

/* ---- cochain sweeps, complex, search ---------------------------------- */

/* exact k-dimensional Cheeger constant of the n-vertex simplex by full
 * cochain enumeration; augmented selects the k = 0 convention */
chg_status chg_cochain_hk_json(int n, int k, int augmented, int jobs, char** json_out);
/* the complex of cut-minimal edge sets: f-vector, optional GF(2) Betti
 * numbers (n <= 6) and maximal-face counts */
chg_status chg_cm_json(int n, int with_betti, int with_maximal, char** json_out);
/* exhaustive isomorphism-class search (n <= 8) for the graph minimum */
chg_status chg_search_json(int n, int jobs, int with_graphs, int with_conjectures,
                           int with_timing, char** json_out);
/* CSV with columns n, lower, upper, exact, source for 3 <= n <= n_max;
 * with_approx appends decimal approximation columns */
chg_status chg_h_table_csv(int n_max, int jobs, int with_approx, char** csv_out);
/* one line per reproduced claim; gate_ok_out receives 1 iff every gating
 * claim passed or reproduced its documented divergence exactly (the text
 * marks the latter "FAIL (documented)") */
chg_status chg_verify_paper(int jobs, char** text_out, int* gate_ok_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHEEGER_H */
