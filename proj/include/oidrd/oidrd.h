#ifndef OIDRD_OIDRD_H
#define OIDRD_OIDRD_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(OIDRD_BUILDING)
#    define OIDRD_API __declspec(dllexport)
#  else
#    define OIDRD_API __declspec(dllimport)
#  endif
#else
#  define OIDRD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oidrd_graph oidrd_graph;

typedef enum oidrd_status {
    OIDRD_OK = 0,
    OIDRD_ERR_INVALID_ARGUMENT = 1,
    OIDRD_ERR_PARSE = 2,
    OIDRD_ERR_CAP_EXCEEDED = 3,
    OIDRD_ERR_PRECONDITION = 4,
    OIDRD_ERR_INTERNAL = 5
} oidrd_status;

/* Message of the last failed call on this thread, "" if none. Valid until the
   next call on the same thread. */
OIDRD_API const char* oidrd_last_error(void);
OIDRD_API const char* oidrd_version(void);

/* Strings returned through char** out-parameters are owned by the caller and
   released with oidrd_string_free. */
OIDRD_API void oidrd_string_free(char* s);

/* Edge-list text ("n m" then m lines "u v") or a generator string such as
   "path:5", "kbipartite:2,3", "corona(path:2,empty:2)". */
OIDRD_API oidrd_status oidrd_graph_parse(const char* text, oidrd_graph** out);
/* `edges` holds 2*m vertex indices. */
OIDRD_API oidrd_status oidrd_graph_from_edges(int n, const int* edges, int m, oidrd_graph** out);
OIDRD_API void oidrd_graph_free(oidrd_graph* g);
OIDRD_API int oidrd_graph_order(const oidrd_graph* g);
OIDRD_API int oidrd_graph_size(const oidrd_graph* g);
OIDRD_API oidrd_status oidrd_graph_edge_list(const oidrd_graph* g, char** out);

/* Invariant names: gamma_oidr, gamma_dr, gamma_oir, gamma_r, gamma, alpha,
   beta. */
OIDRD_API oidrd_status oidrd_solve_value(const oidrd_graph* g, const char* invariant, int* value);

/* The functions below write a JSON document carrying "schema": "oidrd/1". */

/* Value, canonical witness and search statistics. With count_optima != 0 the
   number of optimal labelings is added (order <= 12 only). */
OIDRD_API oidrd_status oidrd_solve_json(const oidrd_graph* g, const char* invariant, unsigned workers,
                                        int count_optima, char** out);
/* All seven invariants. */
OIDRD_API oidrd_status oidrd_bundle_json(const oidrd_graph* g, unsigned workers, char** out);
/* Lower bound max{gamma, 2 alpha / Delta} + beta as an exact fraction and
   upper bound 3 beta, next to gamma_oidr. */
OIDRD_API oidrd_status oidrd_bounds_json(const oidrd_graph* g, unsigned workers, char** out);
/* Value class THREE / FOUR / FIVE / OTHER with the recognized family. */
OIDRD_API oidrd_status oidrd_classify_json(const oidrd_graph* g, char** out);
/* Gadget graph G' as edge-list text plus gamma_oidr(G') against 4n - alpha. */
OIDRD_API oidrd_status oidrd_reduce_json(const oidrd_graph* g, int max_order, char** out);
/* Corona formula with its coefficients; with verify != 0 also the solver
   value on G o H. */
OIDRD_API oidrd_status oidrd_corona_json(const oidrd_graph* g, const oidrd_graph* h, int verify, char** out);
/* Closed form for a generator string of a path, cycle, complete, star,
   kbipartite or kpartite graph; with verify != 0 also the solver value. */
OIDRD_API oidrd_status oidrd_formula_json(const char* spec, int verify, char** out);
/* One verification campaign; see oidrd_campaign_names. */
OIDRD_API oidrd_status oidrd_audit_json(const char* campaign, int max_n, uint64_t seed, unsigned workers,
                                        char** out);
/* JSON array of campaign names in run order. */
OIDRD_API oidrd_status oidrd_campaign_names(char** out);
/* CSV line (campaign, instances, violations, runtime_ms, status) of a report
   produced by oidrd_audit_json; pass NULL for the header line. */
OIDRD_API oidrd_status oidrd_audit_csv(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
