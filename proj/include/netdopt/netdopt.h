/* netdopt — D-optimal treatment allocation on networks.
 *
 * C interface to the shared library. All functions return ND_OK (0) on
 * success or a nonzero nd_status; nd_last_error() holds a thread-local
 * message for the most recent failure on the calling thread.
 *
 * Conventions:
 *   - networks and solver reports are opaque handles freed with their
 *     nd_*_free function;
 *   - designs are caller-allocated int arrays of length n with entries -1/+1;
 *   - strings returned through char** are heap-allocated and must be
 *     released with nd_string_free.
 */
#ifndef NETDOPT_H
#define NETDOPT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NETDOPT_API __declspec(dllexport)
#else
#define NETDOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nd_status {
  ND_OK = 0,
  ND_ERR_ARG = 1,        /* invalid argument / parameter out of domain */
  ND_ERR_PARSE = 2,      /* malformed input text */
  ND_ERR_SINGULAR = 3,   /* confounded design, singular information matrix */
  ND_ERR_INFEASIBLE = 4, /* balance constraint admits no design */
  ND_ERR_IO = 5,         /* file could not be read or written */
  ND_ERR_LIMIT = 6,      /* instance exceeds a configured cap */
  ND_ERR_INTERNAL = 7
} nd_status;

typedef struct nd_network nd_network;
typedef struct nd_solve_report nd_solve_report;
typedef struct nd_mip nd_mip;

NETDOPT_API const char* nd_version(void);
/* Message for the last failing call on this thread; empty string if none. */
NETDOPT_API const char* nd_last_error(void);
NETDOPT_API void nd_string_free(char* s);

/* ---- networks -------------------------------------------------------- */

NETDOPT_API int nd_network_parse_edge_list(const char* text, nd_network** out);
NETDOPT_API int nd_network_load_edge_list(const char* path, nd_network** out);
NETDOPT_API int nd_network_generate(int n, double p, uint64_t seed,
                                    nd_network** out);
/* Block-diagonal composition of k disjoint clusters. */
NETDOPT_API int nd_network_compose(const nd_network* const* clusters, int k,
                                   nd_network** out);
NETDOPT_API void nd_network_free(nd_network* net);

NETDOPT_API int nd_network_node_count(const nd_network* net);
NETDOPT_API int nd_network_edge_count(const nd_network* net);
NETDOPT_API int nd_network_degree(const nd_network* net, int node);
/* Writes the node's external identifier (label or index) into buf. */
NETDOPT_API int nd_network_label(const nd_network* net, int node, char* buf,
                                 size_t buf_size);
/* Sets *index to the node with the given label, or returns ND_ERR_ARG. */
NETDOPT_API int nd_network_index_of_label(const nd_network* net,
                                          const char* label, int* index);
NETDOPT_API int nd_network_save_edge_list(const nd_network* net,
                                          const char* path);
NETDOPT_API int nd_network_to_json(const nd_network* net, char** out_json);

/* ---- design criteria -------------------------------------------------- */

NETDOPT_API int nd_d_value(const nd_network* net, const int* design,
                           double rho, double* out);
NETDOPT_API int nd_d_upper_bound(const nd_network* net, double rho,
                                 double* out);
NETDOPT_API int nd_d_efficiency(const nd_network* net, const int* design,
                                double rho, double* out);
NETDOPT_API int nd_beta_variance(const nd_network* net, const int* design,
                                 double rho, double sigma2, double* out);
NETDOPT_API int nd_quad_objective_value(const nd_network* net,
                                        const int* design, double rho,
                                        double* out);
NETDOPT_API int nd_expected_random_efficiency(const nd_network* net,
                                              double rho, double* out);
/* Fills design[0..n-1] with independent uniform -1/+1 entries. */
NETDOPT_API int nd_random_design(int n, uint64_t seed, int* design);

/* ---- outcome model ----------------------------------------------------- */

NETDOPT_API int nd_sample_delta(const nd_network* net, double rho,
                                double sigma2, uint64_t seed, double* delta);
NETDOPT_API int nd_simulate_responses(const nd_network* net, const int* design,
                                      double beta0, double beta, double rho,
                                      double sigma2, int noiseless,
                                      uint64_t seed, double* y);
NETDOPT_API int nd_gls_fit(const nd_network* net, const int* design,
                           const double* y, double rho, double* beta0_hat,
                           double* beta_hat);
NETDOPT_API int nd_ols_fit(int n, const int* design, const double* y,
                           double* beta0_hat, double* beta_hat);
/* Profile maximum likelihood; any output pointer may be NULL. */
NETDOPT_API int nd_profile_mle(const nd_network* net, const int* design,
                               const double* y, double* beta0_hat,
                               double* beta_hat, double* rho_hat,
                               double* sigma2_hat, double* loglik);
NETDOPT_API int nd_empirical_variance(const double* values, int count,
                                      double* out);

/* ---- optimization ------------------------------------------------------ */

typedef enum nd_method {
  ND_METHOD_BRUTE = 0,
  ND_METHOD_BRANCH_BOUND = 1,
  ND_METHOD_LOCAL_SEARCH = 2
} nd_method;

typedef struct nd_solve_options {
  int method;                 /* nd_method */
  uint64_t seed;
  int restarts;               /* local-search starts */
  double time_budget_seconds; /* branch-and-bound wall-clock budget */
  int brute_cap;              /* max n accepted by the brute solver */
} nd_solve_options;

NETDOPT_API void nd_solve_options_default(nd_solve_options* opts);

NETDOPT_API int nd_solve_original(const nd_network* net, double rho,
                                  const nd_solve_options* opts,
                                  nd_solve_report** out);
NETDOPT_API int nd_solve_modified(const nd_network* net, double alpha,
                                  const nd_solve_options* opts,
                                  nd_solve_report** out);
NETDOPT_API void nd_solve_report_free(nd_solve_report* report);

NETDOPT_API int nd_report_node_count(const nd_solve_report* report);
NETDOPT_API int nd_report_design(const nd_solve_report* report, int* design);
NETDOPT_API double nd_report_objective(const nd_solve_report* report);
NETDOPT_API double nd_report_lower_bound(const nd_solve_report* report);
NETDOPT_API double nd_report_gap(const nd_solve_report* report);
NETDOPT_API double nd_report_elapsed_seconds(const nd_solve_report* report);
NETDOPT_API uint64_t nd_report_nodes_explored(const nd_solve_report* report);
NETDOPT_API int nd_report_proven_optimal(const nd_solve_report* report);
NETDOPT_API int nd_report_budget_exceeded(const nd_solve_report* report);
NETDOPT_API const char* nd_report_method(const nd_solve_report* report);
NETDOPT_API int nd_report_to_json(const nd_solve_report* report,
                                  char** out_json);

/* Normal quantile Phi^{-1}(alpha), alpha in (0, 1). */
NETDOPT_API int nd_normal_quantile(double alpha, double* out);
/* Balance bound Phi^{-1}(alpha) * sqrt(sum m_i^2), alpha in (0.5, 1). */
NETDOPT_API int nd_balance_bound(const nd_network* net, double alpha,
                                 double* out);

/* Optimal per-cluster sign flips; signs and combined design are written to
 * caller arrays (signs: k entries; design: total node count entries). */
NETDOPT_API int nd_combine_clusters(const nd_network* const* clusters,
                                    const int* const* designs, int k,
                                    int* signs, int* design_out,
                                    long long* value_out);

/* ---- linearized formulation ------------------------------------------- */

NETDOPT_API int nd_mip_build_original(const nd_network* net, double rho,
                                      nd_mip** out);
NETDOPT_API int nd_mip_build_modified(const nd_network* net, double alpha,
                                      nd_mip** out);
NETDOPT_API void nd_mip_free(nd_mip* mip);
NETDOPT_API int nd_mip_binary_count(const nd_mip* mip);
NETDOPT_API int nd_mip_u_count(const nd_mip* mip);
NETDOPT_API int nd_mip_constraint_count(const nd_mip* mip);
NETDOPT_API int nd_mip_to_lp(const nd_mip* mip, char** out_text);

/* ---- rendering --------------------------------------------------------- */

NETDOPT_API int nd_render_svg(const nd_network* net, const int* design,
                              uint64_t seed, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NETDOPT_H */
