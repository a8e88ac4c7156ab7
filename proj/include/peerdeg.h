/*
 * peerdeg — degree distributions of self-repairing peer-to-peer overlays.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed here; every fallible call returns a peerdeg_status, writes its
 * result through out-parameters, and leaves a human-readable message
 * retrievable with peerdeg_last_error() on the calling thread.
 */

#ifndef PEERDEG_H
#define PEERDEG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum peerdeg_status {
  PEERDEG_OK = 0,
  PEERDEG_E_NON_POSITIVE_RATE = 1,
  PEERDEG_E_INVALID_PARAMS = 2,
  PEERDEG_E_OVERFLOW = 3,
  PEERDEG_E_NUMERICAL_INSTABILITY = 4,
  PEERDEG_E_INDEX_OUT_OF_RANGE = 5,
  PEERDEG_E_NO_GIANT_COMPONENT = 6,
  PEERDEG_E_PARAMS_TOO_LARGE = 7,
  PEERDEG_E_UNDEFINED_FOR_ZERO_Z1 = 8,
  PEERDEG_E_IO = 9,
  PEERDEG_E_NULL_ARGUMENT = 10,
  PEERDEG_E_UNKNOWN = 99
} peerdeg_status;

const char* peerdeg_status_str(peerdeg_status status);

/* Message of the last failing call on this thread ("" if none). */
const char* peerdeg_last_error(void);

const char* peerdeg_version(void);

/* ---- desired degree distributions ------------------------------------- */

typedef struct peerdeg_dist peerdeg_dist;

peerdeg_status peerdeg_dist_fixed(uint32_t degree, peerdeg_dist** out);
peerdeg_status peerdeg_dist_random_graph(double p, uint32_t n_nodes, peerdeg_dist** out);
peerdeg_status peerdeg_dist_scale_free(double a, double b, peerdeg_dist** out);
void peerdeg_dist_free(peerdeg_dist* dist);

/* ---- rates ------------------------------------------------------------- */

/* simulation_context != 0 additionally accepts zero rates. */
peerdeg_status peerdeg_validate_rates(double alpha, double phi, int simulation_context);

/* ---- degree histograms -------------------------------------------------- */

typedef struct peerdeg_hist peerdeg_hist;

/* pmf over degrees 0..len-1; must sum to 1 within 1e-9. */
peerdeg_status peerdeg_hist_from_pmf(const double* pmf, size_t len, uint64_t sample_count,
                                     peerdeg_hist** out);
size_t peerdeg_hist_size(const peerdeg_hist* hist); /* max degree + 1 */
double peerdeg_hist_prob(const peerdeg_hist* hist, size_t degree);
double peerdeg_hist_cdf(const peerdeg_hist* hist, size_t degree);
double peerdeg_hist_mean(const peerdeg_hist* hist);
uint64_t peerdeg_hist_sample_count(const peerdeg_hist* hist);
void peerdeg_hist_free(peerdeg_hist* hist);

/* Desired-degree pmf (finite support; see library docs for truncation). */
peerdeg_status peerdeg_dist_pmf(const peerdeg_dist* dist, double epsilon, peerdeg_hist** out);

/* ---- closed-form steady state ------------------------------------------ */

/* e_n(r) = sum_{k<=n} r^k/k!; PEERDEG_E_OVERFLOW when not representable. */
peerdeg_status peerdeg_exp_sum(uint32_t n, double r, double* out);
/* e_n(r) e^{-r} = Q(n+1, r), always in [0,1]. */
peerdeg_status peerdeg_exp_sum_scaled(uint32_t n, double r, double* out);
peerdeg_status peerdeg_coefficient_c(uint32_t j, double alpha, double phi, double* out);
/* D_{i,j}: steady-state P(degree = i | desired degree = j). */
peerdeg_status peerdeg_conditional_degree_prob(uint32_t i, uint32_t j, double alpha, double phi,
                                               double* out);
/* Mixture D_i = sum_j D_{i,j} P(dd = j) as a histogram. */
peerdeg_status peerdeg_analytic_distribution(const peerdeg_dist* dist, double alpha, double phi,
                                             double epsilon, peerdeg_hist** out);

/* ---- overlay construction ----------------------------------------------- */

typedef struct peerdeg_graph peerdeg_graph;

/* Number of nodes the scale-free generator creates: sum over degrees x of
 * floor(e^a/x^b). */
peerdeg_status peerdeg_aiello_network_size(double a, double b, uint64_t max_degree_cap,
                                           uint64_t* out);
/* Closed-form size expression sum_x e^a/x^b truncated to an integer. */
peerdeg_status peerdeg_aiello_formula_size(double a, double b, uint64_t max_degree_cap,
                                           uint64_t* out);

/* Sample desired degrees and wire the overlay by stub matching. n_nodes is
 * ignored for scale-free distributions (the construction fixes it). */
peerdeg_status peerdeg_graph_generate(const peerdeg_dist* dist, uint32_t n_nodes, uint64_t seed,
                                      peerdeg_graph** out);
uint32_t peerdeg_graph_n_nodes(const peerdeg_graph* graph);
uint32_t peerdeg_graph_degree(const peerdeg_graph* graph, uint32_t v);
uint32_t peerdeg_graph_desired_degree(const peerdeg_graph* graph, uint32_t v);
uint64_t peerdeg_graph_edge_count(const peerdeg_graph* graph);
/* Stubs left unmatched by the constructor (odd totals / collisions). */
uint32_t peerdeg_graph_unfilled_stubs(const peerdeg_graph* graph);
peerdeg_status peerdeg_graph_degree_hist(const peerdeg_graph* graph, peerdeg_hist** out);
/* Text dump: "n_nodes m_edges" header, then "u v" per edge, u < v. */
peerdeg_status peerdeg_graph_write_edges(const peerdeg_graph* graph, const char* path);
void peerdeg_graph_free(peerdeg_graph* graph);

/* ---- protocol simulation ------------------------------------------------ */

typedef struct peerdeg_sim peerdeg_sim;

/* Runs the protocol to t_end over a copy of the graph. measure_start < 0
 * selects the default window (second half of the run). */
peerdeg_status peerdeg_simulate(const peerdeg_graph* graph, double alpha, double phi,
                                double t_end, double measure_start, uint64_t seed,
                                peerdeg_sim** out);
double peerdeg_sim_clock(const peerdeg_sim* sim);
uint64_t peerdeg_sim_failures(const peerdeg_sim* sim);
uint64_t peerdeg_sim_attachments(const peerdeg_sim* sim);
uint64_t peerdeg_sim_rejected_requests(const peerdeg_sim* sim);
/* Degree pmf at t_end. */
peerdeg_status peerdeg_sim_snapshot(const peerdeg_sim* sim, peerdeg_hist** out);
/* Time-averaged degree pmf over the measurement window. */
peerdeg_status peerdeg_sim_time_average(const peerdeg_sim* sim, peerdeg_hist** out);
/* Copy of the final overlay. */
peerdeg_status peerdeg_sim_graph(const peerdeg_sim* sim, peerdeg_graph** out);
void peerdeg_sim_free(peerdeg_sim* sim);

/* ---- network metrics ----------------------------------------------------- */

/* z1 = <k>, z2 = <k^2> - <k>. */
peerdeg_status peerdeg_hist_moments(const peerdeg_hist* hist, double* z1, double* z2);
/* z_m = (z2/z1)^{m-1} z1. */
peerdeg_status peerdeg_neighbours_at_distance(double z1, double z2, uint32_t m, double* out);
/* l = log(n/z1)/log(z2/z1) + 1; PEERDEG_E_NO_GIANT_COMPONENT when z2 <= z1. */
peerdeg_status peerdeg_estimate_diameter(uint64_t n_nodes, double z1, double z2, double* out);
int peerdeg_diameter_reliable(double z1, double z2);
/* L1 distance and Kolmogorov-Smirnov statistic between two histograms. */
peerdeg_status peerdeg_compare_histograms(const peerdeg_hist* a, const peerdeg_hist* b,
                                          double* l1, double* ks);
/* Mean BFS distance over ordered reachable pairs from sampled sources. */
peerdeg_status peerdeg_mean_path_length(const peerdeg_graph* graph, uint32_t sample_size,
                                        uint64_t seed, double* mean_distance,
                                        double* unreachable_fraction);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PEERDEG_H */
