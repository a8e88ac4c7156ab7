#include "peerdeg.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "peerdeg/analytic.hpp"
#include "peerdeg/errors.hpp"
#include "peerdeg/metrics.hpp"
#include "peerdeg/model.hpp"
#include "peerdeg/netgen.hpp"
#include "peerdeg/sim.hpp"

struct peerdeg_dist {
  peerdeg::DesiredDegreeDistribution rep;
};

struct peerdeg_hist {
  peerdeg::DegreeHistogram rep;
  std::vector<double> cdf;  // cached at construction
};

struct peerdeg_graph {
  peerdeg::OverlayGraph rep;
  peerdeg::ConstructionReport report;
};

struct peerdeg_sim {
  peerdeg::Simulation rep;
};

namespace {

thread_local std::string g_last_error;

peerdeg_status to_status(peerdeg::Errc code) {
  using peerdeg::Errc;
  switch (code) {
    case Errc::ok: return PEERDEG_OK;
    case Errc::non_positive_rate: return PEERDEG_E_NON_POSITIVE_RATE;
    case Errc::invalid_params: return PEERDEG_E_INVALID_PARAMS;
    case Errc::overflow: return PEERDEG_E_OVERFLOW;
    case Errc::numerical_instability: return PEERDEG_E_NUMERICAL_INSTABILITY;
    case Errc::index_out_of_range: return PEERDEG_E_INDEX_OUT_OF_RANGE;
    case Errc::no_giant_component: return PEERDEG_E_NO_GIANT_COMPONENT;
    case Errc::params_too_large: return PEERDEG_E_PARAMS_TOO_LARGE;
    case Errc::undefined_for_zero_z1: return PEERDEG_E_UNDEFINED_FOR_ZERO_Z1;
    case Errc::io_error: return PEERDEG_E_IO;
  }
  return PEERDEG_E_UNKNOWN;
}

template <typename Fn>
peerdeg_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PEERDEG_OK;
  } catch (const peerdeg::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PEERDEG_E_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return PEERDEG_E_UNKNOWN;
  }
}

peerdeg_status null_argument() {
  g_last_error = "null argument";
  return PEERDEG_E_NULL_ARGUMENT;
}

peerdeg_hist* make_hist(peerdeg::DegreeHistogram h) {
  auto* out = new peerdeg_hist{std::move(h), {}};
  out->cdf = out->rep.cdf();
  return out;
}

}  // namespace

extern "C" {

const char* peerdeg_status_str(peerdeg_status status) {
  switch (status) {
    case PEERDEG_OK: return "ok";
    case PEERDEG_E_NON_POSITIVE_RATE: return "non-positive rate";
    case PEERDEG_E_INVALID_PARAMS: return "invalid parameters";
    case PEERDEG_E_OVERFLOW: return "overflow";
    case PEERDEG_E_NUMERICAL_INSTABILITY: return "numerical instability";
    case PEERDEG_E_INDEX_OUT_OF_RANGE: return "index out of range";
    case PEERDEG_E_NO_GIANT_COMPONENT: return "no giant component";
    case PEERDEG_E_PARAMS_TOO_LARGE: return "parameters too large";
    case PEERDEG_E_UNDEFINED_FOR_ZERO_Z1: return "undefined for zero z1";
    case PEERDEG_E_IO: return "i/o error";
    case PEERDEG_E_NULL_ARGUMENT: return "null argument";
    case PEERDEG_E_UNKNOWN: break;
  }
  return "unknown error";
}

const char* peerdeg_last_error(void) { return g_last_error.c_str(); }

const char* peerdeg_version(void) { return "1.0.0"; }

peerdeg_status peerdeg_dist_fixed(uint32_t degree, peerdeg_dist** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new peerdeg_dist{peerdeg::FixedDegree{degree}}; });
}

peerdeg_status peerdeg_dist_random_graph(double p, uint32_t n_nodes, peerdeg_dist** out) {
  if (!out) return null_argument();
  return guarded([&] {
    peerdeg::DesiredDegreeDistribution d = peerdeg::RandomGraphDegree{p, n_nodes};
    peerdeg::validate_distribution(d);
    *out = new peerdeg_dist{d};
  });
}

peerdeg_status peerdeg_dist_scale_free(double a, double b, peerdeg_dist** out) {
  if (!out) return null_argument();
  return guarded([&] {
    peerdeg::DesiredDegreeDistribution d = peerdeg::ScaleFreeDegree{a, b};
    peerdeg::validate_distribution(d);
    *out = new peerdeg_dist{d};
  });
}

void peerdeg_dist_free(peerdeg_dist* dist) { delete dist; }

peerdeg_status peerdeg_validate_rates(double alpha, double phi, int simulation_context) {
  return guarded([&] {
    peerdeg::validate_rates({alpha, phi}, simulation_context
                                              ? peerdeg::RateContext::simulation
                                              : peerdeg::RateContext::analytic);
  });
}

peerdeg_status peerdeg_hist_from_pmf(const double* pmf, size_t len, uint64_t sample_count,
                                     peerdeg_hist** out) {
  if (!pmf || !out) return null_argument();
  return guarded([&] {
    std::vector<double> values(pmf, pmf + len);
    *out = make_hist(peerdeg::DegreeHistogram(
        std::move(values),
        sample_count ? peerdeg::HistogramSource::empirical : peerdeg::HistogramSource::analytic,
        sample_count));
  });
}

size_t peerdeg_hist_size(const peerdeg_hist* hist) { return hist ? hist->rep.size() : 0; }

double peerdeg_hist_prob(const peerdeg_hist* hist, size_t degree) {
  return hist ? hist->rep.prob(degree) : 0.0;
}

double peerdeg_hist_cdf(const peerdeg_hist* hist, size_t degree) {
  if (!hist) return 0.0;
  if (degree >= hist->cdf.size()) return 1.0;
  return hist->cdf[degree];
}

double peerdeg_hist_mean(const peerdeg_hist* hist) { return hist ? hist->rep.mean() : 0.0; }

uint64_t peerdeg_hist_sample_count(const peerdeg_hist* hist) {
  return hist ? hist->rep.sample_count() : 0;
}

void peerdeg_hist_free(peerdeg_hist* hist) { delete hist; }

peerdeg_status peerdeg_dist_pmf(const peerdeg_dist* dist, double epsilon, peerdeg_hist** out) {
  if (!dist || !out) return null_argument();
  return guarded([&] {
    auto pmf = peerdeg::desired_degree_pmf(dist->rep, epsilon);
    *out = make_hist(
        peerdeg::DegreeHistogram(std::move(pmf), peerdeg::HistogramSource::analytic, 0));
  });
}

peerdeg_status peerdeg_exp_sum(uint32_t n, double r, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::exp_sum(n, r); });
}

peerdeg_status peerdeg_exp_sum_scaled(uint32_t n, double r, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::exp_sum_scaled(n, r); });
}

peerdeg_status peerdeg_coefficient_c(uint32_t j, double alpha, double phi, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::coefficient_c(j, {alpha, phi}); });
}

peerdeg_status peerdeg_conditional_degree_prob(uint32_t i, uint32_t j, double alpha, double phi,
                                               double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::conditional_degree_prob(i, j, {alpha, phi}); });
}

peerdeg_status peerdeg_analytic_distribution(const peerdeg_dist* dist, double alpha, double phi,
                                             double epsilon, peerdeg_hist** out) {
  if (!dist || !out) return null_argument();
  return guarded([&] {
    *out = make_hist(peerdeg::degree_distribution(dist->rep, {alpha, phi}, epsilon));
  });
}

peerdeg_status peerdeg_aiello_network_size(double a, double b, uint64_t max_degree_cap,
                                           uint64_t* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::aiello_network_size(a, b, max_degree_cap); });
}

peerdeg_status peerdeg_aiello_formula_size(double a, double b, uint64_t max_degree_cap,
                                           uint64_t* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::aiello_formula_size(a, b, max_degree_cap); });
}

peerdeg_status peerdeg_graph_generate(const peerdeg_dist* dist, uint32_t n_nodes, uint64_t seed,
                                      peerdeg_graph** out) {
  if (!dist || !out) return null_argument();
  return guarded([&] {
    peerdeg::ConstructionReport report;
    auto graph = peerdeg::generate_overlay(dist->rep, n_nodes, seed, &report);
    *out = new peerdeg_graph{std::move(graph), report};
  });
}

uint32_t peerdeg_graph_n_nodes(const peerdeg_graph* graph) {
  return graph ? graph->rep.n_nodes() : 0;
}

uint32_t peerdeg_graph_degree(const peerdeg_graph* graph, uint32_t v) {
  if (!graph || v >= graph->rep.n_nodes()) return 0;
  return graph->rep.degree(v);
}

uint32_t peerdeg_graph_desired_degree(const peerdeg_graph* graph, uint32_t v) {
  if (!graph || v >= graph->rep.n_nodes()) return 0;
  return graph->rep.desired_degree(v);
}

uint64_t peerdeg_graph_edge_count(const peerdeg_graph* graph) {
  return graph ? graph->rep.edge_count() : 0;
}

uint32_t peerdeg_graph_unfilled_stubs(const peerdeg_graph* graph) {
  return graph ? graph->report.unfilled_stubs : 0;
}

peerdeg_status peerdeg_graph_degree_hist(const peerdeg_graph* graph, peerdeg_hist** out) {
  if (!graph || !out) return null_argument();
  return guarded([&] { *out = make_hist(graph->rep.degree_histogram()); });
}

peerdeg_status peerdeg_graph_write_edges(const peerdeg_graph* graph, const char* path) {
  if (!graph || !path) return null_argument();
  return guarded([&] { peerdeg::write_edge_list(graph->rep, path); });
}

void peerdeg_graph_free(peerdeg_graph* graph) { delete graph; }

peerdeg_status peerdeg_simulate(const peerdeg_graph* graph, double alpha, double phi,
                                double t_end, double measure_start, uint64_t seed,
                                peerdeg_sim** out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    peerdeg::SimConfig config;
    config.rates = {alpha, phi};
    config.t_end = t_end;
    config.measure_start = measure_start;
    config.seed = seed;
    *out = new peerdeg_sim{peerdeg::run_simulation(graph->rep, config)};
  });
}

double peerdeg_sim_clock(const peerdeg_sim* sim) { return sim ? sim->rep.clock() : 0.0; }

uint64_t peerdeg_sim_failures(const peerdeg_sim* sim) {
  return sim ? sim->rep.counters().failures : 0;
}

uint64_t peerdeg_sim_attachments(const peerdeg_sim* sim) {
  return sim ? sim->rep.counters().attachments : 0;
}

uint64_t peerdeg_sim_rejected_requests(const peerdeg_sim* sim) {
  return sim ? sim->rep.counters().rejected_requests : 0;
}

peerdeg_status peerdeg_sim_snapshot(const peerdeg_sim* sim, peerdeg_hist** out) {
  if (!sim || !out) return null_argument();
  return guarded([&] { *out = make_hist(sim->rep.snapshot_degrees()); });
}

peerdeg_status peerdeg_sim_time_average(const peerdeg_sim* sim, peerdeg_hist** out) {
  if (!sim || !out) return null_argument();
  return guarded([&] { *out = make_hist(sim->rep.time_averaged_histogram()); });
}

peerdeg_status peerdeg_sim_graph(const peerdeg_sim* sim, peerdeg_graph** out) {
  if (!sim || !out) return null_argument();
  return guarded([&] {
    *out = new peerdeg_graph{sim->rep.graph(), peerdeg::ConstructionReport{}};
  });
}

void peerdeg_sim_free(peerdeg_sim* sim) { delete sim; }

peerdeg_status peerdeg_hist_moments(const peerdeg_hist* hist, double* z1, double* z2) {
  if (!hist || !z1 || !z2) return null_argument();
  return guarded([&] {
    const auto [m1, m2] = peerdeg::neighbour_moments(hist->rep);
    *z1 = m1;
    *z2 = m2;
  });
}

peerdeg_status peerdeg_neighbours_at_distance(double z1, double z2, uint32_t m, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::neighbours_at_distance(z1, z2, m); });
}

peerdeg_status peerdeg_estimate_diameter(uint64_t n_nodes, double z1, double z2, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = peerdeg::estimate_diameter(n_nodes, z1, z2); });
}

int peerdeg_diameter_reliable(double z1, double z2) {
  return peerdeg::diameter_reliable(z1, z2) ? 1 : 0;
}

peerdeg_status peerdeg_compare_histograms(const peerdeg_hist* a, const peerdeg_hist* b,
                                          double* l1, double* ks) {
  if (!a || !b || !l1 || !ks) return null_argument();
  return guarded([&] {
    const auto cmp = peerdeg::compare_histograms(a->rep, b->rep);
    *l1 = cmp.l1;
    *ks = cmp.ks;
  });
}

peerdeg_status peerdeg_mean_path_length(const peerdeg_graph* graph, uint32_t sample_size,
                                        uint64_t seed, double* mean_distance,
                                        double* unreachable_fraction) {
  if (!graph || !mean_distance || !unreachable_fraction) return null_argument();
  return guarded([&] {
    const auto sample = peerdeg::measure_empirical_distances(graph->rep, sample_size, seed);
    *mean_distance = sample.mean_distance;
    *unreachable_fraction = sample.unreachable_fraction;
  });
}

}  // extern "C"
