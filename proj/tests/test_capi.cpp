#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "peerdeg.h"

TEST_CASE("status strings and error reporting") {
  CHECK(std::string(peerdeg_status_str(PEERDEG_OK)) == "ok");
  CHECK(std::string(peerdeg_status_str(PEERDEG_E_NO_GIANT_COMPONENT)) == "no giant component");
  CHECK(std::strlen(peerdeg_version()) > 0);

  CHECK(peerdeg_validate_rates(0.5, 0.01, 0) == PEERDEG_OK);
  CHECK(peerdeg_validate_rates(0.0, 0.1, 0) == PEERDEG_E_NON_POSITIVE_RATE);
  CHECK(std::strlen(peerdeg_last_error()) > 0);
  CHECK(peerdeg_validate_rates(0.0, 0.1, 1) == PEERDEG_OK);
  CHECK(std::strlen(peerdeg_last_error()) == 0);  // cleared on success
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  double v = 0.0;
  CHECK(peerdeg_exp_sum(3, 1.0, nullptr) == PEERDEG_E_NULL_ARGUMENT);
  CHECK(peerdeg_dist_fixed(3, nullptr) == PEERDEG_E_NULL_ARGUMENT);
  CHECK(peerdeg_analytic_distribution(nullptr, 0.1, 0.2, 1e-12, nullptr) ==
        PEERDEG_E_NULL_ARGUMENT);
  CHECK(peerdeg_compare_histograms(nullptr, nullptr, &v, &v) == PEERDEG_E_NULL_ARGUMENT);
  CHECK(peerdeg_hist_size(nullptr) == 0);
  CHECK(peerdeg_graph_n_nodes(nullptr) == 0);
}

TEST_CASE("closed-form surface") {
  double v = 0.0;
  REQUIRE(peerdeg_exp_sum(5, 2.0, &v) == PEERDEG_OK);
  CHECK(v == doctest::Approx(109.0 / 15.0).epsilon(1e-13));
  CHECK(peerdeg_exp_sum(1500, 1500.0, &v) == PEERDEG_E_OVERFLOW);
  REQUIRE(peerdeg_exp_sum_scaled(5, 2.0, &v) == PEERDEG_OK);
  CHECK(v == doctest::Approx((109.0 / 15.0) * std::exp(-2.0)).epsilon(1e-13));

  REQUIRE(peerdeg_coefficient_c(1, 0.1, 0.2, &v) == PEERDEG_OK);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  REQUIRE(peerdeg_conditional_degree_prob(0, 1, 0.1, 0.2, &v) == PEERDEG_OK);
  CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(peerdeg_conditional_degree_prob(0, 1, 0.0, 0.2, &v) == PEERDEG_E_NON_POSITIVE_RATE);
}

TEST_CASE("analytic pipeline through handles") {
  peerdeg_dist* dist = nullptr;
  REQUIRE(peerdeg_dist_fixed(30, &dist) == PEERDEG_OK);

  peerdeg_hist* hist = nullptr;
  REQUIRE(peerdeg_analytic_distribution(dist, 0.5, 0.01, 1e-12, &hist) == PEERDEG_OK);
  REQUIRE(peerdeg_hist_size(hist) == 31);
  CHECK(peerdeg_hist_sample_count(hist) == 0);
  CHECK(peerdeg_hist_cdf(hist, 30) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(peerdeg_hist_cdf(hist, 99) == 1.0);

  double z1 = 0.0;
  double z2 = 0.0;
  REQUIRE(peerdeg_hist_moments(hist, &z1, &z2) == PEERDEG_OK);
  CHECK(z1 > 20.0);
  CHECK(z2 > z1);
  double l = 0.0;
  REQUIRE(peerdeg_estimate_diameter(1000, z1, z2, &l) == PEERDEG_OK);
  CHECK(l > 1.0);
  CHECK(peerdeg_estimate_diameter(1000, z1, z1, &l) == PEERDEG_E_NO_GIANT_COMPONENT);

  peerdeg_hist_free(hist);
  peerdeg_dist_free(dist);
}

TEST_CASE("histogram construction and comparison") {
  const std::vector<double> pmf_a = {0.5, 0.5};
  const std::vector<double> pmf_b = {0.25, 0.25, 0.5};
  peerdeg_hist* a = nullptr;
  peerdeg_hist* b = nullptr;
  REQUIRE(peerdeg_hist_from_pmf(pmf_a.data(), pmf_a.size(), 10, &a) == PEERDEG_OK);
  REQUIRE(peerdeg_hist_from_pmf(pmf_b.data(), pmf_b.size(), 0, &b) == PEERDEG_OK);
  CHECK(peerdeg_hist_sample_count(a) == 10);

  double l1 = 0.0;
  double ks = 0.0;
  REQUIRE(peerdeg_compare_histograms(a, b, &l1, &ks) == PEERDEG_OK);
  CHECK(l1 == doctest::Approx(1.0));   // |.25| + |.25| + |.5|
  CHECK(ks == doctest::Approx(0.5));

  const std::vector<double> bad = {0.7, 0.7};
  peerdeg_hist* c = nullptr;
  CHECK(peerdeg_hist_from_pmf(bad.data(), bad.size(), 0, &c) == PEERDEG_E_INVALID_PARAMS);

  peerdeg_hist_free(a);
  peerdeg_hist_free(b);
}

TEST_CASE("aiello sizes via the C surface") {
  uint64_t n = 0;
  REQUIRE(peerdeg_aiello_network_size(4.5, 0.8, 10000000, &n) == PEERDEG_OK);
  CHECK(n == 876);
  REQUIRE(peerdeg_aiello_formula_size(3.0, 0.5, 10000000, &n) == PEERDEG_OK);
  CHECK(n == 777);
  CHECK(peerdeg_aiello_network_size(20.0, 1.0, 10000000, &n) == PEERDEG_E_PARAMS_TOO_LARGE);
}

TEST_CASE("generation and simulation through handles") {
  peerdeg_dist* dist = nullptr;
  REQUIRE(peerdeg_dist_fixed(8, &dist) == PEERDEG_OK);

  peerdeg_graph* graph = nullptr;
  REQUIRE(peerdeg_graph_generate(dist, 100, 5, &graph) == PEERDEG_OK);
  CHECK(peerdeg_graph_n_nodes(graph) == 100);
  CHECK(peerdeg_graph_desired_degree(graph, 7) == 8);
  CHECK(peerdeg_graph_degree(graph, 7) <= 8);
  CHECK(2 * peerdeg_graph_edge_count(graph) + peerdeg_graph_unfilled_stubs(graph) == 800);

  peerdeg_sim* sim1 = nullptr;
  peerdeg_sim* sim2 = nullptr;
  REQUIRE(peerdeg_simulate(graph, 0.4, 0.05, 200.0, -1.0, 9, &sim1) == PEERDEG_OK);
  REQUIRE(peerdeg_simulate(graph, 0.4, 0.05, 200.0, -1.0, 9, &sim2) == PEERDEG_OK);
  CHECK(peerdeg_sim_clock(sim1) == 200.0);
  CHECK(peerdeg_sim_failures(sim1) == peerdeg_sim_failures(sim2));
  CHECK(peerdeg_sim_attachments(sim1) == peerdeg_sim_attachments(sim2));
  CHECK(peerdeg_sim_rejected_requests(sim1) == peerdeg_sim_rejected_requests(sim2));

  peerdeg_hist* snap = nullptr;
  peerdeg_hist* avg = nullptr;
  REQUIRE(peerdeg_sim_snapshot(sim1, &snap) == PEERDEG_OK);
  REQUIRE(peerdeg_sim_time_average(sim1, &avg) == PEERDEG_OK);
  double total = 0.0;
  for (size_t k = 0; k < peerdeg_hist_size(avg); ++k) total += peerdeg_hist_prob(avg, k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));

  peerdeg_graph* final_graph = nullptr;
  REQUIRE(peerdeg_sim_graph(sim1, &final_graph) == PEERDEG_OK);
  CHECK(peerdeg_graph_n_nodes(final_graph) == 100);

  double mean = 0.0;
  double unreachable = 0.0;
  REQUIRE(peerdeg_mean_path_length(final_graph, 20, 3, &mean, &unreachable) == PEERDEG_OK);
  CHECK(mean > 0.0);

  peerdeg_graph_free(final_graph);
  peerdeg_hist_free(snap);
  peerdeg_hist_free(avg);
  peerdeg_sim_free(sim1);
  peerdeg_sim_free(sim2);
  peerdeg_graph_free(graph);
  peerdeg_dist_free(dist);
}
