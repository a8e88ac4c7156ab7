#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "peerdeg/errors.hpp"
#include "peerdeg/netgen.hpp"
#include "peerdeg/sim.hpp"

using namespace peerdeg;

namespace {

SimConfig config(double alpha, double phi, double t_end, std::uint64_t seed) {
  SimConfig cfg;
  cfg.rates = {alpha, phi};
  cfg.t_end = t_end;
  cfg.seed = seed;
  return cfg;
}

OverlayGraph triangle() {
  OverlayGraph g({2, 2, 2});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

}  // namespace

TEST_CASE("saturated network with phi = 0 never fires an event") {
  OverlayGraph g({1, 1});
  g.add_edge(0, 1);
  auto sim = run_simulation(g, config(0.7, 0.0, 100.0, 3));
  CHECK(sim.clock() == 100.0);
  CHECK(sim.graph() == g);
  CHECK(sim.counters().failures == 0);
  CHECK(sim.counters().attachments == 0);
  CHECK(sim.counters().rejected_requests == 0);
}

TEST_CASE("pure decay empties the graph") {
  auto initial = stub_matching(std::vector<std::uint32_t>(50, 5), 21);
  auto sim = run_simulation(initial, config(0.0, 0.1, 500.0, 4));
  for (std::uint32_t v = 0; v < sim.graph().n_nodes(); ++v) {
    CHECK(sim.graph().degree(v) == 0);
  }
  CHECK(sim.counters().failures > 0);
  CHECK(sim.counters().attachments == 0);
  const auto snapshot = sim.snapshot_degrees();
  CHECK(snapshot.prob(0) == 1.0);
}

TEST_CASE("failing a triangle vertex leaves a single edge") {
  Simulation sim(triangle(), config(0.1, 0.1, 10.0, 5));
  sim.fail_node(0);
  CHECK(sim.graph().degree(0) == 0);
  CHECK(sim.graph().degree(1) == 1);
  CHECK(sim.graph().degree(2) == 1);
  CHECK(sim.graph().has_edge(1, 2));
  CHECK(sim.counters().failures == 1);
  sim.graph().validate();

  // degree-0 failure is a counted no-op
  sim.fail_node(0);
  CHECK(sim.counters().failures == 2);
  CHECK(sim.graph().edge_count() == 1);
}

TEST_CASE("attachment picks the only eligible peer") {
  OverlayGraph g({1, 1});
  Simulation sim(g, config(0.5, 0.1, 10.0, 6));
  CHECK(sim.attempt_attachment(0));
  CHECK(sim.graph().has_edge(0, 1));
  CHECK(sim.counters().attachments == 1);
  // both are now saturated; a two-node system has no further moves
  CHECK(sim.graph().degree(0) == 1);
  CHECK(sim.graph().degree(1) == 1);
}

TEST_CASE("attachment with all peers saturated is a rejection") {
  OverlayGraph g({3, 1, 1});
  g.add_edge(1, 2);
  Simulation sim(g, config(0.5, 0.1, 10.0, 7));
  CHECK_FALSE(sim.attempt_attachment(0));
  CHECK(sim.counters().rejected_requests == 1);
  CHECK(sim.graph().degree(0) == 0);
}

TEST_CASE("attachment excludes current neighbours") {
  OverlayGraph g({4, 2, 1});
  g.add_edge(0, 1);
  Simulation sim(g, config(0.5, 0.1, 10.0, 8));
  // eligible set for 0 is exactly {2}: 1 is already a neighbour
  CHECK(sim.attempt_attachment(0));
  CHECK(sim.graph().has_edge(0, 2));
}

TEST_CASE("fresh full matching snapshots to the desired degree") {
  ConstructionReport report;
  const auto g = stub_matching(std::vector<std::uint32_t>(60, 4), 10, &report);
  REQUIRE(report.unfilled_stubs == 0);
  Simulation sim(g, config(0.1, 0.1, 10.0, 9));
  const auto snapshot = sim.snapshot_degrees();
  CHECK(snapshot.prob(4) == 1.0);
  CHECK(snapshot.sample_count() == 60);
}

TEST_CASE("runs are deterministic and bit-for-bit reproducible") {
  const auto initial = generate_overlay(FixedDegree{10}, 150, 33);
  const auto cfg = config(0.4, 0.05, 300.0, 77);
  auto a = run_simulation(initial, cfg);
  auto b = run_simulation(initial, cfg);
  CHECK(a.graph() == b.graph());
  CHECK(a.counters().failures == b.counters().failures);
  CHECK(a.counters().attachments == b.counters().attachments);
  CHECK(a.counters().rejected_requests == b.counters().rejected_requests);
  CHECK(a.clock() == b.clock());

  auto c = run_simulation(initial, config(0.4, 0.05, 300.0, 78));
  CHECK(c.counters().failures != a.counters().failures);
}

TEST_CASE("empirical failure rate converges to phi") {
  const std::uint32_t n = 200;
  const double phi = 0.1;
  const double t_end = 500.0;
  auto sim = run_simulation(OverlayGraph(std::vector<std::uint32_t>(n, 3)),
                            config(0.0, phi, t_end, 1234));
  const double expected = n * phi * t_end;
  const double sigma = std::sqrt(expected);  // Poisson count
  CHECK(std::abs(static_cast<double>(sim.counters().failures) - expected) < 3.0 * sigma);
}

TEST_CASE("per-event validation mode") {
  SimConfig cfg = config(0.3, 0.3, 50.0, 10);
  cfg.debug_validate = true;
  auto sim = run_simulation(generate_overlay(FixedDegree{4}, 30, 2), cfg);
  CHECK(sim.clock() == 50.0);
  sim.graph().validate();
}

TEST_CASE("high churn keeps degrees in the 0-6 band") {
  // alpha = 0.1, phi = 0.2: the steady state concentrates well below dd = 30
  SimConfig cfg = config(0.1, 0.2, 2000.0, 42);
  auto sim = run_simulation(generate_overlay(FixedDegree{30}, 400, 7), cfg);
  const auto hist = sim.time_averaged_histogram();
  double low_mass = 0.0;
  for (std::size_t k = 0; k <= 6; ++k) low_mass += hist.prob(k);
  CHECK(low_mass > 0.95);
}

TEST_CASE("time-averaged histogram bookkeeping") {
  OverlayGraph g({1, 1});
  SimConfig cfg = config(0.0, 0.0, 10.0, 1);
  Simulation idle(g, cfg);
  CHECK_THROWS_AS(idle.time_averaged_histogram(), Error);  // window not reached

  g.add_edge(0, 1);
  auto sim = run_simulation(g, config(0.0, 0.0, 10.0, 1));
  const auto hist = sim.time_averaged_histogram();
  CHECK(hist.prob(1) == doctest::Approx(1.0));

  SimConfig bad = config(0.1, 0.1, 10.0, 1);
  bad.measure_start = 10.0;
  CHECK_THROWS_AS(Simulation(g, bad), Error);
  CHECK_THROWS_AS(Simulation(g, config(0.1, 0.1, 0.0, 1)), Error);
  CHECK_THROWS_AS(Simulation(g, config(-0.1, 0.1, 10.0, 1)), Error);
}
