#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "peerdeg/errors.hpp"
#include "peerdeg/netgen.hpp"

using namespace peerdeg;

TEST_CASE("aiello sizes: constructible (sum of floors) vs formula value") {
  // Published sizes split across the two conventions; both are pinned here.
  CHECK(aiello_network_size(4.5, 0.8) == 876);
  CHECK(aiello_network_size(5.0, 0.9) == 1079);
  CHECK(aiello_network_size(3.0, 0.5) == 636);
  CHECK(aiello_network_size(3.2, 0.5) == 955);
  CHECK(aiello_network_size(3.2, 0.45) == 1778);
  CHECK(aiello_network_size(0.0, 1.0) == 1);  // only x = 1 contributes

  CHECK(aiello_formula_size(3.0, 0.5) == 777);
  CHECK(aiello_formula_size(3.2, 0.5) == 1167);
  CHECK(aiello_formula_size(3.2, 0.45) == 2196);
  CHECK(aiello_formula_size(4.5, 0.8) == 987);
  CHECK(aiello_formula_size(5.0, 0.9) == 1186);

  CHECK(aiello_max_degree(3.0, 0.5) == 403);
  CHECK(aiello_max_degree(3.2, 0.45) == 1225);
}

TEST_CASE("aiello parameter guards") {
  try {
    aiello_network_size(20.0, 1.0);  // e^20 degrees, past the default cap
    FAIL("expected params_too_large");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::params_too_large);
  }
  CHECK_THROWS_AS(aiello_network_size(3.0, 0.5, 100), Error);  // cap below max degree 403
  CHECK(aiello_network_size(3.0, 0.5, 403) == 636);
  CHECK_THROWS_AS(aiello_network_size(37.0, 4.0), Error);  // counts past exact-int range
  CHECK_THROWS_AS(aiello_network_size(3.0, 0.0), Error);
  CHECK_THROWS_AS(aiello_network_size(-1.0, 0.5), Error);
}

TEST_CASE("desired degree sampling") {
  const auto fixed = sample_desired_degrees(FixedDegree{30}, 1000, 7);
  REQUIRE(fixed.size() == 1000);
  for (auto dd : fixed) CHECK(dd == 30);

  // the scale-free multiset is pinned by (a, b); n_nodes is ignored
  const auto sf = sample_desired_degrees(ScaleFreeDegree{3.2, 0.45}, 10, 99);
  CHECK(sf.size() == aiello_network_size(3.2, 0.45));
  std::map<std::uint32_t, std::uint64_t> buckets;
  for (auto dd : sf) ++buckets[dd];
  const auto counts = aiello_degree_counts(3.2, 0.45);
  for (std::size_t x = 1; x <= counts.size(); ++x) {
    if (counts[x - 1] == 0) {
      CHECK(buckets.count(static_cast<std::uint32_t>(x)) == 0);
    } else {
      CHECK(buckets[static_cast<std::uint32_t>(x)] == counts[x - 1]);
    }
  }

  // random-graph draws: fixed seed, CLT bound 5 sigma / sqrt(n) around 200
  const auto rg = sample_desired_degrees(RandomGraphDegree{0.2, 1000}, 1000, 123);
  const double mean =
      std::accumulate(rg.begin(), rg.end(), 0.0) / static_cast<double>(rg.size());
  CHECK(std::abs(mean - 200.0) < 5.0 * std::sqrt(200.0) / std::sqrt(1000.0));

  CHECK(sample_desired_degrees(FixedDegree{5}, 100, 42) ==
        sample_desired_degrees(FixedDegree{5}, 100, 42));
  CHECK_THROWS_AS(sample_desired_degrees(FixedDegree{5}, 0, 1), Error);
}

TEST_CASE("stub matching forced outcomes") {
  const auto pair = stub_matching({1, 1}, 3);
  CHECK(pair.edge_count() == 1);
  CHECK(pair.has_edge(0, 1));

  // With desired = [2,1,1] most seeds produce the star {0-1, 0-2}; seeds that
  // first pair the two hub stubs together instead yield {1-2} plus two
  // permanently unmatchable stubs. Both are legal; the star case is pinned.
  ConstructionReport report;
  const auto star = stub_matching({2, 1, 1}, 1, &report);
  CHECK(star.edge_count() == 2);
  CHECK(star.has_edge(0, 1));
  CHECK(star.has_edge(0, 2));
  CHECK(report.unfilled_stubs == 0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ConstructionReport rep;
    const auto g = stub_matching({2, 1, 1}, seed, &rep);
    g.validate();
    if (rep.unfilled_stubs == 0) {
      CHECK(g.edge_count() == 2);
      CHECK(g.has_edge(0, 1));
      CHECK(g.has_edge(0, 2));
    } else {
      CHECK(rep.unfilled_stubs == 2);
      CHECK(g.edge_count() == 1);
      CHECK(g.has_edge(1, 2));
    }
  }
}

TEST_CASE("stub matching at benchmark scale: 1000 nodes of desired degree 30") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ConstructionReport report;
    const auto g = stub_matching(std::vector<std::uint32_t>(1000, 30), seed, &report);
    g.validate();
    CHECK(report.unfilled_stubs <= 30);  // <= 0.1% of 30000 stubs
    CHECK(2 * g.edge_count() + report.unfilled_stubs == 30000);
    std::uint32_t short_nodes = 0;
    for (std::uint32_t v = 0; v < g.n_nodes(); ++v) {
      CHECK(g.degree(v) <= 30);
      if (g.degree(v) < 30) ++short_nodes;
    }
    CHECK(short_nodes <= report.unfilled_stubs);
  }
}

TEST_CASE("odd stub totals leave one stub short") {
  ConstructionReport report;
  const auto g = stub_matching({3, 1, 1}, 11, &report);
  g.validate();
  CHECK(report.unfilled_stubs % 2 == 1);
  CHECK(2 * g.edge_count() + report.unfilled_stubs == 5);
}

TEST_CASE("graph invariants hold for any seed and family") {
  const std::vector<DesiredDegreeDistribution> dists = {
      RandomGraphDegree{0.05, 200},
      ScaleFreeDegree{2.0, 0.6},
      FixedDegree{7},
  };
  for (const auto& dist : dists) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ConstructionReport report;
      const auto g = generate_overlay(dist, 200, seed, &report);
      g.validate();
      for (std::uint32_t v = 0; v < g.n_nodes(); ++v) {
        CHECK(g.degree(v) <= g.desired_degree(v));
      }
    }
  }
  // scale-free generation pins its own node count
  const auto sf = generate_overlay(ScaleFreeDegree{3.0, 0.5}, 10, 4);
  CHECK(sf.n_nodes() == 636);
}

TEST_CASE("graph edit operations maintain state") {
  OverlayGraph g({2, 2, 2, 1});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_edge(0, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);  // 0 already at desired degree

  const auto former = g.isolate(2);
  CHECK(former.size() == 2);
  CHECK(g.degree(2) == 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  g.validate();

  CHECK(g.remove_edge(0, 1));
  CHECK_FALSE(g.remove_edge(0, 1));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("edge list dump format and determinism") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "peerdeg_netgen_test";
  fs::create_directories(dir);
  const auto path = (dir / "edges.txt").string();

  const auto g = stub_matching(std::vector<std::uint32_t>(20, 3), 5);
  write_edge_list(g, path);

  std::ifstream in(path);
  std::size_t n = 0;
  std::size_t m = 0;
  in >> n >> m;
  CHECK(n == 20);
  CHECK(m == g.edge_count());
  const auto edges = g.sorted_edges();
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    in >> u >> v;
    CHECK(u < v);
    CHECK(u == edges[k].first);
    CHECK(v == edges[k].second);
  }

  const auto path2 = (dir / "edges2.txt").string();
  write_edge_list(stub_matching(std::vector<std::uint32_t>(20, 3), 5), path2);
  std::ifstream a(path), b(path2);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  fs::remove_all(dir);
}
