#include "peerdeg/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"
#include "peerdeg/rng.hpp"

namespace peerdeg {

OverlayGraph::OverlayGraph(std::vector<std::uint32_t> desired)
    : desired_(std::move(desired)), adjacency_(desired_.size()) {
  if (desired_.empty()) raise(Errc::invalid_params, "overlay needs at least one node");
  for (std::uint32_t dd : desired_) max_desired_ = std::max(max_desired_, dd);
}

bool OverlayGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  return adjacency_[u].count(v) != 0;
}

void OverlayGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) raise(Errc::invalid_params, "self-loop rejected");
  if (u >= n_nodes() || v >= n_nodes()) raise(Errc::index_out_of_range, "node id out of range");
  if (has_edge(u, v)) raise(Errc::invalid_params, "duplicate edge rejected");
  if (degree(u) >= desired_[u] || degree(v) >= desired_[v]) {
    raise(Errc::invalid_params, "edge would exceed a desired degree");
  }
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

bool OverlayGraph::remove_edge(std::uint32_t u, std::uint32_t v) {
  if (adjacency_[u].erase(v) == 0) return false;
  adjacency_[v].erase(u);
  --edge_count_;
  return true;
}

std::vector<std::uint32_t> OverlayGraph::isolate(std::uint32_t v) {
  std::vector<std::uint32_t> former(adjacency_[v].begin(), adjacency_[v].end());
  for (std::uint32_t u : former) adjacency_[u].erase(v);
  edge_count_ -= former.size();
  adjacency_[v].clear();
  return former;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> OverlayGraph::sorted_edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(edge_count_);
  for (std::uint32_t u = 0; u < n_nodes(); ++u) {
    for (std::uint32_t v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

DegreeHistogram OverlayGraph::degree_histogram() const {
  std::vector<double> pmf(max_desired_ + 1, 0.0);
  const double w = 1.0 / static_cast<double>(n_nodes());
  for (std::uint32_t v = 0; v < n_nodes(); ++v) pmf[degree(v)] += w;
  return DegreeHistogram(std::move(pmf), HistogramSource::empirical, n_nodes());
}

void OverlayGraph::validate() const {
  std::uint64_t half_edges = 0;
  for (std::uint32_t v = 0; v < n_nodes(); ++v) {
    if (degree(v) > desired_[v]) raise(Errc::invalid_params, "degree exceeds desired degree");
    for (std::uint32_t u : adjacency_[v]) {
      if (u == v) raise(Errc::invalid_params, "self-loop present");
      if (u >= n_nodes()) raise(Errc::index_out_of_range, "dangling neighbour id");
      if (adjacency_[u].count(v) == 0) raise(Errc::invalid_params, "asymmetric adjacency");
    }
    half_edges += degree(v);
  }
  if (half_edges != 2 * edge_count_) raise(Errc::invalid_params, "edge count out of sync");
}

bool OverlayGraph::operator==(const OverlayGraph& other) const {
  return desired_ == other.desired_ && adjacency_ == other.adjacency_;
}

std::vector<std::uint64_t> aiello_degree_counts(double a, double b,
                                                std::uint64_t max_degree_cap) {
  if (!(a >= 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    raise(Errc::invalid_params, "aiello parameters need a >= 0, b > 0");
  }
  // Counts are exact integers only while e^a fits the double integer range.
  if (a > 36.0) raise(Errc::params_too_large, "e^a exceeds exact integer range");
  const double max_deg = std::floor(std::exp(a / b));
  if (max_deg > static_cast<double>(max_degree_cap)) {
    raise(Errc::params_too_large, "maximum degree e^{a/b} exceeds cap");
  }
  const auto xmax = static_cast<std::uint64_t>(max_deg);
  const double ea = std::exp(a);
  std::vector<std::uint64_t> counts(xmax);
  for (std::uint64_t x = 1; x <= xmax; ++x) {
    counts[x - 1] = static_cast<std::uint64_t>(std::floor(ea / std::pow(static_cast<double>(x), b)));
  }
  return counts;
}

std::uint64_t aiello_network_size(double a, double b, std::uint64_t max_degree_cap) {
  const auto counts = aiello_degree_counts(a, b, max_degree_cap);
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t aiello_formula_size(double a, double b, std::uint64_t max_degree_cap) {
  if (!(a >= 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    raise(Errc::invalid_params, "aiello parameters need a >= 0, b > 0");
  }
  if (a > 36.0) raise(Errc::params_too_large, "e^a exceeds exact integer range");
  const double max_deg = std::floor(std::exp(a / b));
  if (max_deg > static_cast<double>(max_degree_cap)) {
    raise(Errc::params_too_large, "maximum degree e^{a/b} exceeds cap");
  }
  const auto xmax = static_cast<std::uint64_t>(max_deg);
  const double ea = std::exp(a);
  NeumaierSum sum;
  for (std::uint64_t x = 1; x <= xmax; ++x) {
    sum.add(ea / std::pow(static_cast<double>(x), b));
  }
  return static_cast<std::uint64_t>(std::floor(sum.value()));
}

std::uint32_t aiello_max_degree(double a, double b) {
  if (!(a >= 0.0) || !(b > 0.0)) raise(Errc::invalid_params, "aiello parameters need a >= 0, b > 0");
  return static_cast<std::uint32_t>(std::floor(std::exp(a / b)));
}

std::vector<std::uint32_t> sample_desired_degrees(const DesiredDegreeDistribution& dist,
                                                  std::uint32_t n_nodes, std::uint64_t seed) {
  validate_distribution(dist);

  if (const auto* sf = std::get_if<ScaleFreeDegree>(&dist)) {
    // The Aiello construction fixes both the size and the exact multiset;
    // n_nodes and seed play no role here.
    (void)seed;
    const auto counts = aiello_degree_counts(sf->a, sf->b);
    std::vector<std::uint32_t> out;
    for (std::size_t x = 1; x <= counts.size(); ++x) {
      out.insert(out.end(), counts[x - 1], static_cast<std::uint32_t>(x));
    }
    return out;
  }

  if (n_nodes == 0) raise(Errc::invalid_params, "n_nodes must be positive");

  if (const auto* fx = std::get_if<FixedDegree>(&dist)) {
    return std::vector<std::uint32_t>(n_nodes, fx->degree);
  }

  // RandomGraph: Poisson draws by cdf inversion over the truncated pmf.
  const auto pmf = desired_degree_pmf(dist, 1e-12);
  std::vector<double> cdf(pmf.size());
  NeumaierSum acc;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    acc.add(pmf[k]);
    cdf[k] = acc.value();
  }
  cdf.back() = 1.0;
  RandomSource rng(seed);
  std::vector<std::uint32_t> out(n_nodes);
  for (auto& dd : out) {
    const double u = rng.u01();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    dd = static_cast<std::uint32_t>(it - cdf.begin());
  }
  return out;
}

OverlayGraph stub_matching(const std::vector<std::uint32_t>& desired, std::uint64_t seed,
                           ConstructionReport* report) {
  OverlayGraph graph(desired);
  RandomSource rng(seed);

  std::vector<std::uint32_t> stubs;
  for (std::uint32_t v = 0; v < graph.n_nodes(); ++v) {
    stubs.insert(stubs.end(), desired[v], v);
  }

  ConstructionReport rep;
  constexpr std::uint32_t kMaxRounds = 100;
  while (stubs.size() >= 2 && rep.rounds < kMaxRounds) {
    ++rep.rounds;
    rng.shuffle(stubs);
    std::vector<std::uint32_t> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const std::uint32_t u = stubs[i];
      const std::uint32_t v = stubs[i + 1];
      if (u == v || graph.has_edge(u, v)) {
        leftover.push_back(u);
        leftover.push_back(v);
        continue;
      }
      graph.add_edge(u, v);
      ++rep.edges_created;
    }
    if (stubs.size() % 2 == 1) leftover.push_back(stubs.back());
    stubs = std::move(leftover);
  }

  rep.unfilled_stubs = static_cast<std::uint32_t>(stubs.size());
  if (report) *report = rep;
  return graph;
}

OverlayGraph generate_overlay(const DesiredDegreeDistribution& dist, std::uint32_t n_nodes,
                              std::uint64_t seed, ConstructionReport* report) {
  const auto desired = sample_desired_degrees(dist, n_nodes, mix_seed(seed));
  return stub_matching(desired, mix_seed(seed + 1), report);
}

void write_edge_list(const OverlayGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open " + path + " for writing");
  const auto edges = graph.sorted_edges();
  out << graph.n_nodes() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  if (!out) raise(Errc::io_error, "short write to " + path);
}

}  // namespace peerdeg
