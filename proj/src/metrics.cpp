#include "peerdeg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"
#include "peerdeg/rng.hpp"

namespace peerdeg {

std::pair<double, double> neighbour_moments(const DegreeHistogram& hist) {
  NeumaierSum z1;
  NeumaierSum z2;
  const auto& pmf = hist.pmf();
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    const double dk = static_cast<double>(k);
    z1.add(dk * pmf[k]);
    z2.add(dk * (dk - 1.0) * pmf[k]);
  }
  return {z1.value(), z2.value()};
}

double neighbours_at_distance(double z1, double z2, std::uint32_t m) {
  if (!(z1 > 0.0)) raise(Errc::undefined_for_zero_z1, "z_m undefined for z1 <= 0");
  if (m == 0) raise(Errc::invalid_params, "distance m must be positive");
  if (m == 1) return z1;
  if (m == 2) return z2;
  return std::pow(z2 / z1, static_cast<double>(m - 1)) * z1;
}

double estimate_diameter(std::uint64_t n_nodes, double z1, double z2) {
  if (!(z1 > 0.0)) raise(Errc::undefined_for_zero_z1, "diameter undefined for z1 <= 0");
  if (!(z2 > z1)) {
    raise(Errc::no_giant_component, "no giant component (z2 <= z1); estimate invalid");
  }
  if (!(static_cast<double>(n_nodes) > z1)) {
    raise(Errc::invalid_params, "diameter estimate needs n_nodes > z1");
  }
  return std::log(static_cast<double>(n_nodes) / z1) / std::log(z2 / z1) + 1.0;
}

bool diameter_reliable(double z1, double z2) { return z1 > 0.0 && z2 / z1 >= 2.0; }

HistogramComparison compare_histograms(const DegreeHistogram& a, const DegreeHistogram& b) {
  const std::size_t support = std::max(a.size(), b.size());
  HistogramComparison cmp;
  cmp.per_degree_delta.resize(support);
  NeumaierSum l1;
  NeumaierSum cdf_gap;  // CDF_a - CDF_b, accumulated
  double ks = 0.0;
  for (std::size_t k = 0; k < support; ++k) {
    const double delta = a.prob(k) - b.prob(k);
    cmp.per_degree_delta[k] = delta;
    l1.add(std::abs(delta));
    cdf_gap.add(delta);
    ks = std::max(ks, std::abs(cdf_gap.value()));
  }
  cmp.l1 = l1.value();
  cmp.ks = std::min(ks, 1.0);
  return cmp;
}

DistanceSample measure_empirical_distances(const OverlayGraph& graph, std::uint32_t sample_size,
                                           std::uint64_t seed) {
  if (sample_size == 0) raise(Errc::invalid_params, "sample_size must be positive");
  const std::uint32_t n = graph.n_nodes();
  std::vector<std::uint32_t> sources(n);
  std::iota(sources.begin(), sources.end(), 0u);
  if (sample_size < n) {
    RandomSource rng(seed);
    rng.shuffle(sources);
    sources.resize(sample_size);
  }

  NeumaierSum total_distance;
  std::uint64_t reachable = 0;
  std::uint64_t unreachable = 0;
  std::vector<std::int32_t> dist(n);
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t s : sources) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    frontier.assign(1, s);
    std::size_t head = 0;
    while (head < frontier.size()) {
      const std::uint32_t u = frontier[head++];
      for (std::uint32_t v : graph.neighbours(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          frontier.push_back(v);
        }
      }
    }
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == s) continue;
      if (dist[t] < 0) {
        ++unreachable;
      } else {
        total_distance.add(dist[t]);
        ++reachable;
      }
    }
  }

  DistanceSample out;
  out.reachable_pairs = reachable;
  const std::uint64_t pairs = reachable + unreachable;
  out.unreachable_fraction = pairs ? static_cast<double>(unreachable) / pairs : 0.0;
  out.mean_distance = reachable ? total_distance.value() / reachable : 0.0;
  return out;
}

}  // namespace peerdeg
