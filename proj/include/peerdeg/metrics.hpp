#ifndef PEERDEG_METRICS_HPP
#define PEERDEG_METRICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "peerdeg/model.hpp"
#include "peerdeg/netgen.hpp"

namespace peerdeg {

/// Mean number of first and second neighbours of a degree pmf:
/// z1 = <k>, z2 = <k^2> - <k> (small-clustering approximation).
std::pair<double, double> neighbour_moments(const DegreeHistogram& hist);

/// z_m = (z2/z1)^{m-1} z1; m = 1 and m = 2 return z1 and z2 exactly.
double neighbours_at_distance(double z1, double z2, std::uint32_t m);

/// Diameter estimate l = log(n/z1) / log(z2/z1) + 1, valid while the net
/// has a giant component. Throws Error(no_giant_component) when z2 <= z1,
/// Error(invalid_params) when z1 <= 0 or n_nodes <= z1.
double estimate_diameter(std::uint64_t n_nodes, double z1, double z2);

/// The estimate degrades when z2/z1 barely exceeds 1; flagged below 2.
bool diameter_reliable(double z1, double z2);

struct HistogramComparison {
  double l1 = 0.0;                      // sum_k |a_k - b_k|, in [0, 2]
  double ks = 0.0;                      // max_k |CDF_a(k) - CDF_b(k)|, in [0, 1]
  std::vector<double> per_degree_delta;  // a_k - b_k over the union support
};

HistogramComparison compare_histograms(const DegreeHistogram& a, const DegreeHistogram& b);

struct DistanceSample {
  double mean_distance = 0.0;        // over ordered reachable (source, target) pairs
  double unreachable_fraction = 0.0;  // of sampled ordered pairs
  std::uint64_t reachable_pairs = 0;
};

/// BFS from `sample_size` distinct random sources (all nodes if the sample
/// covers the graph); averages shortest-path lengths over reachable pairs.
DistanceSample measure_empirical_distances(const OverlayGraph& graph, std::uint32_t sample_size,
                                           std::uint64_t seed);

}  // namespace peerdeg

#endif
