#ifndef PEERDEG_NETGEN_HPP
#define PEERDEG_NETGEN_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "peerdeg/model.hpp"

namespace peerdeg {

/// Simple undirected overlay: no self-loops, no parallel edges, symmetric
/// adjacency, and degree(v) <= desired(v) at all times.
class OverlayGraph {
 public:
  explicit OverlayGraph(std::vector<std::uint32_t> desired);

  std::uint32_t n_nodes() const { return static_cast<std::uint32_t>(desired_.size()); }
  std::uint32_t desired_degree(std::uint32_t v) const { return desired_[v]; }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(adjacency_[v].size());
  }
  const std::unordered_set<std::uint32_t>& neighbours(std::uint32_t v) const {
    return adjacency_[v];
  }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::uint64_t edge_count() const { return edge_count_; }

  /// Inserts {u, v}; rejects self-loops, duplicates and edges that would
  /// push an endpoint past its desired degree (Error(invalid_params)).
  void add_edge(std::uint32_t u, std::uint32_t v);

  /// Removes {u, v} if present; returns whether an edge was removed.
  bool remove_edge(std::uint32_t u, std::uint32_t v);

  /// Drops every edge incident to v; returns the former neighbours.
  std::vector<std::uint32_t> isolate(std::uint32_t v);

  /// Edges as (u, v) pairs with u < v, sorted; stable across runs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_edges() const;

  DegreeHistogram degree_histogram() const;

  std::uint32_t max_desired_degree() const { return max_desired_; }

  /// Full invariant check (simplicity, symmetry, degree <= desired);
  /// throws Error(invalid_params) on the first violation.
  void validate() const;

  bool operator==(const OverlayGraph& other) const;

 private:
  std::vector<std::uint32_t> desired_;
  std::vector<std::unordered_set<std::uint32_t>> adjacency_;
  std::uint64_t edge_count_ = 0;
  std::uint32_t max_desired_ = 0;
};

struct ConstructionReport {
  std::uint32_t unfilled_stubs = 0;  // stubs left unmatched (odd total or collisions)
  std::uint32_t rounds = 0;          // shuffle rounds used
  std::uint64_t edges_created = 0;
};

/// Per-degree node counts floor(e^a / x^b) for x = 1 .. floor(e^{a/b}).
std::vector<std::uint64_t> aiello_degree_counts(double a, double b,
                                                std::uint64_t max_degree_cap = 10000000);

/// Constructible network size: sum of the per-degree floors. This is the
/// number of nodes the generator actually creates.
std::uint64_t aiello_network_size(double a, double b, std::uint64_t max_degree_cap = 10000000);

/// Value of the closed-form size expression sum_x e^a/x^b (terms not
/// floored), truncated to an integer. Reported alongside the constructible
/// size because published sizes for this model mix the two conventions.
std::uint64_t aiello_formula_size(double a, double b, std::uint64_t max_degree_cap = 10000000);

/// Largest possible degree floor(e^{a/b}).
std::uint32_t aiello_max_degree(double a, double b);

/// Desired degrees for n_nodes peers. Fixed/RandomGraph draw n_nodes values
/// (RandomGraph by Poisson inversion); ScaleFree ignores n_nodes and returns
/// the exact multiset {x repeated floor(e^a/x^b) times}. Deterministic in
/// `seed`.
std::vector<std::uint32_t> sample_desired_degrees(const DesiredDegreeDistribution& dist,
                                                  std::uint32_t n_nodes, std::uint64_t seed);

/// Configuration-model wiring: every node gets desired(v) stubs, the global
/// stub list is shuffled and scanned pairwise; colliding pairs (self-loop or
/// duplicate) are re-shuffled for up to 100 rounds, any residue stays
/// unfilled. Best-effort by design; see the report for the residue.
OverlayGraph stub_matching(const std::vector<std::uint32_t>& desired, std::uint64_t seed,
                           ConstructionReport* report = nullptr);

/// sample_desired_degrees + stub_matching with sub-seeds derived from `seed`.
OverlayGraph generate_overlay(const DesiredDegreeDistribution& dist, std::uint32_t n_nodes,
                              std::uint64_t seed, ConstructionReport* report = nullptr);

/// Text dump: header "n_nodes m_edges", then one "u v" line per edge,
/// 0-indexed, u < v, ascending.
void write_edge_list(const OverlayGraph& graph, const std::string& path);

}  // namespace peerdeg

#endif
