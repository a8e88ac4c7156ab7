#ifndef PEERDEG_SIM_HPP
#define PEERDEG_SIM_HPP

#include <cstdint>
#include <vector>

#include "peerdeg/model.hpp"
#include "peerdeg/netgen.hpp"
#include "peerdeg/rng.hpp"

namespace peerdeg {

struct SimConfig {
  RateConfig rates;
  double t_end = 1e4;
  std::uint64_t seed = 0;
  // Start of the measurement window for the time-averaged histogram;
  // negative selects the default (second half, t_end / 2).
  double measure_start = -1.0;
  // Re-check every graph invariant after each event (slow; tests only).
  bool debug_validate = false;
};

struct SimCounters {
  std::uint64_t failures = 0;            // failure events (including degree-0 no-ops)
  std::uint64_t attachments = 0;         // edges created
  std::uint64_t rejected_requests = 0;   // attachment events with no eligible peer
};

// Event-driven execution of the overlay-maintenance protocol. Two competing
// Poisson channels: every node fails at rate phi (losing all links, staying
// in the network), and every node below its desired degree attempts an
// attachment at rate alpha, picking its new neighbour uniformly among
// non-neighbours that still accept links. A run is strictly sequential and
// fully determined by (initial graph, config, seed).
class Simulation {
 public:
  Simulation(OverlayGraph graph, const SimConfig& config);

  /// Executes one event; returns false once the clock has reached t_end
  /// (the clock is then clamped to exactly t_end).
  bool step();

  /// Runs events until t_end.
  void run();

  /// Failure of node v: drops all incident links; v keeps its desired
  /// degree and is immediately eligible to attach again.
  void fail_node(std::uint32_t v);

  /// Attachment attempt by a deficient node v. Returns true if an edge was
  /// created; an empty eligible set counts as a rejected request.
  bool attempt_attachment(std::uint32_t v);

  double clock() const { return clock_; }
  const OverlayGraph& graph() const { return graph_; }
  const SimCounters& counters() const { return counters_; }

  /// Empirical pmf of node degrees at the current clock.
  DegreeHistogram snapshot_degrees() const;

  /// Time-weighted average of the degree pmf over the measurement window
  /// [measure_start, min(clock, t_end)]. Requires the clock to have entered
  /// the window.
  DegreeHistogram time_averaged_histogram() const;

 private:
  void change_degree(std::uint32_t old_degree, std::uint32_t new_degree);
  void settle(std::uint32_t degree);
  void mark_deficient(std::uint32_t v);
  void unmark_if_full(std::uint32_t v);
  void debug_check() const;

  OverlayGraph graph_;
  RateConfig rates_;
  double t_end_;
  double window_start_;
  bool debug_validate_;
  RandomSource rng_;
  double clock_ = 0.0;
  SimCounters counters_;

  // nodes with degree < desired degree, with O(1) membership updates
  std::vector<std::uint32_t> deficient_;
  std::vector<std::int32_t> position_;  // -1 when not deficient

  // lazily settled occupancy integral per degree over the window
  std::vector<std::uint32_t> degree_count_;
  std::vector<double> occupancy_;
  std::vector<double> settled_at_;
};

/// Builds the simulation and runs it to t_end.
Simulation run_simulation(OverlayGraph graph, const SimConfig& config);

}  // namespace peerdeg

#endif
