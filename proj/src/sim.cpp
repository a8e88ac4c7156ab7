#include "peerdeg/sim.hpp"

#include <algorithm>
#include <cmath>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"

namespace peerdeg {

Simulation::Simulation(OverlayGraph graph, const SimConfig& config)
    : graph_(std::move(graph)),
      rates_(config.rates),
      t_end_(config.t_end),
      window_start_(config.measure_start < 0.0 ? config.t_end / 2.0 : config.measure_start),
      debug_validate_(config.debug_validate),
      rng_(config.seed) {
  validate_rates(rates_, RateContext::simulation);
  if (!(t_end_ > 0.0)) raise(Errc::invalid_params, "t_end must be positive");
  if (window_start_ >= t_end_) {
    raise(Errc::invalid_params, "measurement window must start before t_end");
  }

  const std::uint32_t n = graph_.n_nodes();
  position_.assign(n, -1);
  for (std::uint32_t v = 0; v < n; ++v) mark_deficient(v);

  const std::uint32_t buckets = graph_.max_desired_degree() + 1;
  degree_count_.assign(buckets, 0);
  occupancy_.assign(buckets, 0.0);
  settled_at_.assign(buckets, window_start_);
  for (std::uint32_t v = 0; v < n; ++v) ++degree_count_[graph_.degree(v)];
}

void Simulation::mark_deficient(std::uint32_t v) {
  if (position_[v] >= 0 || graph_.degree(v) >= graph_.desired_degree(v)) return;
  position_[v] = static_cast<std::int32_t>(deficient_.size());
  deficient_.push_back(v);
}

void Simulation::unmark_if_full(std::uint32_t v) {
  if (position_[v] < 0 || graph_.degree(v) < graph_.desired_degree(v)) return;
  const auto slot = static_cast<std::size_t>(position_[v]);
  const std::uint32_t moved = deficient_.back();
  deficient_[slot] = moved;
  position_[moved] = static_cast<std::int32_t>(slot);
  deficient_.pop_back();
  position_[v] = -1;
}

void Simulation::settle(std::uint32_t degree) {
  const double eff = std::clamp(clock_, window_start_, t_end_);
  occupancy_[degree] += degree_count_[degree] * (eff - settled_at_[degree]);
  settled_at_[degree] = eff;
}

void Simulation::change_degree(std::uint32_t old_degree, std::uint32_t new_degree) {
  settle(old_degree);
  settle(new_degree);
  --degree_count_[old_degree];
  ++degree_count_[new_degree];
}

void Simulation::fail_node(std::uint32_t v) {
  if (v >= graph_.n_nodes()) raise(Errc::index_out_of_range, "fail_node: bad node id");
  const auto former = graph_.isolate(v);
  for (std::uint32_t u : former) {
    const std::uint32_t du = graph_.degree(u);
    change_degree(du + 1, du);
    mark_deficient(u);
  }
  change_degree(static_cast<std::uint32_t>(former.size()), 0);
  mark_deficient(v);  // instantaneous re-join: eligible right away
  ++counters_.failures;
  if (debug_validate_) debug_check();
}

bool Simulation::attempt_attachment(std::uint32_t v) {
  // Eligible targets: deficient nodes other than v that are not already
  // neighbours. Count first so an empty set is detected exactly.
  std::size_t deficient_neighbours = 0;
  for (std::uint32_t u : graph_.neighbours(v)) {
    if (position_[u] >= 0) ++deficient_neighbours;
  }
  const std::size_t self = position_[v] >= 0 ? 1 : 0;
  const std::size_t eligible = deficient_.size() - deficient_neighbours - self;
  if (eligible == 0) {
    ++counters_.rejected_requests;
    if (debug_validate_) debug_check();
    return false;
  }

  std::uint32_t target = 0;
  bool found = false;
  if (8 * eligible >= deficient_.size()) {
    // Rejected picks are re-drawn within the same event, which matches
    // retrying the uniform selection until some peer accepts.
    for (int tries = 0; tries < 128 && !found; ++tries) {
      const std::uint32_t u = deficient_[rng_.index(deficient_.size())];
      if (u != v && !graph_.has_edge(v, u)) {
        target = u;
        found = true;
      }
    }
  }
  if (!found) {
    std::vector<std::uint32_t> pool;
    pool.reserve(eligible);
    for (std::uint32_t u : deficient_) {
      if (u != v && !graph_.has_edge(v, u)) pool.push_back(u);
    }
    target = pool[rng_.index(pool.size())];
  }

  graph_.add_edge(v, target);
  change_degree(graph_.degree(v) - 1, graph_.degree(v));
  change_degree(graph_.degree(target) - 1, graph_.degree(target));
  unmark_if_full(v);
  unmark_if_full(target);
  ++counters_.attachments;
  if (debug_validate_) debug_check();
  return true;
}

bool Simulation::step() {
  if (clock_ >= t_end_) return false;
  const double fail_rate = rates_.phi * static_cast<double>(graph_.n_nodes());
  const double attach_rate = rates_.alpha * static_cast<double>(deficient_.size());
  const double total = fail_rate + attach_rate;
  if (total <= 0.0) {
    clock_ = t_end_;  // nothing can ever fire again
    return false;
  }

  const double dt = rng_.exponential(total);
  if (clock_ + dt >= t_end_) {
    clock_ = t_end_;
    return false;
  }
  clock_ += dt;

  if (rng_.u01() * total < fail_rate) {
    fail_node(static_cast<std::uint32_t>(rng_.index(graph_.n_nodes())));
  } else {
    attempt_attachment(deficient_[rng_.index(deficient_.size())]);
  }
  return true;
}

void Simulation::run() {
  while (step()) {
  }
}

DegreeHistogram Simulation::snapshot_degrees() const { return graph_.degree_histogram(); }

DegreeHistogram Simulation::time_averaged_histogram() const {
  const double upto = std::clamp(clock_, window_start_, t_end_);
  if (!(upto > window_start_)) {
    raise(Errc::invalid_params, "measurement window not reached yet");
  }
  std::vector<double> mass(occupancy_.size());
  NeumaierSum total;
  for (std::size_t d = 0; d < mass.size(); ++d) {
    mass[d] = occupancy_[d] + degree_count_[d] * (upto - settled_at_[d]);
    total.add(mass[d]);
  }
  for (double& m : mass) m /= total.value();
  return DegreeHistogram(std::move(mass), HistogramSource::empirical, graph_.n_nodes());
}

void Simulation::debug_check() const {
  graph_.validate();
  std::size_t expected = 0;
  for (std::uint32_t v = 0; v < graph_.n_nodes(); ++v) {
    const bool deficient = graph_.degree(v) < graph_.desired_degree(v);
    if (deficient != (position_[v] >= 0)) {
      raise(Errc::invalid_params, "deficient-set bookkeeping out of sync");
    }
    if (deficient) ++expected;
  }
  if (expected != deficient_.size()) {
    raise(Errc::invalid_params, "deficient-set size out of sync");
  }
}

Simulation run_simulation(OverlayGraph graph, const SimConfig& config) {
  Simulation sim(std::move(graph), config);
  sim.run();
  return sim;
}

}  // namespace peerdeg
