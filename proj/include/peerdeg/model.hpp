#ifndef PEERDEG_MODEL_HPP
#define PEERDEG_MODEL_HPP

#include <cstdint>
#include <variant>
#include <vector>

namespace peerdeg {

// Per-node Poisson rates: alpha drives link-creation attempts of nodes below
// their desired degree, phi drives crashes that drop all incident links.
struct RateConfig {
  double alpha = 0.0;
  double phi = 0.0;

  double ratio() const { return 2.0 * alpha / phi; }  // r = 2*alpha/phi
};

enum class RateContext { analytic, simulation };

/// The closed-form solver divides by 2*alpha and evaluates e_n(2*alpha/phi),
/// so the analytic context rejects zero rates. The simulator accepts
/// alpha == 0 (pure decay) and phi == 0 (pure growth) as degenerate runs.
/// Throws Error(non_positive_rate).
void validate_rates(const RateConfig& rates, RateContext context);

struct FixedDegree {
  std::uint32_t degree = 0;
};

// Desired degrees Poisson-distributed with mean p * n_nodes, the degree law
// of an Erdos-Renyi graph G(n_nodes, p) in the large-n regime.
struct RandomGraphDegree {
  double p = 0.0;
  std::uint32_t n_nodes = 0;
};

// Aiello-style power law: floor(e^a / x^b) nodes of degree x, for
// x = 1 .. floor(e^{a/b}). The network size is implied by (a, b).
struct ScaleFreeDegree {
  double a = 0.0;
  double b = 0.0;
};

using DesiredDegreeDistribution = std::variant<FixedDegree, RandomGraphDegree, ScaleFreeDegree>;

/// Throws Error(invalid_params) on out-of-domain parameters.
void validate_distribution(const DesiredDegreeDistribution& dist);

/// Finite-support pmf of the desired degree, dense from degree 0.
///
/// Fixed:        single atom at `degree`.
/// RandomGraph:  Poisson(p * n_nodes), truncated where the upper tail mass
///               drops below `epsilon`, then renormalized. The atom at 0 is
///               kept (a node desiring no links is well-defined).
/// ScaleFree:    exact rational pmf floor(e^a/x^b) / sum-of-floors on
///               1 .. floor(e^{a/b}); `epsilon` is unused.
///
/// epsilon must lie in (0, 1e-6]. The result sums to 1 within 1e-12.
std::vector<double> desired_degree_pmf(const DesiredDegreeDistribution& dist, double epsilon);

enum class HistogramSource { analytic, empirical };

/// Probability mass over node degrees (dense, degree 0 upward), either
/// produced by the closed-form solver or measured from a simulated overlay.
class DegreeHistogram {
 public:
  /// Validates range and normalization (sum within 1e-9 of 1); trailing
  /// zeros are kept so the support reflects the producer's max degree.
  DegreeHistogram(std::vector<double> pmf, HistogramSource source, std::uint64_t sample_count);

  std::size_t size() const { return pmf_.size(); }  // max degree + 1
  double prob(std::size_t degree) const { return degree < pmf_.size() ? pmf_[degree] : 0.0; }
  const std::vector<double>& pmf() const { return pmf_; }

  /// Cumulative form; monotone nondecreasing, reaches 1 (within 1e-9).
  std::vector<double> cdf() const;

  double mean() const;

  HistogramSource source() const { return source_; }
  std::uint64_t sample_count() const { return sample_count_; }

 private:
  std::vector<double> pmf_;
  HistogramSource source_;
  std::uint64_t sample_count_;
};

}  // namespace peerdeg

#endif
