#ifndef PEERDEG_ANALYTIC_HPP
#define PEERDEG_ANALYTIC_HPP

#include <cstdint>
#include <vector>

#include "peerdeg/model.hpp"

namespace peerdeg {

/// Exponential sum function e_n(r) = sum_{k=0}^{n} r^k / k!.
/// Throws Error(overflow) once the partial sums leave the double range;
/// prefer exp_sum_scaled for large arguments.
double exp_sum(std::uint32_t n, double r);

/// e_n(r) * e^{-r}, i.e. the regularized upper incomplete gamma Q(n+1, r).
/// Always in [0, 1]; never overflows.
double exp_sum_scaled(std::uint32_t n, double r);

/// Coefficient c_j of the steady-state solution,
///
///   c_j = (phi/2a) * (phi(j+1) - 2a) /
///         ( [phi(j+1) - 2a] e_j(r) + (phi/j!) r^{j+1} ),   r = 2a/phi.
///
/// Evaluated in scaled form, so the value underflows to 0 (rather than
/// producing inf/nan) where e^{-r} is itself below the double range.
double coefficient_c(std::uint32_t j, const RateConfig& rates);

/// Steady-state probability D_{i,j} = phi/2a - c_j e_i(r) that a node with
/// desired degree j sits at actual degree i. Exactly 0 for i > j. Results
/// within 1e-9 of [0,1] are clamped; larger excursions raise
/// Error(numerical_instability).
double conditional_degree_prob(std::uint32_t i, std::uint32_t j, const RateConfig& rates);

/// Dense table of D_{i,j} for 0 <= i <= j <= max_dd at fixed rates.
///
/// Construction is O(max_dd^2): one column per j, with Q(i+1, r) built by
/// the incremental recurrence Q(n+1) = Q(n) + pi(n; r). Each column is
/// anchored at its own dominant Poisson term so the evaluation never
/// overflows or cancels, for any rate ratio (the bundled experiments reach
/// r = 2a/phi = 320..1600, far past what e_i(r) tolerates unscaled).
class ConditionalDegreeTable {
 public:
  ConditionalDegreeTable(const RateConfig& rates, std::uint32_t max_dd);

  /// D_{i,j}; 0 for i > j. j must be <= max_dd.
  double prob(std::uint32_t i, std::uint32_t j) const;

  /// Unconstrained solution \hat D_{i,j} of the auxiliary recurrence,
  /// defined for i <= j + 1 (it continues one step past the boundary).
  double unconstrained(std::uint32_t i, std::uint32_t j) const;

  /// c_j as in coefficient_c.
  double coefficient(std::uint32_t j) const;

  const RateConfig& rates() const { return rates_; }
  double ratio() const { return ratio_; }  // r = 2*alpha/phi
  std::uint32_t max_dd() const { return max_dd_; }

 private:
  RateConfig rates_;
  double ratio_;
  std::uint32_t max_dd_;
  std::vector<std::vector<double>> columns_;  // columns_[j][i], i = 0 .. j+1
  std::vector<double> coeffs_;
};

/// Absolute residual of the steady-state balance equation at (i, j):
/// for i < j:  |[phi(i+1) + 2a] D_{i,j} - phi(i+1) D_{i+1,j}
///              - phi d_{i,0} - 2a D_{i-1,j}|
/// for i == j: |phi(i+1) D_{i,i} - phi d_{i,0} - 2a D_{i-1,i}|
/// Terms with a negative index are 0. Throws Error(index_out_of_range) for
/// i > j or j > max_dd.
double steady_state_residual(const ConditionalDegreeTable& table, std::uint32_t i,
                             std::uint32_t j);

/// Residual of the auxiliary (unconstrained) recurrence on \hat D, valid
/// for i <= j. Checking it validates the generating-function solution the
/// closed form was extracted from.
double auxiliary_residual(const ConditionalDegreeTable& table, std::uint32_t i, std::uint32_t j);

/// Steady-state degree distribution D_i = sum_j D_{i,j} P(dd = j) for the
/// given desired-degree distribution.
DegreeHistogram degree_distribution(const DesiredDegreeDistribution& dist,
                                    const RateConfig& rates, double epsilon);

}  // namespace peerdeg

#endif
