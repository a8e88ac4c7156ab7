#include "peerdeg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"
#include "peerdeg/poisson.hpp"

namespace peerdeg {

double exp_sum(std::uint32_t n, double r) {
  if (!(r > 0.0)) raise(Errc::invalid_params, "exp_sum requires r > 0");
  double term = 1.0;
  NeumaierSum sum;
  sum.add(term);
  for (std::uint32_t k = 1; k <= n; ++k) {
    term *= r / static_cast<double>(k);
    sum.add(term);
    if (!std::isfinite(term) || !std::isfinite(sum.value())) {
      raise(Errc::overflow, "exp_sum(" + std::to_string(n) + ", " + std::to_string(r) +
                                ") exceeds double range; use exp_sum_scaled");
    }
  }
  return sum.value();
}

double exp_sum_scaled(std::uint32_t n, double r) {
  if (!(r > 0.0)) raise(Errc::invalid_params, "exp_sum_scaled requires r > 0");
  return regularized_gamma_q(n + 1, r);
}

namespace {

double checked_ratio(const RateConfig& rates) {
  validate_rates(rates, RateContext::analytic);
  const double r = rates.ratio();
  if (!std::isfinite(r) || r == 0.0) {
    raise(Errc::params_too_large, "rate ratio 2*alpha/phi not representable");
  }
  return r;
}

// One column of the steady-state solution at fixed desired degree j:
//
//   D_{i,j} = phi/2a - c_j e_i(r) = 1/r - g * qs[i+1],
//
// where qs[k] = Q(k, r) e^{-anchor} is the column-scaled upper gamma and
//
//   g = A_j / (2a * sum_{i<=j} qs[i+1]),   A_j = phi(j+1) - 2a.
//
// The identity sum_{i<=j} e_i(r) = ( [phi(j+1)-2a] e_j(r) + (phi/j!) r^{j+1} ) / phi
// turns the c_j denominator into the positive sum above, which kills both
// the catastrophic cancellation (A_j Q(j+1) nearly cancels the Poisson term
// when r >> j) and the under/overflow of the unscaled e_i(r).
//
// `values` receives \hat D_{i,j} for i = 0 .. j+1 (one step past the
// boundary); `coeff` receives the true c_j, underflowing to 0 if e^{-r}
// does. log_pi[k] must hold log pi(k; r) for k = 0 .. j+1.
void solve_column(std::uint32_t j, const RateConfig& rates, double r,
                  const std::vector<double>& log_pi, std::vector<double>& values,
                  double* coeff) {
  double anchor = -std::numeric_limits<double>::infinity();
  for (std::uint32_t k = 0; k <= j + 1; ++k) anchor = std::max(anchor, log_pi[k]);

  // qs[k] = Q(k, r) e^{-anchor} via the incremental Poisson recurrence.
  std::vector<double> qs(j + 3, 0.0);
  NeumaierSum q_acc;
  NeumaierSum w_acc;
  for (std::uint32_t k = 0; k <= j + 1; ++k) {
    q_acc.add(std::exp(log_pi[k] - anchor));
    qs[k + 1] = q_acc.value();
    if (k <= j) w_acc.add(qs[k + 1]);
  }

  const double two_alpha = 2.0 * rates.alpha;
  const double inv_r = rates.phi / two_alpha;
  const double a_j = rates.phi * static_cast<double>(j + 1) - two_alpha;
  const double w = w_acc.value();
  const double g = a_j / (two_alpha * w);

  values.resize(j + 2);
  for (std::uint32_t i = 0; i <= j + 1; ++i) {
    values[i] = inv_r - g * qs[i + 1];
  }
  if (coeff) *coeff = g * std::exp(-(r + anchor));
}

std::vector<double> log_pi_upto(std::uint32_t kmax, double r) {
  std::vector<double> lp(kmax + 1);
  for (std::uint32_t k = 0; k <= kmax; ++k) lp[k] = log_poisson_pmf(k, r);
  return lp;
}

double clamp_probability(double d, std::uint32_t i, std::uint32_t j) {
  if (!std::isfinite(d) || d < -1e-9 || d > 1.0 + 1e-9) {
    raise(Errc::numerical_instability, "D_{" + std::to_string(i) + "," + std::to_string(j) +
                                           "} = " + std::to_string(d) + " outside [0,1]");
  }
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace

double coefficient_c(std::uint32_t j, const RateConfig& rates) {
  const double r = checked_ratio(rates);
  const auto lp = log_pi_upto(j + 1, r);
  std::vector<double> values;
  double coeff = 0.0;
  solve_column(j, rates, r, lp, values, &coeff);
  return coeff;
}

double conditional_degree_prob(std::uint32_t i, std::uint32_t j, const RateConfig& rates) {
  const double r = checked_ratio(rates);
  if (i > j) return 0.0;  // the protocol never exceeds the desired degree
  const auto lp = log_pi_upto(j + 1, r);
  std::vector<double> values;
  solve_column(j, rates, r, lp, values, nullptr);
  return clamp_probability(values[i], i, j);
}

ConditionalDegreeTable::ConditionalDegreeTable(const RateConfig& rates, std::uint32_t max_dd)
    : rates_(rates), ratio_(checked_ratio(rates)), max_dd_(max_dd) {
  const auto lp = log_pi_upto(max_dd + 1, ratio_);
  columns_.resize(max_dd + 1);
  coeffs_.resize(max_dd + 1);
  for (std::uint32_t j = 0; j <= max_dd; ++j) {
    solve_column(j, rates_, ratio_, lp, columns_[j], &coeffs_[j]);
    for (std::uint32_t i = 0; i <= j; ++i) {
      columns_[j][i] = clamp_probability(columns_[j][i], i, j);
    }
  }
}

double ConditionalDegreeTable::prob(std::uint32_t i, std::uint32_t j) const {
  if (j > max_dd_) raise(Errc::index_out_of_range, "desired degree beyond table");
  if (i > j) return 0.0;
  return columns_[j][i];
}

double ConditionalDegreeTable::unconstrained(std::uint32_t i, std::uint32_t j) const {
  if (j > max_dd_) raise(Errc::index_out_of_range, "desired degree beyond table");
  if (i > j + 1) raise(Errc::index_out_of_range, "unconstrained value not materialized");
  return columns_[j][i];
}

double ConditionalDegreeTable::coefficient(std::uint32_t j) const {
  if (j > max_dd_) raise(Errc::index_out_of_range, "desired degree beyond table");
  return coeffs_[j];
}

double steady_state_residual(const ConditionalDegreeTable& table, std::uint32_t i,
                             std::uint32_t j) {
  if (j > table.max_dd() || i > j) raise(Errc::index_out_of_range, "residual index out of range");
  const double phi = table.rates().phi;
  const double two_alpha = 2.0 * table.rates().alpha;
  const double below = i > 0 ? table.prob(i - 1, j) : 0.0;
  const double source = i == 0 ? phi : 0.0;
  if (i == j) {
    return std::abs(phi * (i + 1) * table.prob(i, i) - source - two_alpha * below);
  }
  return std::abs((phi * (i + 1) + two_alpha) * table.prob(i, j) -
                  phi * (i + 1) * table.prob(i + 1, j) - source - two_alpha * below);
}

double auxiliary_residual(const ConditionalDegreeTable& table, std::uint32_t i, std::uint32_t j) {
  if (j > table.max_dd() || i > j) raise(Errc::index_out_of_range, "residual index out of range");
  const double phi = table.rates().phi;
  const double two_alpha = 2.0 * table.rates().alpha;
  const double below = i > 0 ? table.unconstrained(i - 1, j) : 0.0;
  const double source = i == 0 ? phi : 0.0;
  return std::abs((phi * (i + 1) + two_alpha) * table.unconstrained(i, j) -
                  phi * (i + 1) * table.unconstrained(i + 1, j) - source - two_alpha * below);
}

DegreeHistogram degree_distribution(const DesiredDegreeDistribution& dist,
                                    const RateConfig& rates, double epsilon) {
  const double r = checked_ratio(rates);
  const auto dd_pmf = desired_degree_pmf(dist, epsilon);
  const auto max_dd = static_cast<std::uint32_t>(dd_pmf.size() - 1);

  const auto lp = log_pi_upto(max_dd + 1, r);
  std::vector<double> mix(max_dd + 1, 0.0);
  std::vector<double> column;
  for (std::uint32_t j = 0; j <= max_dd; ++j) {
    if (dd_pmf[j] == 0.0) continue;
    solve_column(j, rates, r, lp, column, nullptr);
    for (std::uint32_t i = 0; i <= j; ++i) {
      mix[i] += dd_pmf[j] * clamp_probability(column[i], i, j);
    }
  }
  return DegreeHistogram(std::move(mix), HistogramSource::analytic, 0);
}

}  // namespace peerdeg
