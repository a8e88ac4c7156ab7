#include "peerdeg/model.hpp"

#include <cmath>
#include <string>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"
#include "peerdeg/netgen.hpp"
#include "peerdeg/poisson.hpp"

namespace peerdeg {

void validate_rates(const RateConfig& rates, RateContext context) {
  const bool finite = std::isfinite(rates.alpha) && std::isfinite(rates.phi);
  if (context == RateContext::analytic) {
    if (!finite || rates.alpha <= 0.0 || rates.phi <= 0.0) {
      raise(Errc::non_positive_rate,
            "analytic rates must be strictly positive (alpha=" + std::to_string(rates.alpha) +
                ", phi=" + std::to_string(rates.phi) + ")");
    }
  } else {
    if (!finite || rates.alpha < 0.0 || rates.phi < 0.0) {
      raise(Errc::non_positive_rate, "simulation rates must be nonnegative");
    }
  }
}

void validate_distribution(const DesiredDegreeDistribution& dist) {
  if (const auto* rg = std::get_if<RandomGraphDegree>(&dist)) {
    if (!(rg->p > 0.0) || !(rg->p < 1.0) || rg->n_nodes == 0) {
      raise(Errc::invalid_params, "random-graph distribution needs p in (0,1) and n_nodes >= 1");
    }
  } else if (const auto* sf = std::get_if<ScaleFreeDegree>(&dist)) {
    if (!(sf->a >= 0.0) || !(sf->b > 0.0) || !std::isfinite(sf->a) || !std::isfinite(sf->b)) {
      raise(Errc::invalid_params, "scale-free distribution needs a >= 0 and b > 0");
    }
  }
  // FixedDegree: any nonnegative degree is valid.
}

namespace {

std::vector<double> poisson_truncated_pmf(double lambda, double epsilon) {
  // Truncate where the remaining upper tail is below epsilon, i.e. extend
  // until the accumulated cdf exceeds 1 - epsilon, then renormalize. The
  // truncation error this leaves in any downstream mixture is bounded by
  // epsilon because every mixed-in conditional probability is <= 1.
  std::vector<double> pmf;
  pmf.reserve(static_cast<std::size_t>(lambda + 12.0 * std::sqrt(lambda) + 64.0));
  NeumaierSum cdf;
  const std::size_t hard_cap = static_cast<std::size_t>(20.0 * lambda + 2000.0);
  for (std::size_t k = 0;; ++k) {
    pmf.push_back(poisson_pmf(static_cast<std::uint32_t>(k), lambda));
    cdf.add(pmf.back());
    if (cdf.value() >= 1.0 - epsilon) break;
    if (k > hard_cap) {
      raise(Errc::numerical_instability, "poisson truncation did not converge");
    }
  }
  const double total = cdf.value();
  for (double& p : pmf) p /= total;
  return pmf;
}

}  // namespace

std::vector<double> desired_degree_pmf(const DesiredDegreeDistribution& dist, double epsilon) {
  validate_distribution(dist);
  if (!(epsilon > 0.0) || epsilon > 1e-6) {
    raise(Errc::invalid_params, "epsilon must lie in (0, 1e-6]");
  }

  if (const auto* fx = std::get_if<FixedDegree>(&dist)) {
    std::vector<double> pmf(fx->degree + 1, 0.0);
    pmf[fx->degree] = 1.0;
    return pmf;
  }

  if (const auto* rg = std::get_if<RandomGraphDegree>(&dist)) {
    return poisson_truncated_pmf(rg->p * static_cast<double>(rg->n_nodes), epsilon);
  }

  const auto& sf = std::get<ScaleFreeDegree>(dist);
  const auto counts = aiello_degree_counts(sf.a, sf.b);
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  std::vector<double> pmf(counts.size() + 1, 0.0);
  for (std::size_t x = 1; x <= counts.size(); ++x) {
    pmf[x] = static_cast<double>(counts[x - 1]) / static_cast<double>(total);
  }
  return pmf;
}

DegreeHistogram::DegreeHistogram(std::vector<double> pmf, HistogramSource source,
                                 std::uint64_t sample_count)
    : pmf_(std::move(pmf)), source_(source), sample_count_(sample_count) {
  if (pmf_.empty()) raise(Errc::invalid_params, "histogram pmf must be nonempty");
  NeumaierSum sum;
  for (double& p : pmf_) {
    if (!std::isfinite(p) || p < -1e-9 || p > 1.0 + 1e-9) {
      raise(Errc::invalid_params, "histogram probability out of [0,1]");
    }
    if (p < 0.0) p = 0.0;  // absorb sub-tolerance rounding
    if (p > 1.0) p = 1.0;
    sum.add(p);
  }
  if (std::abs(sum.value() - 1.0) > 1e-9) {
    raise(Errc::invalid_params,
          "histogram pmf must sum to 1 (got " + std::to_string(sum.value()) + ")");
  }
}

std::vector<double> DegreeHistogram::cdf() const {
  std::vector<double> out(pmf_.size());
  NeumaierSum sum;
  for (std::size_t k = 0; k < pmf_.size(); ++k) {
    sum.add(pmf_[k]);
    out[k] = std::min(sum.value(), 1.0);
  }
  return out;
}

double DegreeHistogram::mean() const {
  NeumaierSum sum;
  for (std::size_t k = 0; k < pmf_.size(); ++k) {
    sum.add(static_cast<double>(k) * pmf_[k]);
  }
  return sum.value();
}

}  // namespace peerdeg
