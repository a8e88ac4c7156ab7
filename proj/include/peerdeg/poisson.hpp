#ifndef PEERDEG_POISSON_HPP
#define PEERDEG_POISSON_HPP

#include <cstdint>

namespace peerdeg {

/// Poisson pmf pi(k; lambda) = e^{-lambda} lambda^k / k!.
///
/// Evaluated in saddle-point form (Loader's algorithm: stirlerr + bd0), so
/// the exponent never suffers the k*log(lambda) - lambda - lgamma(k+1)
/// cancellation and the result keeps ~1e-14 relative accuracy deep into the
/// tails. Underflows gracefully to 0 where the true value is below DBL_MIN.
double poisson_pmf(std::uint32_t k, double lambda);

/// log pi(k; lambda); finite wherever the pmf is mathematically positive.
double log_poisson_pmf(std::uint32_t k, double lambda);

/// Regularized upper incomplete gamma Q(n, x) for integer order n >= 1,
/// x >= 0. For integer n this equals the Poisson cdf P[Poisson(x) <= n-1],
/// computed as a compensated sum of pmf terms: relative accuracy is a few
/// 1e-13 for n <= 2000, x <= 2000 (all terms positive, no cancellation).
double regularized_gamma_q(std::uint32_t n, double x);

}  // namespace peerdeg

#endif
