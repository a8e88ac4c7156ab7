#include "peerdeg/poisson.hpp"

#include <cmath>
#include <limits>

#include "peerdeg/errors.hpp"
#include "peerdeg/ksum.hpp"

namespace peerdeg {
namespace {

// stirlerr(n) = log(n!) - log( sqrt(2*pi*n) * (n/e)^n ), n >= 1.
// Exact table for small n, asymptotic series above (Loader's scheme).
double stirlerr(std::uint32_t n) {
  static const double tab[16] = {
      0.0,
      0.08106146679532725821967,    // n = 1
      0.04134069595540929409382,
      0.02767792568499833914879,
      0.02079067210376509311152,
      0.01664469118982119216319,
      0.01387612882307074799875,
      0.01189670994589177009506,
      0.01041126526197209649748,
      0.009255462182712732917729,
      0.008330563433362871256469,   // n = 10
      0.007573675487951840794972,
      0.006942840107209529865664,
      0.00640899418800420706844,
      0.005951370112758847735624,
      0.005554733551962801371039,   // n = 15
  };
  if (n <= 15) return tab[n];

  const double s0 = 1.0 / 12.0;
  const double s1 = 1.0 / 360.0;
  const double s2 = 1.0 / 1260.0;
  const double s3 = 1.0 / 1680.0;
  const double s4 = 1.0 / 1188.0;
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const double dn = static_cast<double>(n);
  if (n > 500) return (s0 - s1 / nn) / dn;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / dn;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / dn;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / dn;
}

// bd0(x, np) = x*log(x/np) + np - x, evaluated without cancellation when
// x ~ np (series in (x-np)/(x+np)).
double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    const double v2 = v * v;
    for (int j = 1;; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double log_poisson_pmf(std::uint32_t k, double lambda) {
  if (lambda < 0.0 || std::isnan(lambda)) {
    raise(Errc::invalid_params, "poisson_pmf: lambda must be nonnegative");
  }
  if (lambda == 0.0) {
    return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  if (k == 0) return -lambda;
  const double dk = static_cast<double>(k);
  return -stirlerr(k) - bd0(dk, lambda) - 0.5 * std::log(2.0 * M_PI * dk);
}

double poisson_pmf(std::uint32_t k, double lambda) {
  if (lambda < 0.0 || std::isnan(lambda)) {
    raise(Errc::invalid_params, "poisson_pmf: lambda must be nonnegative");
  }
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return std::exp(-lambda);
  const double dk = static_cast<double>(k);
  return std::exp(-stirlerr(k) - bd0(dk, lambda)) / std::sqrt(2.0 * M_PI * dk);
}

double regularized_gamma_q(std::uint32_t n, double x) {
  if (n == 0) raise(Errc::index_out_of_range, "regularized_gamma_q: order must be >= 1");
  if (x < 0.0 || std::isnan(x)) {
    raise(Errc::invalid_params, "regularized_gamma_q: x must be nonnegative");
  }
  if (x == 0.0) return 1.0;

  // Sum of Poisson terms k = 0 .. n-1. Once k is far enough above x the
  // remaining cdf deficit is below 1 ulp, so the loop can stop early.
  NeumaierSum sum;
  const double cutoff = x + 12.0 * std::sqrt(x) + 60.0;
  for (std::uint32_t k = 0; k < n; ++k) {
    sum.add(poisson_pmf(k, x));
    if (static_cast<double>(k) > cutoff) break;
  }
  const double q = sum.value();
  return q < 1.0 ? q : 1.0;
}

}  // namespace peerdeg
