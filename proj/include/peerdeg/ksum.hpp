#ifndef PEERDEG_KSUM_HPP
#define PEERDEG_KSUM_HPP

#include <cmath>

namespace peerdeg {

// Neumaier compensated accumulator; keeps long probability sums accurate to
// a few ulps regardless of summation order.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace peerdeg

#endif
