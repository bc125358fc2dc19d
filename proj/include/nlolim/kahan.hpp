#pragma once

#include <cmath>

namespace nlolim {

// Compensated (Kahan-Neumaier) accumulator. The second-hyperpolarizability
// sums nearly cancel for quasi-harmonic systems; naive accumulation loses
// that cancellation.
class KahanSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

  KahanSum& operator+=(double v) {
    add(v);
    return *this;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace nlolim
