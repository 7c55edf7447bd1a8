#pragma once

#include <cmath>
#include <numbers>

namespace metrotrade {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle into [0, 2pi).
inline double wrap_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a value just below 0 can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Reduce an angle difference into (-pi, pi].
inline double principal_difference(double delta) {
  double r = std::remainder(delta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Neumaier compensated summation. Sums of the same multiset of terms agree
/// to within a few ulps regardless of order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }
  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace metrotrade
