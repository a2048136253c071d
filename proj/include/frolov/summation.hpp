#pragma once

#include <cmath>
#include <utility>

namespace frolov {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const noexcept { return sum_ + comp_; }
  /// Unrounded (sum, compensation) pair.
  std::pair<double, double> parts() const noexcept { return {sum_, comp_}; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Double-double accumulator (hi + lo, error-free TwoSum on every add).
class DoubleDoubleSum {
 public:
  void add(double x) noexcept {
    double s = hi_ + x;
    const double bb = s - hi_;
    const double err = (hi_ - (s - bb)) + (x - bb);
    lo_ += err;
    hi_ = s + lo_;
    lo_ = lo_ - (hi_ - s);
  }
  /// Adds the exact product a*b (TwoProd via fma).
  void add_product(double a, double b) noexcept {
    const double p = a * b;
    const double e = std::fma(a, b, -p);
    add(p);
    add(e);
  }
  void add(const DoubleDoubleSum& other) noexcept {
    add(other.hi_);
    add(other.lo_);
  }
  double value() const noexcept { return hi_ + lo_; }
  std::pair<double, double> parts() const noexcept { return {hi_, lo_}; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

}  // namespace frolov
