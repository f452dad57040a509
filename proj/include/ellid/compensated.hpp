#pragma once

namespace ellid {

// Kahan-Babuska (Neumaier) compensated accumulator. Summation order is the
// caller's; the accumulator never reorders, so results are bit-reproducible.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if ((sum_ < 0 ? -sum_ : sum_) >= (value < 0 ? -value : value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(double value) { return *this += -value; }

  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace ellid
