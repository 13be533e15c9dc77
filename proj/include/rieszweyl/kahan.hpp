#pragma once

namespace rieszweyl {

// Compensated (Kahan-Babuska-Neumaier) running sum. Terms must be added in a
// fixed order for results to be reproducible bit for bit.
template <typename T = double>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;

  constexpr CompensatedSum& operator+=(T value) noexcept {
    const T t = sum_ + value;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (value >= 0 ? value : -value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr T value() const noexcept { return sum_ + compensation_; }

 private:
  T sum_{0};
  T compensation_{0};
};

}  // namespace rieszweyl
