#pragma once

#include <cmath>
#include <type_traits>

namespace jointgamma {

// Neumaier's variant of Kahan summation for floating point; plain summation
// for exact types (e.g. big rationals used by the tests).
template <class T>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(const T& init) : sum_(init) {}

  CompensatedSum& operator+=(const T& v) {
    if constexpr (std::is_floating_point_v<T>) {
      const T t = sum_ + v;
      if (std::abs(sum_) >= std::abs(v))
        comp_ += (sum_ - t) + v;
      else
        comp_ += (v - t) + sum_;
      sum_ = t;
    } else {
      sum_ += v;
    }
    return *this;
  }

  CompensatedSum& operator-=(const T& v) { return *this += T(-v); }

  T value() const {
    if constexpr (std::is_floating_point_v<T>)
      return sum_ + comp_;
    else
      return sum_;
  }

 private:
  T sum_{0};
  T comp_{0};
};

}  // namespace jointgamma
