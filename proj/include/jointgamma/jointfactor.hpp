#pragma once

// The joint factor f(x, b) = Gamma(x+b) Gamma(1-b) / Gamma(x), x > 0, 0 <= b < 1,
//
//     f(x, b) = prod_{k>=1} k (x+k-1) / ((k-b)(x+k+b-1))
//             = exp(-sum_{n>=1} g_n(x, b)).
//
// Each factor equals 1 - c / ((k-b)(x+k+b-1)) with c = b (1-x-b), so the
// truncates f_m decrease to f when 1-x-b > 0, increase to f when 1-x-b < 0,
// and are identically 1 when x = 1-b.

#include <cmath>

#include "jointgamma/coeffs.hpp"
#include "jointgamma/errors.hpp"
#include "jointgamma/product.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

struct JointFactorSpec {
  double x = 1.0;
  double b = 0.0;

  void validate() const {
    detail::require(x > 0.0 && std::isfinite(x), "joint factor: x must be positive");
    detail::require(b >= 0.0 && b < 1.0, "joint factor: b must lie in [0, 1)");
  }

  // b (1 - x - b), formed so that x = 1 - b gives exactly zero.
  double excess_coefficient() const { return b * ((1.0 - b) - x); }

  // sign(1 - x - b): +1 truncates over-estimate, -1 under-estimate, 0 exact.
  int sigma() const {
    const double s = (1.0 - b) - x;
    return (s > 0.0) - (s < 0.0);
  }
};

inline RatioProduct joint_factor_product(const JointFactorSpec& spec) {
  spec.validate();
  return RatioProduct({0.0, spec.x - 1.0}, {-spec.b, spec.x + spec.b - 1.0},
                      -spec.excess_coefficient());
}

// f_m(x, b), the product of the first m factors.
inline double truncate(const JointFactorSpec& spec, long m) {
  detail::require(m >= 1, "truncate: m must be >= 1");
  spec.validate();
  if (spec.b == 0.0) return 1.0;
  return joint_factor_product(spec).partial(m);
}

inline Estimate joint_factor(const JointFactorSpec& spec, const TruncationPolicy& policy = {}) {
  spec.validate();
  policy.validate();
  if (spec.b == 0.0) {
    Estimate one = Estimate::from_log(0.0, 0, policy.mode != TruncationMode::fixed);
    if (policy.mode == TruncationMode::bracket) one.lower = one.upper = 1.0;
    return one;
  }
  return evaluate_product(joint_factor_product(spec), policy);
}

inline double joint_factor_value(double x, double b, const TruncationPolicy& policy = {}) {
  return joint_factor({x, b}, policy).value;
}

inline double joint_factor_log(double x, double b, const TruncationPolicy& policy = {}) {
  return joint_factor({x, b}, policy).log_value;
}

// exp(-sum_{n=1}^{N} g_n(x, b)); converges like N^{-x}.
inline double joint_factor_series(const JointFactorSpec& spec, int terms) {
  spec.validate();
  detail::require(terms >= 1, "joint_factor_series: N must be >= 1");
  const CoeffTable table = g_sequence(spec.x, spec.b, terms);
  CompensatedSum<double> sum;
  for (double g : table.g) sum += g;
  return std::exp(-sum.value());
}

}  // namespace jointgamma
