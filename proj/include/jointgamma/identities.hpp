#pragma once

// Product identities obtained by combining joint factors:
//
//   sin(pi x)          = prod (2/(2k-1))^2 (k-x)(k-1+x)                      0 < x < 1
//   tan(pi x)          = prod (2n-2+2x)(2n-2x) / ((2n-1)^2 - (2x)^2)         0 < x < 1/2
//   2^{2b-1}/sin(pi b) = prod (n-1/2)(n-1/2+b) / ((n-b)(n-1+2b))             0 < b < 1
//   Gamma(1/4)^2       = pi sqrt(2 pi) prod (2k-1)/(2k) (4k-1)/(4k-3)
//                      = 4 pi prod (4k-1)/(4k+1) ((2k+1)/(2k-1))^{1/2}       (classical)

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jointgamma/errors.hpp"
#include "jointgamma/product.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

enum class IdentityName { sin, tan, pow2, quarter };

inline const char* to_string(IdentityName name) {
  switch (name) {
    case IdentityName::sin: return "sin";
    case IdentityName::tan: return "tan";
    case IdentityName::pow2: return "pow2";
    case IdentityName::quarter: return "quarter";
  }
  return "unknown";
}

struct IdentityCheck {
  IdentityName name = IdentityName::sin;
  double argument = 0.0;
  long m = 0;
  double lhs = 0.0;  // product
  double rhs = 0.0;  // closed form
  double rel_residual = 0.0;
};

inline double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
}

inline RatioProduct sin_product_factors(double x) {
  detail::require(x > 0.0 && x < 1.0, "sin_product: x must lie in (0, 1)");
  // (k-x)(k-1+x) / (k-1/2)^2
  return RatioProduct({-x, x - 1.0}, {-0.5, -0.5}, -(x - 0.5) * (x - 0.5));
}

inline RatioProduct tan_product_factors(double x) {
  detail::require(x > 0.0 && x < 0.5, "tan_product: x must lie in (0, 1/2)");
  // (n-1+x)(n-x) / ((n-1/2-x)(n-1/2+x))
  return RatioProduct({x - 1.0, -x}, {-0.5 - x, -0.5 + x}, x - 0.25);
}

inline RatioProduct pow2_product_factors(double b) {
  detail::require(b > 0.0 && b < 1.0, "pow2_product: b must lie in (0, 1)");
  // (n-1/2)(n-1/2+b) / ((n-b)(n-1+2b))
  return RatioProduct({-0.5, b - 0.5}, {-b, 2.0 * b - 1.0}, 2.0 * (b - 0.5) * (b - 0.25));
}

inline double sin_product(double x, const TruncationPolicy& policy = TruncationPolicy::tail_corrected()) {
  return evaluate_product(sin_product_factors(x), policy).value;
}

inline double tan_product(double x, const TruncationPolicy& policy = TruncationPolicy::tail_corrected()) {
  return evaluate_product(tan_product_factors(x), policy).value;
}

inline double pow2_product(double b, const TruncationPolicy& policy = TruncationPolicy::tail_corrected()) {
  return evaluate_product(pow2_product_factors(b), policy).value;
}

struct QuarterProducts {
  double classical = 0.0;
  double modern = 0.0;
};

// (2k-1)/(2k) (4k-1)/(4k-3) = (k-1/2)(k-1/4) / (k (k-3/4))
inline RatioProduct quarter_modern_factors() { return RatioProduct({-0.5, -0.25}, {0.0, -0.75}, 0.125); }

inline double quarter_modern_prefactor() { return std::numbers::pi * std::sqrt(2.0 * std::numbers::pi); }

inline double quarter_classical_partial(long m) {
  detail::require(m >= 1, "gamma_quarter_squared: m must be >= 1");
  CompensatedSum<double> acc;
  for (long k = 1; k <= m; ++k) {
    const double kk = double(k);
    acc += std::log1p(-2.0 / (4.0 * kk + 1.0)) + 0.5 * std::log1p(2.0 / (2.0 * kk - 1.0));
  }
  return 4.0 * std::numbers::pi * std::exp(acc.value());
}

// Both m-partial products, raw.
inline QuarterProducts gamma_quarter_squared(long m) {
  detail::require(m >= 1, "gamma_quarter_squared: m must be >= 1");
  return {quarter_classical_partial(m), quarter_modern_prefactor() * quarter_modern_factors().partial(m)};
}

inline double sin_closed(double x) { return std::sin(std::numbers::pi * x); }
// exact at 1/4, where the product is identically 1
inline double tan_closed(double x) { return x == 0.25 ? 1.0 : std::tan(std::numbers::pi * x); }
inline double pow2_closed(double b) { return std::exp2(2.0 * b - 1.0) / std::sin(std::numbers::pi * b); }

inline IdentityCheck check_identity(IdentityName name, double argument,
                                    const TruncationPolicy& policy = TruncationPolicy::tail_corrected()) {
  IdentityCheck check{name, argument, policy.m};
  switch (name) {
    case IdentityName::sin:
      check.lhs = sin_product(argument, policy);
      check.rhs = sin_closed(argument);
      break;
    case IdentityName::tan:
      check.lhs = tan_product(argument, policy);
      check.rhs = tan_closed(argument);
      break;
    case IdentityName::pow2:
      check.lhs = pow2_product(argument, policy);
      check.rhs = pow2_closed(argument);
      break;
    case IdentityName::quarter:
      throw DomainError("check_identity: use gamma_quarter_squared for the quarter products");
  }
  check.rel_residual = relative_residual(check.lhs, check.rhs);
  return check;
}

}  // namespace jointgamma
