#pragma once

// Infinite products whose k-th factor is a ratio of two monic quadratics in k,
//
//     factor_k = (k + a1)(k + a2) / ((k + b1)(k + b2)),   a1 + a2 = b1 + b2,
//
// so that factor_k = 1 + excess / ((k + b1)(k + b2)) with excess = a1 a2 - b1 b2.
// The joint factor, Cor. Beta product and the sin/tan/power-of-two products all
// have this shape. Partial products are accumulated in log space; the omitted
// tail sum_{k>m} ln factor_k is estimated by Euler-Maclaurin applied to the
// exact log-factor, whose antiderivative and derivatives are elementary.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "jointgamma/errors.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

enum class TruncationMode { fixed, tail_corrected, bracket, adaptive };

struct TruncationPolicy {
  TruncationMode mode = TruncationMode::tail_corrected;
  long m = 1000;
  double tol = 1e-10;
  long m_max = 10'000'000;

  void validate() const {
    detail::require(m >= 1, "TruncationPolicy: m must be >= 1");
    detail::require(tol > 0.0 && tol < 1.0, "TruncationPolicy: tol must lie in (0, 1)");
    detail::require(m_max >= m, "TruncationPolicy: m_max must be >= m");
  }

  static TruncationPolicy fixed(long m) { return {TruncationMode::fixed, m}; }
  static TruncationPolicy tail_corrected(long m = 1000) { return {TruncationMode::tail_corrected, m}; }
  static TruncationPolicy bracket(long m) { return {TruncationMode::bracket, m}; }
  static TruncationPolicy adaptive(double tol, long m_start = 16, long m_max = 10'000'000) {
    return {TruncationMode::adaptive, m_start, tol, m_max};
  }
};

inline const char* to_string(TruncationMode mode) {
  switch (mode) {
    case TruncationMode::fixed: return "fixed";
    case TruncationMode::tail_corrected: return "tail_corrected";
    case TruncationMode::bracket: return "bracket";
    case TruncationMode::adaptive: return "adaptive";
  }
  return "unknown";
}

struct Estimate {
  double value = 1.0;
  double log_value = 0.0;
  long m_used = 0;
  std::optional<double> lower;
  std::optional<double> upper;
  bool tail_corrected = false;

  static Estimate from_log(double log_value, long m_used, bool tail_corrected) {
    return {std::exp(log_value), log_value, m_used, std::nullopt, std::nullopt, tail_corrected};
  }
};

// Rigorous enclosure of the log of the omitted tail.
struct LogTailBound {
  double lo = 0.0;
  double hi = 0.0;
};

class RatioProduct {
 public:
  RatioProduct(std::array<double, 2> num, std::array<double, 2> den)
      : RatioProduct(num, den, num[0] * num[1] - den[0] * den[1]) {}

  // `excess` overrides a1 a2 - b1 b2 when the caller can form it without
  // cancellation (e.g. exactly zero for the joint factor at x = 1 - b).
  RatioProduct(std::array<double, 2> num, std::array<double, 2> den, double excess)
      : num_(num), den_(den), excess_(excess) {
    for (double e : num_) detail::require(e > -1.0, "RatioProduct: numerator offsets must exceed -1");
    for (double e : den_) detail::require(e > -1.0, "RatioProduct: denominator offsets must exceed -1");
    const double drift = (num_[0] + num_[1]) - (den_[0] + den_[1]);
    detail::require(std::abs(drift) <= 1e-12 * (1.0 + std::abs(num_[0]) + std::abs(num_[1])),
                    "RatioProduct: offsets must balance for the product to converge");
  }

  double excess() const { return excess_; }

  // +1: every factor exceeds 1 (partials increase), -1: every factor is below
  // 1 (partials decrease), 0: every factor is exactly 1.
  int direction() const { return (excess_ > 0.0) - (excess_ < 0.0); }

  double factor_increment(double k) const { return excess_ / ((k + den_[0]) * (k + den_[1])); }

  double log_factor(double k) const { return std::log1p(factor_increment(k)); }

  double log_partial(long m) const { return log_partial_range(1, m); }

  // sum_{k=first}^{last} ln factor_k
  double log_partial_range(long first, long last) const {
    if (direction() == 0) return 0.0;
    CompensatedSum<double> acc;
    for (long k = first; k <= last; ++k) acc += log_factor(double(k));
    return acc.value();
  }

  double partial(long m) const { return std::exp(log_partial(m)); }

  // Euler-Maclaurin estimate of sum_{k>m} ln factor_k.
  double log_tail(long m) const {
    if (direction() == 0) return 0.0;
    const double big_m = double(m) + 1.0;
    // integral_M^inf ln factor = -F(M), F(k) = sum_{+-} [(k+e) log1p(e/k) - e]
    double antiderivative = 0.0;
    for (double e : num_) antiderivative += (big_m + e) * std::log1p(e / big_m) - e;
    for (double e : den_) antiderivative -= (big_m + e) * std::log1p(e / big_m) - e;
    const auto power_sum = [&](int r) {
      double s = 0.0;
      for (double e : num_) s += std::pow(big_m + e, -r);
      for (double e : den_) s -= std::pow(big_m + e, -r);
      return s;
    };
    // d^r/dk^r ln factor = (-1)^(r-1) (r-1)! sum_{+-} (k+e)^-r
    const double d1 = power_sum(1);
    const double d3 = 2.0 * power_sum(3);
    const double d5 = 24.0 * power_sum(5);
    const double d7 = 720.0 * power_sum(7);
    return -antiderivative + 0.5 * log_factor(big_m) - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0 +
           d7 / 1209600.0;
  }

  // Enclosure of sum_{k>m} ln factor_k from sum_{k>m} 1/D_k <= int_m^inf dk / D(k).
  LogTailBound log_tail_bound(long m) const {
    if (direction() == 0) return {};
    const double lo_den = std::min(den_[0], den_[1]);
    const double gap = std::abs(den_[1] - den_[0]);
    const double start = double(m) + lo_den;
    const double u = gap / start;
    const double integral = u < 1e-8 ? (1.0 - 0.5 * u + u * u / 3.0) / start : std::log1p(u) / gap;
    const double mass = std::abs(excess_) * integral;
    if (direction() > 0) return {0.0, mass};
    // ln(1 - v) >= -v / (1 - v); v_k is largest at k = m + 1
    const double v_first = -factor_increment(double(m) + 1.0);
    return {-mass / (1.0 - v_first), 0.0};
  }

 private:
  std::array<double, 2> num_;
  std::array<double, 2> den_;
  double excess_;
};

// Evaluates the infinite product under a truncation policy. `prefactor_log`
// is added to every log-quantity (e.g. -ln y for the Beta product).
inline Estimate evaluate_product(const RatioProduct& product, const TruncationPolicy& policy,
                                 double prefactor_log = 0.0) {
  policy.validate();
  switch (policy.mode) {
    case TruncationMode::fixed:
      return Estimate::from_log(prefactor_log + product.log_partial(policy.m), policy.m, false);

    case TruncationMode::tail_corrected:
      return Estimate::from_log(
          prefactor_log + product.log_partial(policy.m) + product.log_tail(policy.m), policy.m, true);

    case TruncationMode::bracket: {
      const double head = prefactor_log + product.log_partial(policy.m);
      const LogTailBound bound = product.log_tail_bound(policy.m);
      const double lo = std::exp(head + bound.lo);
      const double hi = std::exp(head + bound.hi);
      const double log_value =
          std::clamp(head + product.log_tail(policy.m), head + bound.lo, head + bound.hi);
      Estimate est = Estimate::from_log(log_value, policy.m, true);
      est.lower = lo;
      est.upper = hi;
      est.value = std::clamp(est.value, lo, hi);
      return est;
    }

    case TruncationMode::adaptive: {
      long m = policy.m;
      CompensatedSum<double> head;
      head += product.log_partial(m);
      while (true) {
        const double log_head = head.value();
        const double tail = product.log_tail(m);
        if (std::abs(tail) <= policy.tol * std::abs(log_head) || tail == 0.0)
          return Estimate::from_log(prefactor_log + log_head, m, false);
        if (m >= policy.m_max)
          throw ConvergenceError("adaptive truncation reached m_max = " + std::to_string(policy.m_max));
        const long next = std::min(2 * m, policy.m_max);
        head += product.log_partial_range(m + 1, next);
        m = next;
      }
    }
  }
  throw DomainError("evaluate_product: unknown truncation mode");
}

}  // namespace jointgamma
