#pragma once

// Gamma, 1/Gamma and ln Gamma through joint factors.
//
// For q/p in (0, 1] with p >= 3:
//
//     Gamma(q/p) = C_{p,q} prod_{k=1}^{q-1} f(k/p, 1/p) prod_{k=1}^{p-2} f(1/p, k/p)^{-q/p}
//     ln C_{p,q} = ln(2 pi) + (q-1) ln(2 sin(pi/p)) - (q/p) ln(2 pi p)
//
// which for q = 1 reduces to [Gamma(1/p)]^p = ((2 pi)^{p-1} / p) prod 1/f(1/p, k/p).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "jointgamma/errors.hpp"
#include "jointgamma/jointfactor.hpp"
#include "jointgamma/product.hpp"
#include "jointgamma/reference.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

class RationalArgument {
 public:
  RationalArgument(std::int64_t q, std::int64_t p) {
    detail::require(q > 0 && p > 0, "RationalArgument: q and p must be positive");
    const std::int64_t d = std::gcd(q, p);
    q_ = q / d;
    p_ = p / d;
  }

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  double value() const { return double(q_) / double(p_); }

  friend bool operator==(const RationalArgument&, const RationalArgument&) = default;

 private:
  std::int64_t q_;
  std::int64_t p_;
};

enum class GammaMethod { product, unit_numerator, ratio, duplication, reflection, oracle };

// wire tags are fixed by the output format
inline const char* to_string(GammaMethod method) {
  switch (method) {
    case GammaMethod::product: return "theorem31";
    case GammaMethod::unit_numerator: return "lemma31";
    case GammaMethod::ratio: return "ratio";
    case GammaMethod::duplication: return "duplication";
    case GammaMethod::reflection: return "reflection";
    case GammaMethod::oracle: return "oracle";
  }
  return "unknown";
}

struct GammaValue {
  double value = 1.0;
  double log_value = 0.0;
  double reciprocal = 1.0;
  GammaMethod method = GammaMethod::product;
  std::vector<double> mu;  // ln f(k/p, 1/p), k = 1..q-1
  std::vector<double> v;   // ln f(1/p, k/p), k = 1..p-2
  double log_constant = 0.0;  // ln C_{p,q}
  std::int64_t q = 1;  // fraction the product form was applied to
  std::int64_t p = 3;
  long m_used = 0;
  bool tail_corrected = false;
};

inline double log_gamma_constant(std::int64_t q, std::int64_t p) {
  const double two_pi = 2.0 * std::numbers::pi;
  return std::log(two_pi) + double(q - 1) * std::log(2.0 * std::sin(std::numbers::pi / double(p))) -
         (double(q) / double(p)) * std::log(two_pi * double(p));
}

// Smallest-denominator fraction within 1e-13 of v, denominator <= max_den.
inline std::optional<RationalArgument> as_small_rational(double v, std::int64_t max_den = 64) {
  if (!(v > 0.0) || !std::isfinite(v)) return std::nullopt;
  for (std::int64_t p = 1; p <= max_den; ++p) {
    const double q = std::round(v * double(p));
    if (q >= 1.0 && std::abs(v - q / double(p)) <= 1e-13 * std::max(1.0, v))
      return RationalArgument(std::int64_t(q), p);
  }
  return std::nullopt;
}

namespace detail {

inline void check_fraction_args(std::int64_t q, std::int64_t p) {
  require(p >= 3, "gamma_rational: p must be >= 3");
  require(q >= 1 && q <= p, "gamma_rational: q must lie in [1, p]");
}

// log of each f(1/p, k/p), k = 1..p-2
inline std::vector<double> log_factors_v(std::int64_t p, const TruncationPolicy& policy, long& m_used,
                                         bool& corrected) {
  std::vector<double> out;
  for (std::int64_t k = 1; k <= p - 2; ++k) {
    const Estimate e = joint_factor({1.0 / double(p), double(k) / double(p)}, policy);
    out.push_back(e.log_value);
    m_used = std::max(m_used, e.m_used);
    corrected = corrected || e.tail_corrected;
  }
  return out;
}

}  // namespace detail

inline GammaValue gamma_rational(const RationalArgument& arg, const TruncationPolicy& policy = {}) {
  policy.validate();
  // Reduced fractions with p < 3 (1/2 and 1) are lifted to the smallest
  // equivalent denominator the product formula accepts.
  std::int64_t q = arg.q();
  std::int64_t p = arg.p();
  if (p < 3) {
    const std::int64_t lift = p == 1 ? 3 : 2;
    q *= lift;
    p *= lift;
  }
  detail::check_fraction_args(q, p);

  GammaValue out;
  out.q = q;
  out.p = p;
  out.method = q == 1 ? GammaMethod::unit_numerator : GammaMethod::product;
  bool corrected = false;
  for (std::int64_t k = 1; k <= q - 1; ++k) {
    const Estimate e = joint_factor({double(k) / double(p), 1.0 / double(p)}, policy);
    out.mu.push_back(e.log_value);
    out.m_used = std::max(out.m_used, e.m_used);
    corrected = corrected || e.tail_corrected;
  }
  out.v = detail::log_factors_v(p, policy, out.m_used, corrected);
  out.tail_corrected = corrected;
  out.log_constant = log_gamma_constant(q, p);

  const double ratio = double(q) / double(p);
  CompensatedSum<double> log_sum(out.log_constant);
  for (double mu : out.mu) log_sum += mu;
  for (double v : out.v) log_sum -= ratio * v;
  out.log_value = log_sum.value();
  out.value = std::exp(out.log_value);

  // reciprocal as the product form (1/C) prod f(1/p,k/p)^{q/p} prod 1/f(k/p,1/p)
  double recip = std::exp(-out.log_constant);
  for (double v : out.v) recip *= std::pow(std::exp(v), ratio);
  for (double mu : out.mu) recip /= std::exp(mu);
  out.reciprocal = recip;
  return out;
}

inline double log_gamma_inv_p_pow(int p, const TruncationPolicy& policy = {}) {
  detail::require(p >= 3, "gamma_inv_p_pow: p must be >= 3");
  long m_used = 0;
  bool corrected = false;
  const std::vector<double> v = detail::log_factors_v(p, policy, m_used, corrected);
  CompensatedSum<double> acc(double(p - 1) * std::log(2.0 * std::numbers::pi) - std::log(double(p)));
  for (double lv : v) acc -= lv;
  return acc.value();
}

// [Gamma(1/p)]^p
inline double gamma_inv_p_pow(int p, const TruncationPolicy& policy = {}) {
  return std::exp(log_gamma_inv_p_pow(p, policy));
}

// Gamma(x) for x > 0: the product formula when x is a rational with
// denominator <= 64 (shifted into (0, 1] by Gamma(x+1) = x Gamma(x)),
// otherwise the reference oracle.
inline double gamma_positive(double x, const TruncationPolicy& policy = {}) {
  detail::require(x > 0.0 && std::isfinite(x), "gamma_positive: x must be positive");
  const auto rational = as_small_rational(x);
  if (!rational) return ref_gamma(x);
  std::int64_t q = rational->q();
  const std::int64_t p = rational->p();
  double scale = 1.0;
  while (q > p) {
    q -= p;
    scale *= double(q) / double(p);
  }
  return scale * gamma_rational(RationalArgument(q, p), policy).value;
}

// Gamma(x + b) / Gamma(x) = f(x, b) / Gamma(1 - b)
inline double gamma_ratio(double x, double b, const TruncationPolicy& policy = {}) {
  const JointFactorSpec spec{x, b};
  spec.validate();
  if (b == 0.0) return 1.0;
  return joint_factor(spec, policy).value / gamma_positive(1.0 - b, policy);
}

// Gamma(2x) = (2^{2x-1} / pi) f(x, 1/2) Gamma(x)^2
inline double gamma_duplication(double x, const TruncationPolicy& policy = {}) {
  detail::require(x > 0.0 && std::isfinite(x), "gamma_duplication: x must be positive");
  const double gx = gamma_positive(x, policy);
  return std::exp2(2.0 * x - 1.0) / std::numbers::pi * joint_factor_value(x, 0.5, policy) * gx * gx;
}

// Gamma(-t) for t = q/p in (0, 1), through Gamma(-t) = -pi / (t sin(pi t) Gamma(t)).
inline double gamma_negative(const RationalArgument& arg, const TruncationPolicy& policy = {}) {
  const double t = arg.value();
  detail::require(t > 0.0 && t < 1.0, "gamma_negative: q/p must lie in (0, 1)");
  const double g = gamma_rational(arg, policy).value;
  return -std::numbers::pi / (t * std::sin(std::numbers::pi * t) * g);
}

// Gamma(-2x) = -[2^{-2x} cosec(2 pi x) / (x f(x, 1/2))] [pi / Gamma(x)]^2, 0 < x < 1/2.
inline double gamma_negative_doubled(double x, const TruncationPolicy& policy = {}) {
  detail::require(x > 0.0 && x < 0.5, "gamma_negative_doubled: x must lie in (0, 1/2)");
  const double ratio = std::numbers::pi / gamma_positive(x, policy);
  return -std::exp2(-2.0 * x) / (std::sin(2.0 * std::numbers::pi * x) * x * joint_factor_value(x, 0.5, policy)) *
         ratio * ratio;
}

// [Gamma(-1/p)]^p = [-1/sin(pi/p)]^p (2 pi / 2^p) p^{p+1} prod_{k=1}^{p-2} f(1/p, k/p)
inline double gamma_neg_inv_p_pow(int p, const TruncationPolicy& policy = {}) {
  detail::require(p >= 3, "gamma_neg_inv_p_pow: p must be >= 3");
  long m_used = 0;
  bool corrected = false;
  const std::vector<double> v = detail::log_factors_v(p, policy, m_used, corrected);
  CompensatedSum<double> acc(-double(p) * std::log(std::sin(std::numbers::pi / double(p))) +
                             std::log(2.0 * std::numbers::pi) - double(p) * std::numbers::ln2 +
                             double(p + 1) * std::log(double(p)));
  for (double lv : v) acc += lv;
  const double magnitude = std::exp(acc.value());
  return p % 2 == 0 ? magnitude : -magnitude;
}

inline RatioProduct beta_product(double x, double y) {
  detail::require(x > 0.0 && std::isfinite(x), "beta: x must be positive");
  detail::require(y > 0.0 && y < 1.0, "beta: y must lie in (0, 1)");
  return RatioProduct({0.0, x + y - 1.0}, {y, x - 1.0}, y * (1.0 - x));
}

// B(x, y) = (1/y) prod_k k (k-1+x+y) / ((k+y)(k-1+x))
inline Estimate beta_estimate(double x, double y, const TruncationPolicy& policy = {}) {
  return evaluate_product(beta_product(x, y), policy, -std::log(y));
}

inline double beta(double x, double y, const TruncationPolicy& policy = {}) {
  return beta_estimate(x, y, policy).value;
}

}  // namespace jointgamma
