#pragma once

// Reference evaluators for Gamma, log-Gamma, digamma, trigamma and zeta.
//
// These never touch joint factors: they are the independent yardstick the
// rest of the library is measured against. Accuracy contract (absolute):
//   ln Gamma          < 1e-13 on (0, 60]   (Lanczos, g = 607/128, 15 terms)
//   digamma, trigamma < 1e-12               (shift to x >= 10, asymptotic)
//   zeta on (1, 2]    < 1e-12               (1e4 direct terms + Euler-Maclaurin)

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

#include "jointgamma/errors.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct OracleConfig {
  double target_abs_error = 1e-13;
  std::string_view gamma_method = "lanczos-607/128";
  std::string_view psi_method = "shift+asymptotic";
  std::string_view zeta_method = "euler-maclaurin";

  void validate() const {
    detail::require(target_abs_error >= 1e-15 && target_abs_error <= 1e-8,
                    "OracleConfig: target_abs_error must lie in [1e-15, 1e-8]");
  }
};

namespace detail {

inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosC0 = 0.999999999999997092;
inline constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

inline double lanczos_series(double x) {
  double ser = kLanczosC0;
  double y = x;
  for (double c : kLanczosCoeffs) ser += c / ++y;
  return ser;
}

// B_{2k} / (2k)!, k = 1..7
inline constexpr std::array<double, 7> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0};

// B_{2k}, k = 1..7
inline constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

inline constexpr double kPsiShiftTarget = 10.0;

}  // namespace detail

inline double ref_log_gamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "ref_log_gamma: x must be positive");
  const double t = x + detail::kLanczosG + 0.5;
  const double ser = detail::lanczos_series(x);
  return (x + 0.5) * std::log(t) - t +
         std::log(std::sqrt(2.0 * std::numbers::pi) * ser / x);
}

inline double ref_gamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "ref_gamma: x must be positive");
  if (x > 171.0) return std::exp(ref_log_gamma(x));
  const double t = x + detail::kLanczosG + 0.5;
  const double ser = detail::lanczos_series(x);
  // t^(x+1/2) is split in halves so it stays finite up to x = 171.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * ser / x * half * (half * std::exp(-t));
}

inline double ref_digamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "ref_digamma: x must be positive");
  CompensatedSum<double> shift;
  while (x < detail::kPsiShiftTarget) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double pw = inv2;
  for (std::size_t k = 0; k < detail::kBernoulli.size(); ++k) {
    series += detail::kBernoulli[k] / (2.0 * double(k + 1)) * pw;
    pw *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift.value();
}

inline double ref_trigamma(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "ref_trigamma: x must be positive");
  CompensatedSum<double> shift;
  while (x < detail::kPsiShiftTarget) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double pw = inv2 * inv;
  for (double b : detail::kBernoulli) {
    series += b * pw;
    pw *= inv2;
  }
  return inv + 0.5 * inv2 + series + shift.value();
}

// Sum_{n >= start} n^{-s} for s > 1 by Euler-Maclaurin anchored at `start`.
inline double power_tail(double s, double start) {
  detail::require(s > 1.0, "power_tail: s must exceed 1");
  detail::require(start >= 1.0, "power_tail: start must be >= 1");
  const double n = start;
  double result = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
  // rising factorial (s)_{2k-1} times n^{-s-2k+1}
  double rising = s;
  double pw = std::pow(n, -s - 1.0);
  for (std::size_t k = 0; k < detail::kBernoulliOverFactorial.size(); ++k) {
    result += detail::kBernoulliOverFactorial[k] * rising * pw;
    const double j = 2.0 * double(k + 1);
    rising *= (s + j - 1.0) * (s + j);
    pw /= n * n;
  }
  return result;
}

// Sum_{n >= start} n^{-s} ln n, obtained as -d/ds of power_tail term by term.
inline double log_power_tail(double s, double start) {
  detail::require(s > 1.0, "log_power_tail: s must exceed 1");
  detail::require(start >= 1.0, "log_power_tail: start must be >= 1");
  const double n = start;
  const double ln = std::log(n);
  const double head = std::pow(n, 1.0 - s);
  double result = head * (ln / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) +
                  0.5 * ln * std::pow(n, -s);
  double rising = s;
  double dlog_rising = 1.0 / s;  // d/ds ln (s)_{2k-1}
  double pw = std::pow(n, -s - 1.0);
  for (std::size_t k = 0; k < detail::kBernoulliOverFactorial.size(); ++k) {
    result += detail::kBernoulliOverFactorial[k] * pw * rising * (ln - dlog_rising);
    const double j = 2.0 * double(k + 1);
    rising *= (s + j - 1.0) * (s + j);
    dlog_rising += 1.0 / (s + j - 1.0) + 1.0 / (s + j);
    pw /= n * n;
  }
  return result;
}

inline constexpr int kZetaDirectTerms = 10000;

inline double ref_zeta(double s) {
  detail::require(s > 1.0 && s <= 2.0, "ref_zeta: s must lie in (1, 2]");
  CompensatedSum<double> sum;
  for (int n = kZetaDirectTerms - 1; n >= 1; --n) sum += std::pow(double(n), -s);
  return sum.value() + power_tail(s, double(kZetaDirectTerms));
}

// Gamma(x+b) Gamma(1-b) / Gamma(x): the joint factor, evaluated without
// using its product or series forms.
inline double ref_joint_factor(double x, double b) {
  detail::require(x > 0.0, "ref_joint_factor: x must be positive");
  detail::require(b >= 0.0 && b < 1.0, "ref_joint_factor: b must lie in [0, 1)");
  if (b == 0.0) return 1.0;
  return std::exp(ref_log_gamma(x + b) + ref_log_gamma(1.0 - b) - ref_log_gamma(x));
}

}  // namespace jointgamma
