#pragma once

// psi(t) and psi'(t) on (0, 1) from the joint-factor series
//
//   psi(t)  = -gamma - (sin(pi t)/pi) sum_n f(n, 1-t) / n^2
//   psi'(t) =          (sin(pi t)/pi) sum_n f(n, 1-t) H_n / n^2,   H_n = sum_{k<=n} 1/(k-t)
//
// split at n0: the head is summed exactly, the tail uses
// (sin(pi t)/pi) f(n, 1-t) = Gamma(n+1-t) / (Gamma(1-t) Gamma(n)) ~ n^{1-t} R(n) / Gamma(1-t)
// with R(n) = 1 + C1/n + C2/n^2 + C3/n^3. tail_order = 0 keeps only the
// leading n^{1-t} (the plain zeta-tail split).

#include <array>
#include <cmath>
#include <numbers>

#include "jointgamma/errors.hpp"
#include "jointgamma/gamma.hpp"
#include "jointgamma/reference.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

struct PolygammaResult {
  double t = 0.5;
  long n0 = 0;
  double value = 0.0;
  long head_terms = 0;
  double tail_estimate = 0.0;  // contribution added to the head (sign included)
};

inline constexpr int kMaxTailOrder = 3;

namespace detail {

inline void check_polygamma_args(double t, long n0) {
  require(t > 0.0 && t < 1.0, "polygamma: t must lie in (0, 1)");
  require(n0 >= 10, "polygamma: n0 must be >= 10");
}

inline void check_tail_order(int order) {
  require(order >= 0 && order <= kMaxTailOrder, "polygamma: tail order must lie in [0, 3]");
}

// 1, C1, C2, C3 of Gamma(n+a)/(Gamma(n) n^a) ~ sum C_j n^{-j}
inline std::array<double, 4> gamma_ratio_coeffs(double a) {
  return {1.0, a * (a - 1.0) / 2.0, a * (a - 1.0) * (a - 2.0) * (3.0 * a - 1.0) / 24.0,
          a * a * (a - 1.0) * (a - 1.0) * (a - 2.0) * (a - 3.0) / 48.0};
}

// Bernoulli polynomials B_1..B_6 at a
inline std::array<double, 6> bernoulli_polys(double a) {
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a;
  return {a - 0.5,
          a2 - a + 1.0 / 6.0,
          a3 - 1.5 * a2 + 0.5 * a,
          a4 - 2.0 * a3 + a2 - 1.0 / 30.0,
          a5 - 2.5 * a4 + 5.0 / 3.0 * a3 - a / 6.0,
          a6 - 3.0 * a5 + 2.5 * a4 - 0.5 * a2 + 1.0 / 42.0};
}

// psi(n + a) ~ ln n + sum_k (-1)^{k+1} B_k(a) / (k n^k); returns the k-th coefficient, k = 1..6
inline double psi_shift_coeff(const std::array<double, 6>& bp, int k) {
  const double sign = k % 2 == 1 ? 1.0 : -1.0;
  return sign * bp[std::size_t(k - 1)] / double(k);
}

// Walks n = 1..n0 with w_n = (sin(pi t)/pi) f(n, 1-t), w_1 = 1 - t,
// w_{n+1} = w_n (n+1-t)/n, and hands (n, w_n) to the visitor.
template <class Visit>
void walk_weights(double t, long n, Visit&& visit) {
  double w = 1.0 - t;
  for (long k = 1; k <= n; ++k) {
    visit(k, w);
    w *= (double(k) + 1.0 - t) / double(k);
  }
}

}  // namespace detail

// sum_{n>n0} n^{-1-t}, as zeta(1+t) minus the partial sum.
inline double zeta_tail(double t, long n0) {
  detail::require(t > 0.0 && t < 1.0, "zeta_tail: t must lie in (0, 1)");
  detail::require(n0 >= 1, "zeta_tail: n0 must be >= 1");
  const double s = 1.0 + t;
  if (n0 >= kZetaDirectTerms) return power_tail(s, double(n0) + 1.0);
  CompensatedSum<double> partial;
  for (long n = n0; n >= 1; --n) partial += std::pow(double(n), -s);
  return ref_zeta(s) - partial.value();
}

// Unaccelerated N-term partial sum.
inline double digamma_series_raw(double t, long terms) {
  detail::require(t > 0.0 && t < 1.0, "digamma_series_raw: t must lie in (0, 1)");
  detail::require(terms >= 1, "digamma_series_raw: N must be >= 1");
  CompensatedSum<double> head;
  detail::walk_weights(t, terms, [&](long n, double w) { head += w / (double(n) * double(n)); });
  return -kEulerGamma - head.value();
}

inline PolygammaResult digamma(double t, long n0, int tail_order = kMaxTailOrder) {
  detail::check_polygamma_args(t, n0);
  detail::check_tail_order(tail_order);
  CompensatedSum<double> head;
  detail::walk_weights(t, n0, [&](long n, double w) { head += w / (double(n) * double(n)); });

  const double a = 1.0 - t;
  const double inv_gamma = 1.0 / gamma_positive(a);
  const auto c = detail::gamma_ratio_coeffs(a);
  const double start = double(n0) + 1.0;
  CompensatedSum<double> tail(zeta_tail(t, n0));
  for (int j = 1; j <= tail_order; ++j) tail += c[std::size_t(j)] * power_tail(1.0 + t + j, start);
  const double tail_term = -inv_gamma * tail.value();

  return {t, n0, -kEulerGamma - head.value() + tail_term, n0, tail_term};
}

inline PolygammaResult trigamma(double t, long n0, int tail_order = kMaxTailOrder) {
  detail::check_polygamma_args(t, n0);
  detail::check_tail_order(tail_order);
  CompensatedSum<double> head;
  CompensatedSum<double> harmonic;
  detail::walk_weights(t, n0, [&](long n, double w) {
    harmonic += 1.0 / (double(n) - t);
    head += w * harmonic.value() / (double(n) * double(n));
  });

  const double a = 1.0 - t;
  const double inv_gamma = 1.0 / gamma_positive(a);
  const auto c = detail::gamma_ratio_coeffs(a);
  const auto bp = detail::bernoulli_polys(a);

  // psi(1-t) = psi(n0 + a) - H_{n0}, psi(n0 + a) from its expansion in 1/n0
  const double n0d = double(n0);
  double psi_shifted = std::log(n0d);
  for (int k = 6; k >= 1; --k) psi_shifted += detail::psi_shift_coeff(bp, k) * std::pow(n0d, -k);
  const double psi_a = psi_shifted - harmonic.value();

  // H_n = psi(n+a) - psi(a) ~ ln n + e0 + e1/n + e2/n^2 + ...
  std::array<double, 4> e{-psi_a, 0.0, 0.0, 0.0};
  for (int k = 1; k <= kMaxTailOrder; ++k) e[std::size_t(k)] = detail::psi_shift_coeff(bp, k);

  // sum_{n>n0} H_n R(n) n^{-1-t}, expanded to n^{-1-t-order}
  const double s = 1.0 + t;
  const double start = n0d + 1.0;
  CompensatedSum<double> tail;
  for (int j = 0; j <= tail_order; ++j) {
    double constant = 0.0;
    for (int i = 0; i <= j; ++i) constant += e[std::size_t(i)] * c[std::size_t(j - i)];
    tail += c[std::size_t(j)] * log_power_tail(s + j, start);
    tail += constant * power_tail(s + j, start);
  }
  const double tail_term = inv_gamma * tail.value();

  return {t, n0, head.value() + tail_term, n0, tail_term};
}

// Experimental comparator:
//   psi(t) ~ -gamma + [1/Gamma(1-t) - sin(pi t)/pi] sum_{n<=n0} f(n,1-t)/n^2 - zeta(1+t)/Gamma(1-t)
inline PolygammaResult digamma_zeta_comparator(double t, long n0) {
  detail::check_polygamma_args(t, n0);
  CompensatedSum<double> head;
  detail::walk_weights(t, n0, [&](long n, double w) { head += w / (double(n) * double(n)); });
  const double sin_over_pi = std::sin(std::numbers::pi * t) / std::numbers::pi;
  const double sum_f = head.value() / sin_over_pi;
  const double inv_gamma = 1.0 / gamma_positive(1.0 - t);
  const double tail_term = -ref_zeta(1.0 + t) * inv_gamma;
  return {t, n0, -kEulerGamma + (inv_gamma - sin_over_pi) * sum_f + tail_term, n0, tail_term};
}

}  // namespace jointgamma
