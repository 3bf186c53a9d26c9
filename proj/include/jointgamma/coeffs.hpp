#pragma once

// Coefficients of the logarithm of F(1-x-b, b, 1; t) = exp(sum_n g_n t^n),
// and their x-derivatives h_n at x = 1-b.
//
// The scalar type is a template parameter so the same code runs in double
// and in exact rational arithmetic.

#include <cstddef>
#include <vector>

#include "jointgamma/errors.hpp"
#include "jointgamma/summation.hpp"

namespace jointgamma {

template <class T>
struct BasicCoeffTable {
  T x{};
  T b{};
  std::vector<T> g;  // g[0] holds g_1

  std::size_t size() const { return g.size(); }
  // 1-based access, matching the series index.
  const T& operator()(std::size_t n) const { return g.at(n - 1); }
};

using CoeffTable = BasicCoeffTable<double>;

struct DerivTable {
  double b = 0.0;
  std::vector<double> h;  // h[0] holds h_1

  std::size_t size() const { return h.size(); }
  double operator()(std::size_t n) const { return h.at(n - 1); }
};

namespace detail {

template <class T>
void check_coeff_args(const T& x, const T& b, int count) {
  require(x > T(0), "coeffs: x must be positive");
  require(b >= T(0) && b < T(1), "coeffs: b must lie in [0, 1)");
  require(count >= 1, "coeffs: term count must be >= 1");
}

}  // namespace detail

template <class T>
T g1_closed(const T& x, const T& b) {
  return b * (T(1) - b - x);
}

template <class T>
T g2_closed(const T& x, const T& b) {
  return b * (T(1) - b - x) * ((b - T(1)) * x + b * b - b + T(2)) / T(4);
}

// Recursive generation. Only g_1 is seeded; the recursion is valid from n = 1
// and reproduces the closed-form g_2.
//   (n+1)^2 g_{n+1} = n (n + 1 - x - g_1) g_n
//                   + sum_{k=0}^{n-2} (k+1) g_{k+1} [(n-k-1) g_{n-k-1} - (n-k) g_{n-k}]
template <class T>
BasicCoeffTable<T> g_sequence(const T& x, const T& b, int count) {
  detail::check_coeff_args(x, b, count);
  BasicCoeffTable<T> table{x, b, std::vector<T>(std::size_t(count), T(0))};
  if (b == T(0)) return table;

  auto& g = table.g;
  const auto at = [&g](int n) -> const T& { return g[std::size_t(n - 1)]; };
  const T lead = g1_closed(x, b);
  g[0] = lead;
  const T shift = T(1) - x - lead;
  for (int n = 1; n < count; ++n) {
    CompensatedSum<T> conv;
    for (int k = 0; k <= n - 2; ++k) {
      const T inner = T(n - k - 1) * at(n - k - 1) - T(n - k) * at(n - k);
      conv += T(k + 1) * at(k + 1) * inner;
    }
    const T np1 = T(n + 1);
    g[std::size_t(n)] = (T(n) * (T(n) + shift) * at(n) + conv.value()) / (np1 * np1);
  }
  return table;
}

// Independent path: Taylor coefficients c_n of F(alpha, b, 1; t) followed by
// the log-series extraction n c_n = sum_{j=1}^{n} j g_j c_{n-j}.
template <class T>
BasicCoeffTable<T> g_sequence_oracle(const T& x, const T& b, int count) {
  detail::check_coeff_args(x, b, count);
  const T alpha = T(1) - x - b;
  std::vector<T> c(std::size_t(count) + 1, T(0));
  c[0] = T(1);
  for (int n = 1; n <= count; ++n) {
    const T nn = T(n);
    c[std::size_t(n)] = c[std::size_t(n - 1)] * (alpha + T(n - 1)) * (b + T(n - 1)) / (nn * nn);
  }
  BasicCoeffTable<T> table{x, b, std::vector<T>(std::size_t(count), T(0))};
  auto& g = table.g;
  for (int n = 1; n <= count; ++n) {
    CompensatedSum<T> acc(T(n) * c[std::size_t(n)]);
    for (int j = 1; j < n; ++j) acc -= T(j) * g[std::size_t(j - 1)] * c[std::size_t(n - j)];
    g[std::size_t(n - 1)] = acc.value() / T(n);
  }
  return table;
}

// h_n = -(b)_n / (n * n!), with the rising factorial taken as a product.
inline double h_closed(int n, double b) {
  detail::require(n >= 1, "h_closed: n must be >= 1");
  detail::require(b > 0.0 && b < 1.0, "h_closed: b must lie in (0, 1)");
  double ratio = 1.0;  // (b)_n / n!
  for (int k = 0; k < n; ++k) ratio *= (b + k) / (k + 1);
  return -ratio / n;
}

// h_1 .. h_count from (n+1)^2 h_{n+1} = n (n+b) h_n, h_1 = -b.
inline DerivTable h_sequence(double b, int count) {
  detail::require(b > 0.0 && b < 1.0, "h_sequence: b must lie in (0, 1)");
  detail::require(count >= 1, "h_sequence: term count must be >= 1");
  DerivTable table{b, std::vector<double>(std::size_t(count))};
  table.h[0] = -b;
  for (int n = 1; n < count; ++n) {
    const double np1 = n + 1.0;
    table.h[std::size_t(n)] = n * (n + b) * table.h[std::size_t(n - 1)] / (np1 * np1);
  }
  return table;
}

}  // namespace jointgamma
