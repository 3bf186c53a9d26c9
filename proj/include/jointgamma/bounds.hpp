#pragma once

// Bound families built from m-truncates of joint factors, and the harness
// that checks each claimed inequality on a grid.
//
// Every check returns a signed slack ("margin"): positive means the claimed
// inequality holds at that point. Margins are relative for Gamma-valued
// bounds and absolute for the log-valued Stirling remainders.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <locale>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "jointgamma/errors.hpp"
#include "jointgamma/gamma.hpp"
#include "jointgamma/jointfactor.hpp"
#include "jointgamma/reference.hpp"

namespace jointgamma {

struct AlzerConstants {
  double alpha = 1.0 - kEulerGamma;
  double beta = (std::numbers::pi * std::numbers::pi - 6.0 * kEulerGamma) / 12.0;
};

struct StirlingDecomposition {
  double x = 1.0;
  double mu = 0.0;  // ln Gamma(x) - [ln sqrt(2 pi) + (x - 1/2) ln x - x]
  double v = 0.0;   // ln Gamma(x + 1/2) - [ln sqrt(2 pi) + x ln x - x]
};

// Uniform samples of an interval, or an explicit list.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;
  bool open_lo = false;
  bool open_hi = false;
  std::vector<double> explicit_values;

  static Grid closed(double lo, double hi, int points) { return {lo, hi, points, false, false, {}}; }
  static Grid open(double lo, double hi, int points) { return {lo, hi, points, true, true, {}}; }
  static Grid list(std::vector<double> values) {
    Grid g;
    g.explicit_values = std::move(values);
    g.points = int(g.explicit_values.size());
    return g;
  }

  void validate() const {
    if (!explicit_values.empty()) return;
    detail::require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "Grid: need lo < hi");
    detail::require(points >= 1, "Grid: points must be >= 1");
    detail::require(points >= 2 || open_lo || open_hi, "Grid: a closed grid needs >= 2 points");
  }

  std::vector<double> values() const {
    if (!explicit_values.empty()) return explicit_values;
    validate();
    const int intervals = points - 1 + int(open_lo) + int(open_hi);
    const double h = (hi - lo) / double(intervals);
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) out[std::size_t(i)] = lo + double(i + int(open_lo)) * h;
    if (!open_hi && points > 1) out.back() = hi;
    return out;
  }

  bool contains(double x) const {
    if (!explicit_values.empty()) return std::find(explicit_values.begin(), explicit_values.end(), x) != explicit_values.end();
    const bool above = open_lo ? x > lo : x >= lo;
    const bool below = open_hi ? x < hi : x <= hi;
    return above && below;
  }

  std::string describe() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    if (!explicit_values.empty()) {
      os << '{';
      for (std::size_t i = 0; i < explicit_values.size(); ++i) os << (i ? ", " : "") << explicit_values[i];
      os << '}';
      return os.str();
    }
    os << (open_lo ? '(' : '[') << lo << ", " << hi << (open_hi ? ')' : ']') << " n=" << points << " uniform";
    return os.str();
  }
};

struct ClaimReport {
  std::string name;
  std::string grid;
  long checks = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_at = std::numeric_limits<double>::quiet_NaN();
  long equalities = 0;
  bool informational = false;  // reported, never counted as a violation
  bool holds = true;
};

struct BoundReport {
  std::string suite;
  std::string grid;
  long checks = 0;
  long violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  bool holds = true;
  std::vector<ClaimReport> claims;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------- App 1

struct App1Bounds {
  int p = 3;
  double bound_pos = 0.0;          // (2 pi/p)^{1-1/p} ((p-1)!)^{2/p}
  double bound_neg = 0.0;          // -(pi/sin(pi/p)) (2 pi)^{1-1/p}, as printed
  double bound_neg_reflected = 0.0;  // -p pi / (sin(pi/p) bound_pos)
  double gamma_pos = 0.0;          // Gamma(1/p), oracle
  double gamma_neg = 0.0;          // Gamma(-1/p), oracle through reflection
  std::string direction_pos;
  std::string direction_neg;
};

inline App1Bounds app1_bounds(int p) {
  detail::require(p >= 3, "app1_bounds: p must be >= 3");
  const double pd = double(p);
  const double two_pi = 2.0 * std::numbers::pi;
  const double s = std::sin(std::numbers::pi / pd);
  App1Bounds out;
  out.p = p;
  out.bound_pos = std::pow(two_pi / pd, 1.0 - 1.0 / pd) * std::exp(2.0 / pd * ref_log_gamma(pd));
  out.bound_neg = -(std::numbers::pi / s) * std::pow(two_pi, 1.0 - 1.0 / pd);
  out.bound_neg_reflected = -pd * std::numbers::pi / (s * out.bound_pos);
  out.gamma_pos = ref_gamma(1.0 / pd);
  out.gamma_neg = -pd * std::numbers::pi / (s * out.gamma_pos);
  out.direction_pos = out.gamma_pos > out.bound_pos ? "lower bound" : "upper bound";
  out.direction_neg = out.gamma_neg > out.bound_neg ? "lower bound" : "upper bound";
  return out;
}

// ---------------------------------------------------------------- App 5

inline double app5_upper(double alpha) {
  detail::require(alpha > 0.0 && alpha < 1.0, "app5_upper: alpha must lie in (0, 1)");
  return 1.0 / alpha;
}

// ---------------------------------------------------------------- App 6

// (1/y) prod_{k<=m} k (k-1+x+y) / ((k+y)(k-1+x)); below B(x,y) for x < 1, above for x > 1.
inline double app6_beta_bound(double x, double y, long m) {
  detail::require(x > 0.0 && std::isfinite(x), "app6_beta_bound: x must be positive");
  detail::require(x != 1.0, "app6_beta_bound: x = 1 makes every factor 1");
  detail::require(y > 0.0 && y < 1.0, "app6_beta_bound: y must lie in (0, 1)");
  detail::require(m >= 1, "app6_beta_bound: m must be >= 1");
  return std::exp(beta_product(x, y).log_partial(m) - std::log(y));
}

inline double ref_beta(double x, double y) {
  return std::exp(ref_log_gamma(x) + ref_log_gamma(y) - ref_log_gamma(x + y));
}

// ---------------------------------------------------------------- App 7

// Omega_{n-1} / Omega_n = f((n+1)/2, 1/2) / pi, Omega_n the volume of the unit n-ball.
inline double app7_ball_ratio(int n, const TruncationPolicy& policy = {}) {
  detail::require(n >= 1, "app7_ball_ratio: n must be >= 1");
  return joint_factor_value(0.5 * (n + 1.0), 0.5, policy) / std::numbers::pi;
}

inline double ref_ball_ratio(int n) {
  const double h = 0.5 * n;
  return std::exp(ref_log_gamma(h + 1.0) - ref_log_gamma(h + 0.5)) / std::sqrt(std::numbers::pi);
}

struct BallRatioBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// lower = f_s((n+1)/2, 1/2)/pi, upper = (n/2) prod_{k<=m} (2k-1)/(2k) (2k+n-1)/(2k+n-2)
inline BallRatioBounds app7_bounds(int n, long s, long m) {
  detail::require(n >= 1, "app7_bounds: n must be >= 1");
  detail::require(s >= 1 && m >= 1, "app7_bounds: s and m must be >= 1");
  const double lower = truncate({0.5 * (n + 1.0), 0.5}, s) / std::numbers::pi;
  double upper = 0.5 * n;
  if (n == 1) return {lower, upper};  // every upper factor is 1
  CompensatedSum<double> log_upper;
  for (long k = 1; k <= m; ++k) {
    const double kk = double(k);
    log_upper += std::log1p(-1.0 / (2.0 * kk)) + std::log1p(1.0 / (2.0 * kk + n - 2.0));
  }
  return {lower, upper * std::exp(log_upper.value())};
}

// ---------------------------------------------------------------- App 8

// I_alpha = int_0^{pi/2} sin^alpha = (1/alpha) f(alpha/2, 1/2)
inline double app8_wallis(double alpha, const TruncationPolicy& policy = {}) {
  detail::require(alpha > 0.0 && std::isfinite(alpha), "app8_wallis: alpha must be positive");
  return joint_factor_value(0.5 * alpha, 0.5, policy) / alpha;
}

inline double app8_bound(double alpha, long m) {
  detail::require(alpha > 0.0 && std::isfinite(alpha), "app8_bound: alpha must be positive");
  return truncate({0.5 * alpha, 0.5}, m) / alpha;
}

inline double ref_wallis(double alpha) {
  return 0.5 * std::exp(ref_log_gamma(0.5 * (alpha + 1.0)) + ref_log_gamma(0.5) - ref_log_gamma(0.5 * alpha + 1.0));
}

// Direct quadrature of sin^alpha on [0, pi/2] (double-exponential rule, which
// copes with the sqrt-type endpoint behaviour at small alpha).
inline double wallis_quadrature(double alpha, double tol = 1e-12) {
  detail::require(alpha > 0.0 && std::isfinite(alpha), "wallis_quadrature: alpha must be positive");
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate([alpha](double th) { return std::pow(std::sin(th), alpha); }, 0.0,
                        0.5 * std::numbers::pi, tol);
}

// pi/(2(alpha+1)) < I_alpha < (pi/2)^{alpha+1}/(alpha+1)
struct TrigBounds {
  double lower = 0.0;
  double upper = 0.0;
};

inline TrigBounds wallis_trig_bounds(double alpha) {
  const double a1 = alpha + 1.0;
  return {std::numbers::pi / (2.0 * a1), std::pow(0.5 * std::numbers::pi, a1) / a1};
}

// ---------------------------------------------------------------- App 9

struct AlzerBounds {
  double a = 0.0;  // x^{alpha x - 1}
  double d = 0.0;  // x^{beta (x-1) - gamma}
  double e = 0.0;  // x^{x - 1 - gamma}
};

inline AlzerBounds app9_alzer(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "app9_alzer: x must be positive");
  const AlzerConstants k;
  return {std::pow(x, k.alpha * x - 1.0), std::pow(x, k.beta * (x - 1.0) - kEulerGamma),
          std::pow(x, x - 1.0 - kEulerGamma)};
}

struct RefinedAlzer {
  double k = 0.0;  // sqrt(pi) A(x+1/2) / f_m(x, 1/2)
  double l = 0.0;  // sqrt(pi) E(x+1/2) / f_m(x, 1/2)
};

inline RefinedAlzer app9_refined(double x, long m) {
  detail::require(x > 0.0 && std::isfinite(x), "app9_refined: x must be positive");
  const AlzerBounds shifted = app9_alzer(x + 0.5);
  const double scale = std::sqrt(std::numbers::pi) / truncate({x, 0.5}, m);
  return {scale * shifted.a, scale * shifted.e};
}

// ---------------------------------------------------------------- App 10

inline StirlingDecomposition app10_stirling(double x) {
  detail::require(x > 0.0 && std::isfinite(x), "app10_stirling: x must be positive");
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  const double lx = std::log(x);
  return {x, ref_log_gamma(x) - (half_log_two_pi + (x - 0.5) * lx - x),
          ref_log_gamma(x + 0.5) - (half_log_two_pi + x * lx - x)};
}

// Schuster: -(1/24)(1/x + 1/(120 x^3)) <= v <= -(1/24)(1/x - 1/(8 x^3))
inline double schuster_lower(double x) { return -(1.0 / x + 1.0 / (120.0 * x * x * x)) / 24.0; }
inline double schuster_upper(double x) { return -(1.0 / x - 1.0 / (8.0 * x * x * x)) / 24.0; }

// ln[4 sqrt(x) / ((1+2x) sqrt(pi))]
inline double app10_log_term(double x) {
  return std::log(4.0 * std::sqrt(x) / ((1.0 + 2.0 * x) * std::sqrt(std::numbers::pi)));
}

// right side of claim (i)
inline double app10_claim_i_bound(double x) { return 1.0 / (12.0 * x) + app10_log_term(x); }

// lower bound on mu from Schuster's lower bound on v, read with the minus sign
inline double app10_mu_lower(double x) { return -app10_log_term(x) + schuster_lower(x); }

// 96 ln(2/pi) x^3 + 24 x^2 - 1
inline double app10_polynomial(double x) {
  return 96.0 * std::log(2.0 / std::numbers::pi) * x * x * x + 24.0 * x * x - 1.0;
}

// ---------------------------------------------------------------- harness

struct Sample {
  double margin = 0.0;
  bool equality = false;  // an allowed equality case; counts as holding
};

struct Claim {
  std::string name;
  Grid default_grid;
  std::function<Sample(double)> check;
  bool informational = false;
  std::function<bool(double)> admissible = nullptr;  // extra exclusions on custom grids
};

namespace detail {

inline Sample slack(double margin) { return {margin, false}; }
inline double rel(double bigger, double smaller, double scale) {
  return (bigger - smaller) / std::abs(scale);
}

inline std::vector<double> integer_points(const Grid& g) {
  std::vector<double> out;
  for (double v : g.values()) {
    const double r = std::round(v);
    if (out.empty() || out.back() != r) out.push_back(r);
  }
  return out;
}

inline std::vector<Claim> suite_app1() {
  const auto pos = [](double p) {
    const App1Bounds b = app1_bounds(int(p));
    return slack(rel(b.gamma_pos, b.bound_pos, b.gamma_pos));
  };
  const auto neg = [](double p) {
    const App1Bounds b = app1_bounds(int(p));
    return slack(rel(b.gamma_neg, b.bound_neg, b.gamma_neg));
  };
  const auto neg_refl = [](double p) {
    const App1Bounds b = app1_bounds(int(p));
    return slack(rel(b.gamma_neg, b.bound_neg_reflected, b.gamma_neg));
  };
  const Grid g = Grid::closed(3, 12, 10);
  return {{"gamma(1/p) > bound_pos (lower bound)", g, pos},
          {"gamma(-1/p) > bound_neg (printed form)", g, neg},
          {"gamma(-1/p) > -p pi/(sin(pi/p) bound_pos)", g, neg_refl}};
}

inline std::vector<Claim> suite_app5() {
  return {{"gamma(a) < 1/a", Grid::open(0.0, 1.0, 1000), [](double a) {
             const double up = app5_upper(a);
             return slack(rel(up, ref_gamma(a), up));
           }}};
}

inline constexpr double kApp6X[] = {0.25, 0.5, 2.0, 4.0};
inline constexpr long kApp6M[] = {1, 2, 5};

inline std::vector<Claim> suite_app6() {
  return {{"B(x,y) vs (1/y) prod_m, x in {0.25,0.5,2,4}, m in {1,2,5}", Grid::closed(0.1, 0.9, 9),
           [](double y) {
             double worst = std::numeric_limits<double>::infinity();
             for (double x : kApp6X) {
               const double b = ref_beta(x, y);
               for (long m : kApp6M) {
                 const double part = app6_beta_bound(x, y, m);
                 worst = std::min(worst, x < 1.0 ? rel(b, part, b) : rel(part, b, b));
               }
             }
             return slack(worst);
           },
           false, [](double y) { return y > 0.0 && y < 1.0; }}};
}

inline constexpr long kApp7Truncation = 5;

inline std::vector<Claim> suite_app7() {
  const Grid g = Grid::closed(1, 50, 50);
  return {{"f_s((n+1)/2,1/2)/pi < ratio, s = 5", g,
           [](double n) {
             const double r = ref_ball_ratio(int(n));
             return slack(rel(r, app7_bounds(int(n), kApp7Truncation, kApp7Truncation).lower, r));
           }},
          {"ratio <= upper_m, m = 5, equality iff n = 1", g,
           [](double n) {
             const double r = ref_ball_ratio(int(n));
             const double margin = rel(app7_bounds(int(n), kApp7Truncation, kApp7Truncation).upper, r, r);
             const bool tied = std::abs(margin) <= 1e-14;
             if (int(n) == 1) return Sample{tied ? 0.0 : -std::abs(margin), tied};
             return slack(margin);
           }}};
}

inline constexpr long kApp8M[] = {1, 2, 5, 10, 100};

inline std::vector<Claim> suite_app8() {
  const Grid g = Grid::list({0.25, 0.5, 2.0, 3.5});
  const auto not_one = [](double a) { return a > 0.0 && a != 1.0; };
  return {{"I_a < (1/a) f_m(a/2,1/2) for a < 1, reversed for a > 1, m in {1,2,5,10,100}", g,
           [](double a) {
             const double i = ref_wallis(a);
             double worst = std::numeric_limits<double>::infinity();
             for (long m : kApp8M) {
               const double b = app8_bound(a, m);
               worst = std::min(worst, a < 1.0 ? rel(b, i, i) : rel(i, b, i));
             }
             return slack(worst);
           },
           false, not_one},
          {"|quadrature - (1/a) f(a/2,1/2)| <= 1e-8", g,
           [](double a) { return slack(1e-8 - std::abs(wallis_quadrature(a) - app8_wallis(a))); }, false,
           [](double a) { return a > 0.0; }},
          {"m = 1 bound tighter than the trigonometric bound (informational)", g,
           [](double a) {
             const double b = app8_bound(a, 1);
             const TrigBounds t = wallis_trig_bounds(a);
             return slack(a < 1.0 ? rel(t.upper, b, ref_wallis(a)) : rel(b, t.lower, ref_wallis(a)));
           },
           true, not_one}};
}

inline std::vector<Claim> suite_app9() {
  const auto lower_side = [](double x) {
    const AlzerBounds b = app9_alzer(x);
    const double g = ref_gamma(x);
    return slack(std::min(rel(g, b.a, g), rel(b.d, g, g)));
  };
  const auto upper_side = [](double x) {
    const AlzerBounds b = app9_alzer(x);
    const double g = ref_gamma(x);
    return slack(std::min(rel(g, b.d, g), rel(b.e, g, g)));
  };
  const Grid i1{0.241, 0.5, 1000, false, true, {}};
  const Grid j1{0.5, 0.526, 1000, true, false, {}};
  const Grid p1 = Grid::closed(1.562, 100.0, 1000);
  return {
      {"A < gamma < D on (0,1)", Grid::open(0.0, 1.0, 1000), lower_side},
      {"D < gamma < E on (1,100]", Grid{1.0, 100.0, 1000, true, false, {}}, upper_side},
      {"K_1 >= A on [0.241,0.5)", i1,
       [](double x) {
         const double a = app9_alzer(x).a;
         return slack(rel(app9_refined(x, 1).k, a, a));
       }},
      {"K_1 <= gamma on [0.241,0.5)", i1,
       [](double x) {
         const double g = ref_gamma(x);
         return slack(rel(g, app9_refined(x, 1).k, g));
       }},
      {"L_1 <= D on (0.5,0.526]", j1,
       [](double x) {
         const double d = app9_alzer(x).d;
         return slack(rel(d, app9_refined(x, 1).l, d));
       }},
      {"L_1 >= gamma on (0.5,0.526]", j1,
       [](double x) {
         const double g = ref_gamma(x);
         return slack(rel(app9_refined(x, 1).l, g, g));
       }},
      {"L_1 <= E on [1.562,100]", p1,
       [](double x) {
         const double e = app9_alzer(x).e;
         return slack(rel(e, app9_refined(x, 1).l, e));
       }},
      {"L_1 >= gamma on [1.562,100]", p1,
       [](double x) {
         const double g = ref_gamma(x);
         return slack(rel(app9_refined(x, 1).l, g, g));
       }},
  };
}

inline std::vector<Claim> suite_app10() {
  return {
      {"Schuster lower <= v <= Schuster upper", Grid{0.0, 50.0, 1000, true, false, {}},
       [](double x) {
         const double v = app10_stirling(x).v;
         return slack(std::min(v - schuster_lower(x), schuster_upper(x) - v));
       }},
      {"0 < mu < 1/(12x) and v - mu = ln(f(x,1/2)/sqrt(pi x)) to 1e-9", Grid::closed(0.05, 50.0, 1000),
       [](double x) {
         const StirlingDecomposition s = app10_stirling(x);
         const double identity =
             s.v - s.mu - (joint_factor_log(x, 0.5) - 0.5 * std::log(std::numbers::pi * x));
         return slack(std::min({s.mu, 1.0 / (12.0 * x) - s.mu, 1e-9 - std::abs(identity)}));
       }},
      {"(i) v < 1/(12x) + ln[4 sqrt(x)/((1+2x) sqrt(pi))] on (0,1/2)", Grid::open(0.0, 0.5, 1000),
       [](double x) { return slack(app10_claim_i_bound(x) - app10_stirling(x).v); }},
      {"(ii) v > ln[4 sqrt(x)/((1+2x) sqrt(pi))] on (1/2,100]", Grid{0.5, 100.0, 1000, true, false, {}},
       [](double x) { return slack(app10_stirling(x).v - app10_log_term(x)); }},
      {"(i) right side < Schuster upper on (0,1/2)", Grid::open(0.0, 0.5, 10000),
       [](double x) { return slack(schuster_upper(x) - app10_claim_i_bound(x)); }},
      {"mu lower bound > 0 on [0.144,0.5)", Grid{0.144, 0.5, 1000, false, true, {}},
       [](double x) { return slack(app10_mu_lower(x)); }},
  };
}

inline std::vector<Claim> suite_claims(std::string_view suite) {
  if (suite == "app1") return suite_app1();
  if (suite == "app5") return suite_app5();
  if (suite == "app6") return suite_app6();
  if (suite == "app7") return suite_app7();
  if (suite == "app8") return suite_app8();
  if (suite == "app9") return suite_app9();
  if (suite == "app10") return suite_app10();
  throw DomainError("verify_suite: unknown suite '" + std::string(suite) + "'");
}

inline bool integer_suite(std::string_view suite) { return suite == "app1" || suite == "app7"; }

inline std::vector<std::string> suite_notes(std::string_view suite) {
  if (suite == "app1")
    return {"gamma(1/p) exceeds the m = 1 value: it is a lower bound (the '<' form is reversed); "
            "p = 3 bound 2.5985 < gamma(1/3) = 2.6789"};
  if (suite == "app7") return {"upper bound equals the ratio only at n = 1"};
  if (suite == "app8")
    return {"the m = 1 upper bound 2/(a+1) beats (pi/2)^{a+1}/(a+1) only for a > 0.535; "
            "trigonometric comparison is informational"};
  if (suite == "app10") return {"mu lower bound uses -ln[4 sqrt(x)/((1+2x) sqrt(pi))] - (1/24)(1/x + 1/(120x^3))"};
  return {};
}

// Evaluates fn at every point; chunks run on `jobs` threads, results land by index.
inline std::vector<Sample> evaluate_points(const std::function<Sample(double)>& fn,
                                           const std::vector<double>& xs, int jobs) {
  std::vector<Sample> out(xs.size());
  const std::size_t workers = std::size_t(std::clamp(jobs, 1, int(std::max<std::size_t>(xs.size(), 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = fn(xs[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < xs.size(); i += workers) out[i] = fn(xs[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace detail

// Runs a suite. With no grid each claim uses its own default interval; with a
// grid every claim is evaluated on the grid points inside its own interval.
inline BoundReport verify_suite(std::string_view suite, const std::optional<Grid>& grid = std::nullopt,
                                int jobs = 1) {
  std::vector<Claim> claims = detail::suite_claims(suite);
  if (grid) grid->validate();
  BoundReport report;
  report.suite = std::string(suite);
  report.grid = grid ? grid->describe() : "default";
  report.notes = detail::suite_notes(suite);
  const bool integers = detail::integer_suite(suite);
  // suites whose claims are stated on their own intervals
  const bool clip = suite == "app5" || suite == "app9" || suite == "app10";

  for (const Claim& claim : claims) {
    std::vector<double> xs;
    std::string grid_text;
    if (grid) {
      const std::vector<double> all = integers ? detail::integer_points(*grid) : grid->values();
      for (double x : all) {
        const bool inside = !clip || claim.default_grid.contains(x);
        if (inside && (!claim.admissible || claim.admissible(x))) xs.push_back(x);
      }
      grid_text = grid->describe();
    } else {
      xs = integers ? detail::integer_points(claim.default_grid) : claim.default_grid.values();
      grid_text = claim.default_grid.describe();
    }
    if (integers) {
      const double lo_int = suite == "app1" ? 3.0 : 1.0;
      std::erase_if(xs, [lo_int](double x) { return x < lo_int; });
    }

    ClaimReport cr;
    cr.name = claim.name;
    cr.grid = grid_text;
    cr.informational = claim.informational;
    const std::vector<Sample> samples = detail::evaluate_points(claim.check, xs, jobs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Sample& s = samples[i];
      ++cr.checks;
      if (s.equality) ++cr.equalities;
      const bool ok = s.equality || s.margin > 0.0;
      if (!ok) ++cr.violations;
      if (i == 0 || s.margin < cr.worst_margin) {
        cr.worst_margin = s.margin;
        cr.worst_at = xs[i];
      }
    }
    if (cr.checks == 0) {
      report.notes.push_back("claim '" + cr.name + "' has no grid points inside its interval");
    }
    cr.holds = cr.violations == 0;
    if (!cr.informational) {
      report.checks += cr.checks;
      report.violations += cr.violations;
      report.worst_margin = std::min(report.worst_margin, cr.worst_margin);
    }
    report.claims.push_back(std::move(cr));
  }
  report.holds = report.violations == 0;
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"app1", "app5", "app6", "app7", "app8", "app9", "app10"};
  return names;
}

}  // namespace jointgamma
