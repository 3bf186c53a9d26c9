// One PASS/FAIL line per acceptance criterion.
//
// Exit status: non-zero if any line's outcome differs from its expectation.
// Every line is expected to pass except those listed in kUnattainable, which
// are implemented as stated and fail on their own merits; if one of them ever
// passes, that is reported too. --strict makes every FAIL line fatal.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jointgamma/cli.hpp"
#include "jointgamma/jointgamma.hpp"

using namespace jointgamma;

namespace {

using Clock = std::chrono::steady_clock;

const std::set<std::string> kUnattainable = {"9.app9"};

struct Line {
  std::string id;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void record(const std::string& id, bool pass, const std::string& detail) {
  lines.push_back({id, pass, detail});
  std::printf("[%s] %-8s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
}

double rel(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// 1. coefficient equivalence
void criterion1() {
  const double xs[] = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0};
  const auto t0 = Clock::now();
  double worst = 0.0;
  double anchor = 0.0;
  for (double x : xs) {
    for (int j = 0; j < 10; ++j) {
      const double b = 0.05 + 0.1 * j;
      const CoeffTable rec = g_sequence(x, b, 40);
      const CoeffTable ora = g_sequence_oracle(x, b, 40);
      for (std::size_t n = 1; n <= 40; ++n) worst = std::max(worst, rel(rec(n), ora(n)));
      anchor = std::max({anchor, rel(rec(1), g1_closed(x, b)), rel(rec(2), g2_closed(x, b))});
    }
  }
  const double secs = seconds_since(t0);
  const double g2_example = g_sequence(0.25, 0.5, 2)(2);
  const bool ok = worst <= 1e-10 && anchor <= 1e-14 && g2_example == 13.0 / 256.0 && secs < 1.0;
  record("1", ok,
         fmt("coefficients: recursion vs oracle worst rel %.2e (tol 1e-10) over 9x10 grid, n<=40; "
             "g1/g2 anchors %.1e; %.3f s (< 1 s)",
             worst, anchor, secs));
}

// 2. joint-factor accuracy
void criterion2() {
  const auto t0 = Clock::now();
  double worst_tail = 0.0, worst_raw = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double x = 0.05 + 0.15 * i;
      const double b = 0.05 + 0.1 * j;
      const double f = ref_joint_factor(x, b);
      worst_tail = std::max(worst_tail, rel(joint_factor_value(x, b, TruncationPolicy::tail_corrected(1000)), f));
      worst_raw = std::max(worst_raw, rel(joint_factor_value(x, b, TruncationPolicy::fixed(1000)), f));
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = worst_tail <= 1e-9 && worst_raw > 1e-4 && worst_raw < 1e-2 && secs < 2.0;
  record("2", ok,
         fmt("joint factor, 200 points, m=1000: tail-corrected worst rel %.2e (tol 1e-9); raw worst rel %.2e "
             "(~1e-3); %.3f s (< 2 s)",
             worst_tail, worst_raw, secs));
}

// 3. rational Gamma
void criterion3() {
  double worst = 0.0, slowest = 0.0;
  int count = 0;
  for (int p = 3; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const auto t0 = Clock::now();
      const double g = gamma_rational({q, p}).value;
      slowest = std::max(slowest, seconds_since(t0));
      worst = std::max(worst, rel(g, ref_gamma(double(q) / p)));
      ++count;
    }
  }
  record("3", worst <= 1e-8 && slowest < 0.1,
         fmt("rational Gamma, %d reduced q/p with 3<=p<=12: worst rel %.2e (tol 1e-8); slowest %.4f s (< 0.1 s)", count,
             worst, slowest));
}

// 4. reflection and duplication
void criterion4() {
  double worst_refl = 0.0, worst_dup = 0.0;
  for (int p = 3; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const double x = double(q) / p;
      const double refl =
          gamma_rational({q, p}).value * gamma_rational({p - q, p}).value * std::sin(std::numbers::pi * x) / std::numbers::pi;
      worst_refl = std::max(worst_refl, std::abs(refl - 1.0));
      worst_dup = std::max(worst_dup, rel(gamma_duplication(x), ref_gamma(2 * x)));
    }
  }
  record("4", worst_refl <= 1e-9 && worst_dup <= 1e-9,
         fmt("reflection worst %.2e, duplication worst rel %.2e (tol 1e-9)", worst_refl, worst_dup));
}

// 5. Gamma(1/4)^2 products
void criterion5() {
  const double oracle = std::exp(2.0 * ref_log_gamma(0.25));
  bool ahead = true;
  for (long m = 1; m <= 1000; ++m) {
    const QuarterProducts q = gamma_quarter_squared(m);
    ahead = ahead && std::abs(q.classical - oracle) < std::abs(q.modern - oracle);
  }
  bool decreasing = true;
  double prev_c = INFINITY, prev_m = INFINITY, last_c = 0, last_m = 0;
  for (long m : {1L, 10L, 100L, 1000L, 10000L, 100000L}) {
    const QuarterProducts q = gamma_quarter_squared(m);
    last_c = std::abs(q.classical - oracle);
    last_m = std::abs(q.modern - oracle);
    decreasing = decreasing && last_c < prev_c && last_m < prev_m;
    prev_c = last_c;
    prev_m = last_m;
  }
  const double corrected =
      quarter_modern_prefactor() * evaluate_product(quarter_modern_factors(), TruncationPolicy::tail_corrected(1000)).value;
  const bool oracle_ok = std::abs(oracle - 13.1450472) < 1e-7 && std::abs(corrected - 13.1450472) < 1e-7;

  std::string csv_m;
  for (int m = 1; m <= 1000; ++m) csv_m += (m > 1 ? "," : "") + std::to_string(m);
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"convergence", "--target", "quarter", "--m-list", csv_m}, out, err);
  const double secs = seconds_since(t0);
  const bool ok = ahead && decreasing && oracle_ok && last_c < 1e-8 && last_m < 1e-4 && code == 0 && secs < 5.0;
  record("5", ok,
         fmt("Gamma(1/4)^2 = %.10f: errors at m=1e5 classical %.2e, new %.2e (both decreasing); classical ahead "
             "for all m<=1000: %s; tail-corrected new product %.10f; CSV study m=1..1000 %.3f s (< 5 s)",
             oracle, last_c, last_m, ahead ? "yes" : "no", corrected, secs));
}

// 6. identity suite
void criterion6() {
  double ws = 0, wt = 0, wp = 0;
  const TruncationPolicy pol = TruncationPolicy::tail_corrected(1000);
  for (int i = 1; i <= 50; ++i) {
    const double u = i / 51.0;
    ws = std::max(ws, check_identity(IdentityName::sin, u, pol).rel_residual);
    wt = std::max(wt, check_identity(IdentityName::tan, 0.5 * u, pol).rel_residual);
    wp = std::max(wp, check_identity(IdentityName::pow2, u, pol).rel_residual);
  }
  record("6", std::max({ws, wt, wp}) <= 1e-6,
         fmt("sin/tan/pow2 at m=1000 tail-corrected, 50 arguments each: worst rel %.2e / %.2e / %.2e (tol 1e-6)", ws,
             wt, wp));
}

std::vector<double> t_grid() {
  std::vector<double> ts;
  for (int i = 1; i <= 19; ++i) ts.push_back(0.05 * i);
  return ts;
}

// 7. digamma
void criterion7() {
  const double half = std::abs(digamma(0.5, 200).value - (-kEulerGamma - 2 * std::numbers::ln2));
  double worst = 0;
  bool dominance = true;
  for (double t : t_grid()) {
    const double ref = ref_digamma(t);
    const double acc = std::abs(digamma(t, 1000).value - ref);
    worst = std::max(worst, acc);
    dominance = dominance && acc < std::abs(digamma_series_raw(t, 1000) - ref);
  }
  record("7", half <= 1e-6 && worst <= 1e-5 && dominance,
         fmt("digamma: |psi(1/2) err| %.2e at n0=200 (tol 1e-6); grid worst %.2e at n0=1000 (tol 1e-5); "
             "beats raw series at every grid point: %s",
             half, worst, dominance ? "yes" : "no"));
}

// 8. trigamma
void criterion8() {
  const double half = std::abs(trigamma(0.5, 500).value - std::numbers::pi * std::numbers::pi / 2);
  double worst = 0;
  for (double t : t_grid()) worst = std::max(worst, std::abs(trigamma(t, 1000).value - ref_trigamma(t)));
  record("8", half <= 1e-4 && worst <= 1e-3,
         fmt("trigamma: |psi'(1/2) err| %.2e at n0=500 (tol 1e-4); grid worst %.2e at n0=1000 (tol 1e-3)", half,
             worst));
}

// 9. bound suites, through the CLI so the exit status is part of the check
void criterion9() {
  for (const std::string& suite : suite_names()) {
    std::ostringstream out, err;
    const int code = cli::run({"bounds", "--suite", suite}, out, err);
    const BoundReport r = verify_suite(suite);
    std::string detail = fmt("exit %d, %ld checks, %ld violations, worst margin %.3e", code, r.checks, r.violations,
                             r.worst_margin);
    bool ok = code == 0 && r.holds;
    if (suite == "app1") {
      const App1Bounds p3 = app1_bounds(3);
      const bool direction = p3.direction_pos == "lower bound" && std::abs(p3.bound_pos - 2.5985) < 1e-4 &&
                             p3.gamma_pos > p3.bound_pos;
      ok = ok && direction;
      detail += fmt("; p=3 bound %.4f < Gamma(1/3) = %.6f, recorded as a lower bound", p3.bound_pos, p3.gamma_pos);
    }
    if (suite == "app7") {
      for (const auto& c : r.claims) {
        if (c.equalities == 0) continue;
        ok = ok && c.equalities == 1 && c.worst_at == 1.0;
        detail += fmt("; equality flagged %ld time(s), at n = %.0f", c.equalities, c.worst_at);
      }
    }
    for (const auto& c : r.claims) {
      if (!c.holds && !c.informational)
        detail += fmt("; VIOLATED '%s': %ld/%ld, worst %.3e at x=%.6g", c.name.c_str(), c.violations, c.checks,
                      c.worst_margin, c.worst_at);
    }
    record("9." + suite, ok, detail);
  }
}

// 10. monotone truncation law on all three sign branches
void criterion10() {
  const long ms[] = {1, 2, 5, 10, 100, 1000};
  int pos = 0, neg = 0, zero = 0;
  bool ok = true;
  for (int i = 1; i <= 12; ++i) {
    for (int j = 1; j <= 9; ++j) {
      const JointFactorSpec s{0.25 * i, 0.1 * j};
      const double f = ref_joint_factor(s.x, s.b);
      double prev = NAN;
      for (long m : ms) {
        const double cur = truncate(s, m);
        if (s.sigma() > 0) ok = ok && cur > f && (std::isnan(prev) || cur < prev);
        if (s.sigma() < 0) ok = ok && cur < f && (std::isnan(prev) || cur > prev);
        prev = cur;
      }
      (s.sigma() > 0 ? pos : neg)++;
    }
  }
  for (int k = 1; k <= 7; ++k) {
    const double b = k / 8.0;
    const JointFactorSpec s{1.0 - b, b};
    ok = ok && s.sigma() == 0;
    for (long m : ms) ok = ok && truncate(s, m) == 1.0;
    ok = ok && std::abs(ref_joint_factor(s.x, s.b) - 1.0) < 1e-13;
    ++zero;
  }
  record("10", ok && pos > 0 && neg > 0,
         fmt("truncates strictly monotone toward f: sigma>0 decreasing %d points, sigma<0 increasing %d points, "
             "sigma=0 identically 1 at %d points, m in {1,2,5,10,100,1000}",
             pos, neg, zero));
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const auto t0 = Clock::now();
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      record("?", false, std::string("exception: ") + e.what());
    }
  }
  const double total = seconds_since(t0);
  record("total", total < 60.0, fmt("wall clock %.2f s (< 60 s, single-threaded)", total));

  int failed = 0, unexpected = 0;
  for (const Line& l : lines) {
    const bool known = kUnattainable.count(l.id) > 0;
    failed += !l.pass;
    if (l.pass == known) {
      ++unexpected;
      std::printf("unexpected: %s %s\n", l.id.c_str(), l.pass ? "passed but is recorded as unattainable" : "failed");
    }
  }
  std::printf("%zu lines, %d FAIL", lines.size(), failed);
  if (failed) {
    std::printf(" (recorded as unattainable as stated:");
    for (const auto& id : kUnattainable) std::printf(" %s", id.c_str());
    std::printf(")");
  }
  std::printf("\n");
  if (strict) return failed ? 1 : 0;
  return unexpected ? 1 : 0;
}
