#pragma once

// Command-line front end. run() parses, dispatches and writes one JSON object
// or one CSV table. Exit codes: 0 ok, 1 domain error, 2 convergence failure,
// 3 bound-suite violation, 64 usage error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jointgamma/jointgamma.hpp"

namespace jointgamma::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitConvergence = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitUsage = 64;

// %.17g, locale-free; non-finite values become null in JSON and empty in CSV.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline void write_json(std::ostream& os, const Json& j, int indent = 0) {
  const std::string pad(std::size_t(indent + 2), ' ');
  const std::string close(std::size_t(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 2);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      // numeric arrays on one line
      bool flat = true;
      for (const auto& e : j) flat = flat && e.is_primitive();
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], indent + 2);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent + 2);
      }
      os << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_number(v) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    const double d = v.get<double>();
    return std::isfinite(d) ? format_number(d) : "";
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

// Table from a list of flat objects sharing keys.
inline Table table_from(const std::vector<std::string>& columns, const std::vector<Json>& records) {
  Table t{columns, {}};
  for (const Json& r : records) {
    std::vector<std::string> row;
    for (const auto& c : columns) row.push_back(r.contains(c) ? csv_cell(r.at(c)) : "");
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

inline double rel_err(double value, double oracle) {
  return std::abs(value - oracle) / std::max(std::abs(oracle), 1e-300);
}

struct Options {
  long m = 1000;
  bool tail = false;
  std::optional<double> tol;
  std::string format = "json";
  std::string output;
  int jobs = 1;
  bool bracket = false;

  TruncationPolicy policy() const {
    if (tol) return TruncationPolicy::adaptive(*tol, m);
    if (bracket) return TruncationPolicy::bracket(m);
    if (tail) return TruncationPolicy::tail_corrected(m);
    return TruncationPolicy::fixed(m);
  }
};

// A verb's result: the JSON object plus its CSV rendering.
struct Output {
  Json json;
  Table table;
  int exit_code = kExitOk;
};

inline Json policy_json(const TruncationPolicy& p) {
  Json j;
  j["mode"] = to_string(p.mode);
  j["m"] = p.m;
  if (p.mode == TruncationMode::adaptive) j["tol"] = p.tol;
  return j;
}

// ------------------------------------------------------------------ verbs

inline Output do_gamma(std::int64_t q, std::int64_t p, bool negative, const Options& o) {
  const RationalArgument arg(q, p);
  const TruncationPolicy policy = o.policy();
  const GammaValue g = gamma_rational(arg, policy);
  Json j;
  j["op"] = negative ? "gamma_negative" : "gamma";
  j["inputs"] = {{"q", q}, {"p", p}, {"truncation", policy_json(policy)}};
  double value = g.value;
  double oracle = ref_gamma(arg.value());
  if (negative) {
    detail::require(arg.value() < 1.0, "gamma --negative: q/p must lie in (0, 1)");
    value = gamma_negative(arg, policy);
    const double t = arg.value();
    oracle = -std::numbers::pi / (t * std::sin(std::numbers::pi * t) * oracle);
  }
  j["value"] = value;
  j["m_used"] = g.m_used;
  j["tail_corrected"] = g.tail_corrected;
  j["lower"] = nullptr;
  j["upper"] = nullptr;
  j["rel_err_vs_oracle"] = rel_err(value, oracle);
  j["oracle"] = oracle;
  j["log_value"] = negative ? std::log(std::abs(value)) : g.log_value;
  j["reciprocal"] = 1.0 / value;
  if (!negative) j["reciprocal"] = g.reciprocal;
  j["method"] = negative ? to_string(GammaMethod::reflection) : to_string(g.method);
  j["q_used"] = g.q;
  j["p_used"] = g.p;
  j["log_constant"] = g.log_constant;
  j["log_mu"] = g.mu;
  j["log_v"] = g.v;
  const std::vector<std::string> cols{"op", "q", "p", "value", "m_used", "tail_corrected", "rel_err_vs_oracle"};
  Json flat = j;
  flat["q"] = q;
  flat["p"] = p;
  return {j, table_from(cols, {flat})};
}

inline Output do_jointfactor(double x, double b, const Options& o) {
  const JointFactorSpec spec{x, b};
  const TruncationPolicy policy = o.policy();
  const Estimate e = joint_factor(spec, policy);
  const double oracle = ref_joint_factor(x, b);
  Json j;
  j["op"] = "jointfactor";
  j["inputs"] = {{"x", x}, {"b", b}, {"truncation", policy_json(policy)}};
  j["value"] = e.value;
  j["m_used"] = e.m_used;
  j["tail_corrected"] = e.tail_corrected;
  j["lower"] = optional_number(e.lower);
  j["upper"] = optional_number(e.upper);
  j["rel_err_vs_oracle"] = rel_err(e.value, oracle);
  j["oracle"] = oracle;
  j["log_value"] = e.log_value;
  j["sigma"] = spec.sigma();
  Json flat = j;
  flat["x"] = x;
  flat["b"] = b;
  return {j, table_from({"x", "b", "value", "m_used", "tail_corrected", "lower", "upper", "rel_err_vs_oracle"},
                        {flat})};
}

inline Output do_coeffs(double x, double b, int n) {
  const CoeffTable table = g_sequence(x, b, n);
  const CoeffTable oracle = g_sequence_oracle(x, b, n);
  Json j;
  j["op"] = "coeffs";
  j["inputs"] = {{"x", x}, {"b", b}, {"n", n}};
  j["value"] = table.g;
  j["m_used"] = 0;
  j["tail_corrected"] = false;
  double worst = 0.0;
  std::vector<Json> rows;
  for (int k = 1; k <= n; ++k) {
    const double g = table(std::size_t(k));
    const double go = oracle(std::size_t(k));
    const double err = go == 0.0 ? std::abs(g) : rel_err(g, go);
    worst = std::max(worst, err);
    rows.push_back({{"n", k}, {"g", g}, {"g_oracle", go}, {"rel_err_vs_oracle", err}});
  }
  j["rel_err_vs_oracle"] = worst;
  return {j, table_from({"n", "g", "g_oracle", "rel_err_vs_oracle"}, rows)};
}

inline Output do_polygamma(bool trig, double t, long n0, int tail_order) {
  const PolygammaResult r = trig ? trigamma(t, n0, tail_order) : digamma(t, n0, tail_order);
  const double oracle = trig ? ref_trigamma(t) : ref_digamma(t);
  Json j;
  j["op"] = trig ? "trigamma" : "digamma";
  j["inputs"] = {{"t", t}, {"n0", n0}, {"tail_order", tail_order}};
  j["value"] = r.value;
  j["m_used"] = r.head_terms;
  j["tail_corrected"] = true;
  j["rel_err_vs_oracle"] = rel_err(r.value, oracle);
  j["abs_err_vs_oracle"] = std::abs(r.value - oracle);
  j["oracle"] = oracle;
  j["head_terms"] = r.head_terms;
  j["tail_estimate"] = r.tail_estimate;
  if (!trig) {
    const double raw = digamma_series_raw(t, n0);
    j["raw_value"] = raw;
    j["raw_abs_err_vs_oracle"] = std::abs(raw - oracle);
  }
  Json flat = j;
  flat["t"] = t;
  flat["n0"] = n0;
  return {j, table_from({"op", "t", "n0", "value", "tail_estimate", "abs_err_vs_oracle", "rel_err_vs_oracle"},
                        {flat})};
}

inline Output do_beta(double x, double y, const Options& o) {
  const TruncationPolicy policy = o.policy();
  const Estimate e = beta_estimate(x, y, policy);
  const double oracle = ref_beta(x, y);
  Json j;
  j["op"] = "beta";
  j["inputs"] = {{"x", x}, {"y", y}, {"truncation", policy_json(policy)}};
  j["value"] = e.value;
  j["m_used"] = e.m_used;
  j["tail_corrected"] = e.tail_corrected;
  j["lower"] = optional_number(e.lower);
  j["upper"] = optional_number(e.upper);
  j["rel_err_vs_oracle"] = rel_err(e.value, oracle);
  j["oracle"] = oracle;
  Json flat = j;
  flat["x"] = x;
  flat["y"] = y;
  return {j, table_from({"x", "y", "value", "m_used", "tail_corrected", "rel_err_vs_oracle"}, {flat})};
}

inline Output do_identity(const std::string& name, std::optional<double> x, std::optional<double> b,
                          const Options& o) {
  const TruncationPolicy policy = o.policy();
  Json j;
  j["op"] = "identity";
  if (name == "quarter") {
    const QuarterProducts q = gamma_quarter_squared(o.m);
    const double oracle = std::exp(2.0 * ref_log_gamma(0.25));
    j["inputs"] = {{"name", name}, {"m", o.m}};
    j["value"] = {{"classical", q.classical}, {"modern", q.modern}};
    j["m_used"] = o.m;
    j["tail_corrected"] = false;
    j["oracle"] = oracle;
    j["classical_abs_err"] = std::abs(q.classical - oracle);
    j["modern_abs_err"] = std::abs(q.modern - oracle);
    j["classical_ahead"] = std::abs(q.classical - oracle) <= std::abs(q.modern - oracle);
    std::vector<Json> rows{{{"series", "classical"}, {"value", q.classical}, {"abs_err_vs_oracle", j["classical_abs_err"]}},
                           {{"series", "modern"}, {"value", q.modern}, {"abs_err_vs_oracle", j["modern_abs_err"]}}};
    for (auto& r : rows) r["m"] = o.m;
    return {j, table_from({"series", "m", "value", "abs_err_vs_oracle"}, rows)};
  }
  IdentityName id = IdentityName::sin;
  if (name == "tan") id = IdentityName::tan;
  if (name == "pow2") id = IdentityName::pow2;
  const std::optional<double> arg = id == IdentityName::pow2 ? (b ? b : x) : (x ? x : b);
  detail::require(arg.has_value(), "identity: pass --x (sin, tan) or --b (pow2)");
  const IdentityCheck c = check_identity(id, *arg, policy);
  j["inputs"] = {{"name", name}, {id == IdentityName::pow2 ? "b" : "x", *arg}, {"truncation", policy_json(policy)}};
  j["value"] = c.lhs;
  j["m_used"] = policy.m;
  j["tail_corrected"] = policy.mode != TruncationMode::fixed;
  j["closed_form"] = c.rhs;
  j["residual"] = c.rel_residual;
  j["rel_err_vs_oracle"] = c.rel_residual;
  Json flat = j;
  flat["name"] = name;
  flat["argument"] = *arg;
  return {j, table_from({"name", "argument", "value", "closed_form", "residual"}, {flat})};
}

inline Json report_json(const BoundReport& r) {
  Json j;
  j["op"] = "bounds";
  j["inputs"] = {{"suite", r.suite}, {"grid", r.grid}};
  j["value"] = r.holds;
  j["m_used"] = nullptr;
  j["tail_corrected"] = false;
  j["suite"] = r.suite;
  j["grid"] = r.grid;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  j["worst_margin"] = r.worst_margin;
  j["holds"] = r.holds;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"name", c.name},
                      {"grid", c.grid},
                      {"checks", c.checks},
                      {"violations", c.violations},
                      {"equalities", c.equalities},
                      {"worst_margin", c.worst_margin},
                      {"worst_at", c.worst_at},
                      {"informational", c.informational},
                      {"holds", c.holds}});
  }
  j["claims"] = claims;
  j["notes"] = r.notes;
  return j;
}

inline Output do_bounds(const std::string& suite, std::optional<double> lo, std::optional<double> hi,
                        std::optional<int> points, const Options& o) {
  std::optional<Grid> grid;
  if (lo || hi || points) {
    detail::require(lo && hi, "bounds: --lo and --hi go together");
    grid = Grid::closed(*lo, *hi, points.value_or(1000));
  }
  const BoundReport r = verify_suite(suite, grid, o.jobs);
  Json j = report_json(r);
  std::vector<Json> rows;
  for (const auto& c : j["claims"]) {
    Json row = c;
    row["suite"] = r.suite;
    rows.push_back(row);
  }
  Output out{j, table_from({"suite", "name", "grid", "checks", "violations", "equalities", "worst_margin",
                            "worst_at", "informational", "holds"},
                           rows)};
  out.exit_code = r.holds ? kExitOk : kExitViolation;
  return out;
}

inline std::vector<long> parse_m_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    detail::require(res.ec == std::errc() && res.ptr == item.data() + item.size() && v >= 1,
                    "convergence: --m-list must be positive integers separated by commas");
    detail::require(out.empty() || v > out.back(), "convergence: --m-list must be ascending");
    out.push_back(v);
  }
  detail::require(!out.empty(), "convergence: --m-list is empty");
  return out;
}

inline std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    detail::require(res.ec == std::errc() && res.ptr == item.data() + item.size(), what);
    out.push_back(v);
  }
  detail::require(out.size() == count, what);
  return out;
}

inline Output do_convergence(const std::string& target, const std::string& m_list) {
  const std::vector<long> ms = parse_m_list(m_list);
  std::vector<Json> rows;
  const auto row = [&rows](long m, const char* series, double estimate, double oracle, bool corrected) {
    rows.push_back({{"m", m},
                    {"series", series},
                    {"estimate", estimate},
                    {"abs_err_vs_oracle", std::abs(estimate - oracle)},
                    {"tail_corrected", corrected}});
  };
  Json inputs{{"target", target}, {"m_list", ms}};
  if (target == "quarter") {
    const double oracle = std::exp(2.0 * ref_log_gamma(0.25));
    for (long m : ms) {
      const QuarterProducts q = gamma_quarter_squared(m);
      row(m, "classical", q.classical, oracle, false);
      row(m, "modern", q.modern, oracle, false);
    }
  } else if (target.rfind("jointfactor:", 0) == 0) {
    const auto xb = parse_reals(target.substr(12), 2, "convergence: expected jointfactor:x,b");
    const JointFactorSpec spec{xb[0], xb[1]};
    spec.validate();
    const double oracle = ref_joint_factor(spec.x, spec.b);
    for (long m : ms) {
      row(m, "raw", joint_factor(spec, TruncationPolicy::fixed(m)).value, oracle, false);
      row(m, "tail_corrected", joint_factor(spec, TruncationPolicy::tail_corrected(m)).value, oracle, true);
    }
  } else if (target.rfind("digamma:", 0) == 0) {
    const double t = parse_reals(target.substr(8), 1, "convergence: expected digamma:t")[0];
    detail::require(t > 0.0 && t < 1.0, "convergence: digamma t must lie in (0, 1)");
    const double oracle = ref_digamma(t);
    for (long m : ms) {
      row(m, "raw", digamma_series_raw(t, m), oracle, false);
      if (m >= 10) row(m, "accelerated", digamma(t, m).value, oracle, true);
    }
  } else {
    throw DomainError("convergence: unknown target '" + target + "' (quarter, jointfactor:x,b, digamma:t)");
  }
  Json j;
  j["op"] = "convergence";
  j["inputs"] = inputs;
  j["value"] = rows;
  j["m_used"] = ms.back();
  j["tail_corrected"] = target != "quarter";
  return {j, table_from({"m", "series", "estimate", "abs_err_vs_oracle", "tail_corrected"}, rows)};
}

// ------------------------------------------------------------------ driver

inline void add_shared(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "truncation index / starting index for --tol")->check(CLI::PositiveNumber);
  sub->add_flag("--tail", o.tail, "enable the tail correction");
  sub->add_option("--tol", o.tol, "adaptive truncation tolerance")->check(CLI::Range(1e-300, 1.0));
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "write to a file instead of standard output");
  sub->add_option("--jobs", o.jobs, "worker threads for bound suites")->check(CLI::Range(1, 256));
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Gamma, Beta, digamma and trigamma through joint factors", "jointgamma"};
  app.require_subcommand(1);
  Options o;

  std::int64_t q = 1, p = 3;
  bool negative = false;
  auto* gamma_cmd = app.add_subcommand("gamma", "Gamma(q/p)");
  gamma_cmd->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_flag("--negative", negative, "Gamma(-q/p) instead");
  add_shared(gamma_cmd, o);

  double x = 1.0, b = 0.0;
  auto* jf_cmd = app.add_subcommand("jointfactor", "f(x, b)");
  jf_cmd->add_option("--x", x)->required();
  jf_cmd->add_option("--b", b)->required();
  jf_cmd->add_flag("--bracket", o.bracket, "report the rigorous enclosure");
  add_shared(jf_cmd, o);

  int n = 10;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "g_1..g_n");
  coeffs_cmd->add_option("--x", x)->required();
  coeffs_cmd->add_option("--b", b)->required();
  coeffs_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 100000));
  add_shared(coeffs_cmd, o);

  double t = 0.5;
  long n0 = 1000;
  int tail_order = kMaxTailOrder;
  auto* dig_cmd = app.add_subcommand("digamma", "psi(t), 0 < t < 1");
  auto* tri_cmd = app.add_subcommand("trigamma", "psi'(t), 0 < t < 1");
  for (auto* sub : {dig_cmd, tri_cmd}) {
    sub->add_option("--t", t)->required();
    sub->add_option("--n0", n0)->check(CLI::Range(10L, 100000000L));
    sub->add_option("--tail-order", tail_order, "0 = plain zeta tail")->check(CLI::Range(0, kMaxTailOrder));
    add_shared(sub, o);
  }

  double y = 0.5;
  auto* beta_cmd = app.add_subcommand("beta", "B(x, y), 0 < y < 1");
  beta_cmd->add_option("--x", x)->required();
  beta_cmd->add_option("--y", y)->required();
  add_shared(beta_cmd, o);

  std::string name;
  std::optional<double> id_x, id_b;
  auto* id_cmd = app.add_subcommand("identity", "product identities");
  id_cmd->add_option("--name", name)->required()->check(CLI::IsMember({"sin", "tan", "pow2", "quarter"}));
  id_cmd->add_option("--x", id_x);
  id_cmd->add_option("--b", id_b);
  add_shared(id_cmd, o);

  std::string suite;
  std::optional<double> lo, hi;
  std::optional<int> points;
  auto* bounds_cmd = app.add_subcommand("bounds", "verify a bound suite");
  bounds_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  bounds_cmd->add_option("--lo", lo);
  bounds_cmd->add_option("--hi", hi);
  bounds_cmd->add_option("--points", points)->check(CLI::Range(1, 10000000));
  add_shared(bounds_cmd, o);

  std::string target, m_list = "1,10,100,1000";
  auto* conv_cmd = app.add_subcommand("convergence", "error against m");
  conv_cmd->add_option("--target", target)->required();
  conv_cmd->add_option("--m-list", m_list);
  add_shared(conv_cmd, o);

  std::vector<std::string> argv_store{"jointgamma"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*conv_cmd && conv_cmd->get_option("--format")->count() == 0) o.format = "csv";

  try {
    Output result;
    if (*gamma_cmd) result = do_gamma(q, p, negative, o);
    else if (*jf_cmd) result = do_jointfactor(x, b, o);
    else if (*coeffs_cmd) result = do_coeffs(x, b, n);
    else if (*dig_cmd) result = do_polygamma(false, t, n0, tail_order);
    else if (*tri_cmd) result = do_polygamma(true, t, n0, tail_order);
    else if (*beta_cmd) result = do_beta(x, y, o);
    else if (*id_cmd) result = do_identity(name, id_x, id_b, o);
    else if (*bounds_cmd) result = do_bounds(suite, lo, hi, points, o);
    else result = do_convergence(target, m_list);

    std::ostringstream text;
    text.imbue(std::locale::classic());
    if (o.format == "csv") {
      write_csv(text, result.table);
    } else {
      write_json(text, result.json);
      text << '\n';
    }
    if (o.output.empty()) {
      out << text.str();
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) {
        err << "cannot open " << o.output << '\n';
        return kExitUsage;
      }
      file << text.str();
    }
    return result.exit_code;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  }
}

}  // namespace jointgamma::cli
