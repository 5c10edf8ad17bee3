// zdensity command-line front end. Talks to the library only through the C API.

#include <zdensity/zdensity.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kInvalid = 2 };

// Library failure carrying the status name and message.
struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(zd_status s) {
  if (s != ZD_OK) throw ApiError(std::string(zd_status_name(s)) + ": " + zd_last_error());
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ContextPtr = std::unique_ptr<zd_context, Deleter<zd_context, zd_context_destroy>>;
using CoeffPtr = std::unique_ptr<zd_coefficients, Deleter<zd_coefficients, zd_coefficients_destroy>>;
using ValuesPtr = std::unique_ptr<zd_values, Deleter<zd_values, zd_values_destroy>>;
using ReportPtr = std::unique_ptr<zd_report, Deleter<zd_report, zd_report_destroy>>;
using TablePtr = std::unique_ptr<zd_table, Deleter<zd_table, zd_table_destroy>>;
using CompPtr = std::unique_ptr<zd_comparison, Deleter<zd_comparison, zd_comparison_destroy>>;
using OptPtr = std::unique_ptr<zd_optimization, Deleter<zd_optimization, zd_optimization_destroy>>;

std::string shortest(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Trim to the shortest form that still round-trips.
  for (int p = 1; p <= 17; ++p) {
    char tmp[64];
    std::snprintf(tmp, sizeof tmp, "%.*g", p, v);
    if (std::strtod(tmp, nullptr) == v) return tmp;
  }
  return buf;
}

// ---------------------------------------------------------------- payloads

// A payload is a list of records sharing one column set. Key/value payloads
// use the columns key, value, rounded, label and render in JSON as an object.
struct Payload {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool keyed = false;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

Payload keyed_payload() {
  Payload p;
  p.columns = {"key", "value", "rounded", "label"};
  p.keyed = true;
  return p;
}

struct Envelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  Payload payload;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json payload_json(const Payload& p) {
  if (p.keyed) {
    json obj = json::object();
    for (const auto& r : p.rows) obj[r[0]] = {{"value", r[1]}, {"rounded", r[2]}, {"label", r[3]}};
    return obj;
  }
  json arr = json::array();
  for (const auto& r : p.rows) {
    json rec = json::object();
    for (size_t i = 0; i < p.columns.size(); ++i) rec[p.columns[i]] = r[i];
    arr.push_back(std::move(rec));
  }
  return arr;
}

struct Globals {
  int precision = 0;
  int output_digits = 4;
  std::string format = "csv";
  std::string H_rh, eta, t0;
  std::optional<uint64_t> N0;
  bool metadata = false;
};

void render(const Envelope& env, const Globals& g, const zd_context* ctx, std::ostream& os) {
  const Payload& p = env.payload;
  if (g.format == "json") {
    json meta = {{"tool", "zdensity"}, {"version", zd_version()}, {"command", env.command},
                 {"digits", zd_context_digits(ctx)}, {"output_digits", zd_context_output_digits(ctx)}};
    json params = json::object();
    for (const auto& [k, v] : env.parameters) params[k] = v;
    meta["parameters"] = params;
    json doc = {{"metadata", meta}, {"payload", payload_json(p)}, {"timestamp", timestamp()}};
    os << doc.dump(2) << "\n";
    return;
  }
  if (g.format == "markdown") {
    os << "## zdensity " << env.command << "\n\n";
    os << "- version: " << zd_version() << "\n- digits: " << zd_context_digits(ctx) << "\n- timestamp: " << timestamp()
       << "\n";
    for (const auto& [k, v] : env.parameters) os << "- " << k << ": " << v << "\n";
    os << "\n|";
    for (const auto& c : p.columns) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < p.columns.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : p.rows) {
      os << "|";
      for (const auto& cell : r) os << " " << cell << " |";
      os << "\n";
    }
    return;
  }
  // csv: payload only. Metadata goes to stderr on request so stdout stays a
  // plain table.
  if (g.metadata) {
    std::cerr << "# zdensity " << zd_version() << " " << env.command << " digits=" << zd_context_digits(ctx)
              << " timestamp=" << timestamp() << "\n";
    for (const auto& [k, v] : env.parameters) std::cerr << "# " << k << "=" << v << "\n";
  }
  for (size_t i = 0; i < p.columns.size(); ++i) os << (i ? "," : "") << csv_field(p.columns[i]);
  os << "\r\n";
  for (const auto& r : p.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << "\r\n";
  }
}

// ----------------------------------------------------------------- context

ContextPtr make_context(const Globals& g) {
  zd_context* raw = nullptr;
  check(zd_context_create(g.precision, g.output_digits, &raw));
  ContextPtr ctx(raw);
  check(zd_context_set_rounding(ctx.get(), ZD_ROUND_UP));
  if (!g.H_rh.empty()) check(zd_context_set_h_rh(ctx.get(), g.H_rh.c_str()));
  if (!g.eta.empty()) check(zd_context_set_eta(ctx.get(), g.eta.c_str()));
  if (g.N0) check(zd_context_set_n0(ctx.get(), *g.N0));
  if (!g.t0.empty()) check(zd_context_set_t0(ctx.get(), g.t0.c_str()));
  return ctx;
}

std::string setting(const zd_context* ctx, const char* key) {
  const char* text = nullptr;
  check(zd_context_setting(ctx, key, &text));
  return text;
}

std::vector<std::pair<std::string, std::string>> model_echo(const zd_context* ctx) {
  return {{"precision", std::to_string(zd_context_digits(ctx))},
          {"output_digits", std::to_string(zd_context_output_digits(ctx))},
          {"H_rh", setting(ctx, "H_rh")},
          {"eta", setting(ctx, "eta")},
          {"sigma1", setting(ctx, "sigma1")},
          {"N0", setting(ctx, "N0")},
          {"t0", setting(ctx, "t0")}};
}

zd_number coefficient(const zd_coefficients* c, const char* key) {
  zd_number n{};
  check(zd_coefficients_get(c, key, &n));
  return n;
}

std::string formatted(const zd_coefficients* c, const char* key, int decimals = 4) {
  const char* text = nullptr;
  check(zd_coefficients_format(c, key, decimals, &text));
  return text;
}

// -------------------------------------------------------------- commands

struct ConstantsArgs {
  std::string sigma, sigma0, H;
};

void coefficient_rows(Payload& p, const zd_coefficients* c) {
  struct Row {
    const char* key;
    const char* label;
    bool table_format;
  };
  static const Row rows[] = {
      {"sigma", "sigma", false},
      {"sigma0", "sigma0, line of the second moment", false},
      {"H", "H, lower end of the mean-value range", true},
      {"H_rh", "height of verified RH", false},
      {"c0", "approximation constant C(1/2, 1, t0), rounded up", false},
      {"zeta_2sigma0", "zeta(2 sigma0)", false},
      {"eps1", "second-moment error eps1", false},
      {"eps2", "second-moment error eps2", false},
      {"eps3", "second-moment error eps3", false},
      {"E1", "second-moment error E1 = eps1 + eps2 + eps3", false},
      {"e11", "E1 sub-term E11", false},
      {"e12", "E1 sub-term E12", false},
      {"e13", "E1 sub-term E13", false},
      {"e14", "E1 sub-term E14", false},
      {"E2", "right-edge argument constant E2, rounded up", false},
      {"E3", "Jensen coefficient E3(sigma0)", false},
      {"E4", "Jensen constant E4(sigma0, H)", false},
      {"b1", "coefficient of T - H", true},
      {"b2", "coefficient of log(TH)", true},
      {"b3", "constant term", true},
      {"c1", "coefficient of T", true},
      {"c2", "coefficient of log T", true},
      {"c3", "constant term of the T form", true},
  };
  for (const Row& r : rows) {
    zd_number n = coefficient(c, r.key);
    std::string rounded = r.table_format ? formatted(c, r.key) : n.rounded;
    p.add({r.key, n.text, rounded, r.label});
  }
}

int cmd_constants(const Globals& g, const ConstantsArgs& a) {
  ContextPtr ctx = make_context(g);
  zd_coefficients* raw = nullptr;
  check(zd_coefficients_compute(ctx.get(), a.sigma.c_str(), a.sigma0.c_str(), a.H.c_str(), &raw));
  CoeffPtr c(raw);
  Envelope env{"constants", model_echo(ctx.get()), keyed_payload()};
  env.parameters.insert(env.parameters.begin(), {{"sigma", a.sigma}, {"sigma0", a.sigma0}, {"H", a.H}});
  coefficient_rows(env.payload, c.get());
  render(env, g, ctx.get(), std::cout);
  return kPass;
}

struct Table1Args {
  std::vector<std::string> rows;
  bool no_scan = false;
};

int cmd_table1(const Globals& g, const Table1Args& a) {
  ContextPtr ctx = make_context(g);
  std::vector<const char*> sigmas;
  for (const auto& s : a.rows) sigmas.push_back(s.c_str());
  zd_table* raw = nullptr;
  check(zd_table1(ctx.get(), sigmas.empty() ? nullptr : sigmas.data(), sigmas.size(), a.no_scan ? 0 : 1, &raw));
  TablePtr t(raw);

  Envelope env{"table1", model_echo(ctx.get()), {}};
  std::string row_echo;
  for (const auto& s : a.rows) row_echo += (row_echo.empty() ? "" : " ") + s;
  env.parameters.push_back({"rows", row_echo.empty() ? "all" : row_echo});
  env.parameters.push_back({"cell_scan", a.no_scan ? "off" : "on"});
  static const char* const keys[] = {"sigma",  "sigma0", "H",      "pub_b1", "b1",     "d_b1",        "pub_b2",
                                     "b2",     "d_b2",   "pub_b3", "b3",     "d_b3",   "pub_c3",      "c3",
                                     "d_c3",   "within", "scan_hits", "scan_points", "scan_first", "scan_last"};
  for (const char* k : keys) env.payload.columns.emplace_back(k);
  for (size_t r = 0; r < zd_table_rows(t.get()); ++r) {
    std::vector<std::string> row;
    for (const char* k : keys) {
      const char* text = nullptr;
      check(zd_table_text(t.get(), r, k, &text));
      row.emplace_back(text);
    }
    env.payload.add(std::move(row));
  }
  render(env, g, ctx.get(), std::cout);
  return zd_table_all_within(t.get()) ? kPass : kFail;
}

// Verification suites ----------------------------------------------------

struct VerifyArgs {
  std::string suite;
  // approx
  std::vector<double> sigmas{0.5, 0.75, 1.0, 1.25, 1.5};
  double t_lo = 14.1347, t_hi = 1e4;
  int t_count = 200;
  std::string constant;
  // small-t
  double sigma_min = 0.5, sigma_max = 2.0, sigma_step = 0.05;
  double small_t_min = 0.01, small_t_max = 15.0, small_t_step = 0.01;
  double small_constant = 43.0;
  // moment
  std::vector<std::string> sigma0s{"0.55", "0.65", "0.75"};
  std::string moment_H = "1000";
  std::vector<std::string> moment_T{"10000", "20000", "50000"};
  std::string surrogate_H_rh = "10000";
  // rademacher
  int count = 500;
  uint64_t seed = 20240521;
  double rad_t_lo = 10.0, rad_t_hi = 1e4;
  // logzeta
  std::string expected_E2 = "1.7655";
  // monotonicity
  std::string expected_sign_change = "0.679785";
  std::string sign_change_tolerance = "1e-5";
  std::vector<std::string> mono_sigma0s{"0.53", "0.70", "0.9723"};
  int mono_points = 20;
};

Payload report_payload() {
  Payload p;
  p.columns = {"suite", "points", "worst_ratio", "witness_sigma", "witness_t", "passed"};
  return p;
}

int emit_report(const Globals& g, zd_context* ctx, Envelope env, const zd_report* r) {
  double ws = 0, wt = 0;
  zd_report_witness(r, &ws, &wt);
  bool ok = zd_report_passed(r) != 0;
  env.payload.add({env.command.substr(7), std::to_string(zd_report_points(r)), shortest(zd_report_worst_ratio(r)),
                   shortest(ws), shortest(wt), ok ? "1" : "0"});
  render(env, g, ctx, std::cout);
  return ok ? kPass : kFail;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

std::string join(const std::vector<double>& v) {
  std::vector<std::string> s;
  for (double x : v) s.push_back(shortest(x));
  return join(s);
}

int verify_approx(const Globals& g, const VerifyArgs& a) {
  if (a.sigmas.empty() || a.t_count < 1 || !(a.t_lo > 0) || a.t_hi < a.t_lo) {
    throw CLI::ValidationError("approx grid", "empty or malformed grid");
  }
  ContextPtr ctx = make_context(g);
  zd_report* raw = nullptr;
  check(zd_verify_approx(ctx.get(), a.sigmas.data(), a.sigmas.size(), a.t_lo, a.t_hi, a.t_count,
                         a.constant.empty() ? nullptr : a.constant.c_str(), &raw));
  ReportPtr r(raw);
  Envelope env{"verify approx", model_echo(ctx.get()), report_payload()};
  env.parameters.push_back({"sigmas", join(a.sigmas)});
  env.parameters.push_back({"t_lo", shortest(a.t_lo)});
  env.parameters.push_back({"t_hi", shortest(a.t_hi)});
  env.parameters.push_back({"t_count", std::to_string(a.t_count)});
  env.parameters.push_back({"constant", a.constant.empty() ? "c0 rounded up" : a.constant});
  return emit_report(g, ctx.get(), std::move(env), r.get());
}

int verify_small_t(const Globals& g, const VerifyArgs& a) {
  if (!(a.sigma_step > 0) || !(a.small_t_step > 0) || a.sigma_max < a.sigma_min || a.small_t_max < a.small_t_min) {
    throw CLI::ValidationError("small-t grid", "empty or malformed grid");
  }
  ContextPtr ctx = make_context(g);
  zd_small_t_grid grid{a.sigma_min, a.sigma_max, a.sigma_step, a.small_t_min, a.small_t_max, a.small_t_step,
                       a.small_constant};
  zd_report* raw = nullptr;
  check(zd_verify_small_t(ctx.get(), &grid, &raw));
  ReportPtr r(raw);
  Envelope env{"verify small-t", model_echo(ctx.get()), report_payload()};
  env.parameters.push_back({"sigma", shortest(a.sigma_min) + ".." + shortest(a.sigma_max) + " step " + shortest(a.sigma_step)});
  env.parameters.push_back({"t", shortest(a.small_t_min) + ".." + shortest(a.small_t_max) + " step " + shortest(a.small_t_step)});
  env.parameters.push_back({"constant", shortest(a.small_constant)});
  return emit_report(g, ctx.get(), std::move(env), r.get());
}

int verify_moment(const Globals& g, const VerifyArgs& a) {
  if (a.sigma0s.empty() || a.moment_T.empty()) throw CLI::ValidationError("moment grid", "empty grid");
  Globals local = g;
  local.H_rh = a.surrogate_H_rh;
  ContextPtr ctx = make_context(local);
  Envelope env{"verify moment", model_echo(ctx.get()), {}};
  env.parameters.push_back({"sigma0", join(a.sigma0s)});
  env.parameters.push_back({"H", a.moment_H});
  env.parameters.push_back({"T", join(a.moment_T)});
  env.payload.columns = {"sigma0", "H", "T", "mean_square", "bound", "ratio", "relative_change", "step", "passed"};
  bool all = true;
  for (const auto& s0 : a.sigma0s) {
    zd_values* vraw = nullptr;
    check(zd_moment_bound(ctx.get(), s0.c_str(), a.moment_H.c_str(), &vraw));
    ValuesPtr v(vraw);
    zd_number bound{};
    check(zd_values_get(v.get(), "bound", &bound));
    for (const auto& T : a.moment_T) {
      zd_quadrature q{};
      check(zd_second_moment(ctx.get(), s0.c_str(), a.moment_H.c_str(), T.c_str(), &q));
      bool ok = q.mean_square <= bound.value;
      all = all && ok;
      env.payload.add({s0, a.moment_H, T, shortest(q.mean_square), bound.text, shortest(q.mean_square / bound.value),
                       shortest(q.relative_change), shortest(q.step), ok ? "1" : "0"});
    }
  }
  render(env, g, ctx.get(), std::cout);
  return all ? kPass : kFail;
}

int verify_rademacher(const Globals& g, const VerifyArgs& a) {
  if (a.count < 1 || !(a.rad_t_lo > 0) || a.rad_t_hi < a.rad_t_lo) {
    throw CLI::ValidationError("rademacher sample", "malformed sample");
  }
  ContextPtr ctx = make_context(g);
  zd_report* raw = nullptr;
  check(zd_verify_rademacher(ctx.get(), a.count, a.seed, a.rad_t_lo, a.rad_t_hi, &raw));
  ReportPtr r(raw);
  Envelope env{"verify rademacher", model_echo(ctx.get()), report_payload()};
  env.parameters.push_back({"count", std::to_string(a.count)});
  env.parameters.push_back({"seed", std::to_string(a.seed)});
  env.parameters.push_back({"t", shortest(a.rad_t_lo) + ".." + shortest(a.rad_t_hi)});
  return emit_report(g, ctx.get(), std::move(env), r.get());
}

int verify_logzeta(const Globals& g, const VerifyArgs& a) {
  ContextPtr ctx = make_context(g);
  zd_number un{}, rd{};
  check(zd_E2(ctx.get(), &un, &rd));
  Envelope env{"verify logzeta", model_echo(ctx.get()), {}};
  env.parameters.push_back({"expected", a.expected_E2});
  env.payload.columns = {"quantity", "value", "rounded", "expected", "passed"};
  const bool ok = std::string(rd.text) == a.expected_E2 || std::string(rd.rounded) == a.expected_E2;
  env.payload.add({"E2", un.text, rd.rounded, a.expected_E2, ok ? "1" : "0"});
  render(env, g, ctx.get(), std::cout);
  return ok ? kPass : kFail;
}

int verify_monotonicity(const Globals& g, const VerifyArgs& a) {
  if (a.mono_points < 2 || a.mono_sigma0s.empty()) throw CLI::ValidationError("monotonicity grid", "malformed grid");
  ContextPtr ctx = make_context(g);
  Envelope env{"verify monotonicity", model_echo(ctx.get()), {}};
  env.parameters.push_back({"sigma0", join(a.mono_sigma0s)});
  env.parameters.push_back({"points", std::to_string(a.mono_points)});
  env.parameters.push_back({"expected_sign_change", a.expected_sign_change});
  env.payload.columns = {"check", "sigma0", "detail", "passed"};
  bool all = true;

  zd_number left{}, right{};
  check(zd_e12_sign_change(ctx.get(), &left, &right));
  const double target = std::strtod(a.expected_sign_change.c_str(), nullptr);
  const double tol = std::strtod(a.sign_change_tolerance.c_str(), nullptr);
  const bool bracket_ok = std::fabs(left.value - target) <= tol && std::fabs(right.value - target) <= tol;
  all = all && bracket_ok;
  env.payload.add({"e12_sign_change", "", std::string("[") + left.text + ", " + right.text + "]", bracket_ok ? "1" : "0"});

  // T log-spaced on [H_rh, 10 H_rh].
  const std::string h_rh = setting(ctx.get(), "H_rh");
  const double lo = std::log(std::strtod(h_rh.c_str(), nullptr));
  std::vector<std::string> Ts;
  for (int i = 0; i < a.mono_points; ++i) {
    double u = lo + std::log(10.0) * i / (a.mono_points - 1);
    Ts.push_back(shortest(std::exp(u)));
  }
  Ts.front() = h_rh;
  for (const auto& s0 : a.mono_sigma0s) {
    std::vector<std::array<zd_number, 4>> vals(Ts.size());
    for (size_t i = 0; i < Ts.size(); ++i) check(zd_e1_subterms(ctx.get(), s0.c_str(), Ts[i].c_str(), vals[i].data()));
    static const char* const names[] = {"E11", "E12", "E13", "E14"};
    for (int k : {0, 2, 3}) {
      bool dec = true;
      std::string where;
      for (size_t i = 1; i < Ts.size(); ++i) {
        // Strict comparison on the full-precision text would need the
        // library; the doubles carry 15+ digits, ample for these gaps.
        if (!(vals[i][k].value < vals[i - 1][k].value)) {
          dec = false;
          if (where.empty()) where = "not decreasing at T=" + Ts[i];
        }
      }
      all = all && dec;
      env.payload.add({std::string(names[k]) + " decreasing", s0, dec ? "strictly decreasing on [H_rh, 10 H_rh]" : where,
                       dec ? "1" : "0"});
    }
  }
  render(env, g, ctx.get(), std::cout);
  return all ? kPass : kFail;
}

// Optimizer, comparison, bound ------------------------------------------

struct OptimizeArgs {
  std::string sigma;
  std::string objective = "b1";
  std::string T;
  std::string sigma0_lo, sigma0_hi, H_lo, H_hi, sigma0_tol, H_tol;
  int grid = 0;
  std::string trace_file;
};

int cmd_optimize(const Globals& g, const OptimizeArgs& a) {
  ContextPtr ctx = make_context(g);
  zd_optimize_spec spec{};
  auto opt = [](const std::string& s) { return s.empty() ? nullptr : s.c_str(); };
  spec.sigma = a.sigma.c_str();
  spec.objective = a.objective == "bound" ? ZD_MINIMIZE_BOUND_AT_T : ZD_MINIMIZE_B1;
  spec.T = opt(a.T);
  spec.sigma0_lo = opt(a.sigma0_lo);
  spec.sigma0_hi = opt(a.sigma0_hi);
  spec.H_lo = opt(a.H_lo);
  spec.H_hi = opt(a.H_hi);
  spec.sigma0_tolerance = opt(a.sigma0_tol);
  spec.H_tolerance = opt(a.H_tol);
  spec.grid_size = a.grid;
  zd_optimization* raw = nullptr;
  check(zd_optimize(ctx.get(), &spec, &raw));
  OptPtr o(raw);

  Envelope env{"optimize", model_echo(ctx.get()), keyed_payload()};
  env.parameters.insert(env.parameters.begin(), {{"sigma", a.sigma}, {"objective", a.objective}});
  if (!a.T.empty()) env.parameters.push_back({"T", a.T});
  for (const char* k : {"objective"}) {
    zd_number n{};
    check(zd_optimization_get(o.get(), k, &n));
    env.payload.add({k, n.text, n.rounded, a.objective == "bound" ? "bound at T" : "b1"});
  }
  env.payload.add({"trace_size", std::to_string(zd_optimization_trace_size(o.get())), "", "evaluations"});
  coefficient_rows(env.payload, zd_optimization_coefficients(o.get()));
  render(env, g, ctx.get(), std::cout);

  if (!a.trace_file.empty()) {
    std::ofstream out(a.trace_file);
    if (!out) throw std::runtime_error("cannot write " + a.trace_file);
    out << "sigma0,H,objective\r\n";
    for (size_t i = 0; i < zd_optimization_trace_size(o.get()); ++i) {
      double s0 = 0, h = 0, v = 0;
      check(zd_optimization_trace_point(o.get(), i, &s0, &h, &v));
      out << shortest(s0) << "," << shortest(h) << "," << shortest(v) << "\r\n";
    }
  }
  return kPass;
}

// Coefficients for a comparison: explicit (sigma0, H), else the published
// table row for sigma, else the b1 optimum.
CoeffPtr resolve_coefficients(zd_context* ctx, const std::string& sigma, std::string sigma0, std::string H,
                              std::string& source) {
  if (sigma0.empty() != H.empty()) throw CLI::ValidationError("--sigma0/--H", "give both or neither");
  if (sigma0.empty()) {
    const char* row = sigma.c_str();
    zd_table* traw = nullptr;
    if (zd_table1(ctx, &row, 1, 0, &traw) == ZD_OK) {
      TablePtr t(traw);
      const char* text = nullptr;
      check(zd_table_text(t.get(), 0, "sigma0", &text));
      sigma0 = text;
      check(zd_table_text(t.get(), 0, "H", &text));
      H = text;
      source = "table row";
    } else {
      zd_optimize_spec spec{};
      spec.sigma = sigma.c_str();
      zd_optimization* oraw = nullptr;
      check(zd_optimize(ctx, &spec, &oraw));
      OptPtr o(oraw);
      zd_number n{};
      check(zd_optimization_get(o.get(), "sigma0_star", &n));
      sigma0 = n.text;
      check(zd_optimization_get(o.get(), "H_star", &n));
      H = n.text;
      source = "b1 optimum";
    }
  } else {
    source = "given";
  }
  zd_coefficients* raw = nullptr;
  check(zd_coefficients_compute(ctx, sigma.c_str(), sigma0.c_str(), H.c_str(), &raw));
  return CoeffPtr(raw);
}

struct CompareArgs {
  std::string sigma;
  std::vector<std::string> T;
  std::string sigma0, H;
};

int cmd_compare(const Globals& g, const CompareArgs& a) {
  ContextPtr ctx = make_context(g);
  std::string source;
  CoeffPtr c = resolve_coefficients(ctx.get(), a.sigma, a.sigma0, a.H, source);
  std::vector<const char*> Ts;
  for (const auto& t : a.T) Ts.push_back(t.c_str());
  zd_comparison* raw = nullptr;
  check(zd_compare(ctx.get(), c.get(), Ts.data(), Ts.size(), &raw));
  CompPtr cmp(raw);

  Envelope env{"compare", model_echo(ctx.get()), {}};
  env.parameters.insert(env.parameters.begin(), {{"sigma", a.sigma},
                                                 {"sigma0", coefficient(c.get(), "sigma0").text},
                                                 {"H", coefficient(c.get(), "H").text},
                                                 {"coefficients", source},
                                                 {"T", join(a.T)}});
  static const char* const cols[] = {"this", "rosser_half", "trudgian_half", "ramare", "cheng"};
  env.payload.columns = {"sigma", "T"};
  for (const char* col : cols) env.payload.columns.emplace_back(col);
  for (size_t r = 0; r < zd_comparison_rows(cmp.get()); ++r) {
    zd_number T{};
    check(zd_comparison_T(cmp.get(), r, &T));
    std::vector<std::string> row{a.sigma, T.text};
    for (const char* col : cols) {
      int applicable = 0;
      zd_number n{};
      const char* reason = nullptr;
      check(zd_comparison_cell(cmp.get(), r, col, &applicable, &n, &reason));
      row.emplace_back(applicable ? std::string(n.rounded) : std::string("n/a: ") + reason);
    }
    env.payload.add(std::move(row));
  }
  render(env, g, ctx.get(), std::cout);
  return kPass;
}

struct BoundArgs {
  std::string sigma, T, sigma0, H;
  std::optional<int64_t> reference;
};

int cmd_bound(const Globals& g, const BoundArgs& a) {
  ContextPtr ctx = make_context(g);
  std::string source;
  CoeffPtr c = resolve_coefficients(ctx.get(), a.sigma, a.sigma0, a.H, source);
  zd_number v{};
  int64_t ceiling = 0;
  check(zd_bound_N(ctx.get(), c.get(), a.T.c_str(), &v, &ceiling));
  Envelope env{"bound", model_echo(ctx.get()), keyed_payload()};
  env.parameters.insert(env.parameters.begin(), {{"sigma", a.sigma},
                                                 {"T", a.T},
                                                 {"sigma0", coefficient(c.get(), "sigma0").text},
                                                 {"H", coefficient(c.get(), "H").text},
                                                 {"coefficients", source}});
  env.payload.add({"N_bound", v.text, v.rounded, "b1 (T - H) + b2 log(TH) + b3"});
  env.payload.add({"ceiling", std::to_string(ceiling), std::to_string(ceiling), "integer zero-count bound"});
  if (a.reference) {
    env.payload.add({"reference", std::to_string(*a.reference), std::to_string(*a.reference), "value compared against"});
    env.payload.add({"difference", std::to_string(ceiling - *a.reference), std::to_string(ceiling - *a.reference),
                     "ceiling - reference"});
  }
  for (const char* k : {"b1", "b2", "b3"}) {
    zd_number n = coefficient(c.get(), k);
    env.payload.add({k, n.text, formatted(c.get(), k), "coefficient"});
  }
  render(env, g, ctx.get(), std::cout);
  return kPass;
}

// ------------------------------------------------------------------- main

// CLI11 option that must parse as a decimal number but is kept as text so it
// reaches the library at full precision.
CLI::Option* decimal(CLI::App* app, const std::string& name, std::string& target, const std::string& desc) {
  return app->add_option(name, target, desc)->check(CLI::Number);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit zero-density constants for the Riemann zeta function"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(zd_version()));

  Globals g;
  app.add_option("--precision", g.precision, "working decimal digits (default: $ZDENSITY_PRECISION or 60)")
      ->check(CLI::Range(30, 10000));
  app.add_option("--output-digits", g.output_digits, "decimals in rounded output")->check(CLI::Range(0, 200));
  app.add_option("--format", g.format, "csv, json or markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  decimal(&app, "--H-rh", g.H_rh, "height of verified RH (default 3.061e10)");
  decimal(&app, "--eta", g.eta, "strip margin eta (default 0.0001)");
  app.add_option("--N0", g.N0, "Dirichlet truncation N0 for E2 (default 1000)");
  decimal(&app, "--t0", g.t0, "first zero height t0 (default 14.1347)");
  app.add_flag("--metadata", g.metadata, "csv: print the metadata block to stderr");

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "full constant chain at (sigma, sigma0, H)");
  decimal(constants, "--sigma", ca.sigma, "sigma")->required();
  decimal(constants, "--sigma0", ca.sigma0, "sigma0")->required();
  decimal(constants, "--H", ca.H, "H")->required();

  Table1Args ta;
  auto* table1 = app.add_subcommand("table1", "regenerate the 28-row coefficient table with deviations");
  table1->add_option("--rows", ta.rows, "restrict to these sigma rows (e.g. 0.85)")->delimiter(',');
  table1->add_flag("--no-scan", ta.no_scan, "skip the rounding-cell scan of rows outside tolerance");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "empirical verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_approx = verify->add_subcommand("approx", "|zeta(s) - sum_{n<t} n^-s| <= c0 t^-sigma");
  v_approx->add_option("--sigmas", va.sigmas, "sigma values")->delimiter(',');
  v_approx->add_option("--t-lo", va.t_lo, "smallest t");
  v_approx->add_option("--t-hi", va.t_hi, "largest t");
  v_approx->add_option("--t-count", va.t_count, "log-spaced t points");
  decimal(v_approx, "--constant", va.constant, "constant (default: c0 rounded up)");
  auto* v_small = verify->add_subcommand("small-t", "|R(s)| <= 43 t^-sigma for small t");
  v_small->add_option("--sigma-min", va.sigma_min);
  v_small->add_option("--sigma-max", va.sigma_max);
  v_small->add_option("--sigma-step", va.sigma_step);
  v_small->add_option("--t-min", va.small_t_min);
  v_small->add_option("--t-max", va.small_t_max);
  v_small->add_option("--t-step", va.small_t_step);
  v_small->add_option("--constant", va.small_constant);
  auto* v_moment = verify->add_subcommand("moment", "quadrature mean square against zeta(2 sigma0) + E1");
  v_moment->add_option("--sigma0", va.sigma0s, "sigma0 values")->delimiter(',')->check(CLI::Number);
  decimal(v_moment, "--H", va.moment_H, "lower end H");
  v_moment->add_option("--T", va.moment_T, "upper ends T")->delimiter(',')->check(CLI::Number);
  decimal(v_moment, "--surrogate-H-rh", va.surrogate_H_rh, "H_rh used in E1 at desk scale");
  auto* v_rad = verify->add_subcommand("rademacher", "convexity bound on sampled strip points");
  v_rad->add_option("--count", va.count, "sample size");
  v_rad->add_option("--seed", va.seed, "mt19937_64 seed");
  v_rad->add_option("--t-lo", va.rad_t_lo);
  v_rad->add_option("--t-hi", va.rad_t_hi);
  auto* v_log = verify->add_subcommand("logzeta", "recompute E2");
  decimal(v_log, "--expected", va.expected_E2, "expected rounded value");
  auto* v_mono = verify->add_subcommand("monotonicity", "E12 sign change and E11, E13, E14 monotonicity");
  decimal(v_mono, "--expected", va.expected_sign_change, "expected sign-change location");
  decimal(v_mono, "--tolerance", va.sign_change_tolerance, "allowed distance of the bracket ends");
  v_mono->add_option("--sigma0", va.mono_sigma0s, "sigma0 values")->delimiter(',')->check(CLI::Number);
  v_mono->add_option("--points", va.mono_points, "log-spaced T points on [H_rh, 10 H_rh]");

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "search (sigma0, H) for the best coefficients");
  decimal(optimize, "--sigma", oa.sigma, "sigma")->required();
  optimize->add_option("--objective", oa.objective, "b1 or bound")->check(CLI::IsMember({"b1", "bound"}));
  decimal(optimize, "--T", oa.T, "height for --objective bound (default H_rh)");
  decimal(optimize, "--sigma0-lo", oa.sigma0_lo, "sigma0 box lower end");
  decimal(optimize, "--sigma0-hi", oa.sigma0_hi, "sigma0 box upper end");
  decimal(optimize, "--H-lo", oa.H_lo, "H box lower end");
  decimal(optimize, "--H-hi", oa.H_hi, "H box upper end");
  decimal(optimize, "--sigma0-tolerance", oa.sigma0_tol, "refinement tolerance in sigma0");
  decimal(optimize, "--H-tolerance", oa.H_tol, "refinement tolerance in H");
  optimize->add_option("--grid", oa.grid, "coarse grid size per axis")->check(CLI::Range(1, 1000));
  optimize->add_option("--trace", oa.trace_file, "write the evaluation trace as csv");

  CompareArgs cma;
  auto* compare = app.add_subcommand("compare", "this bound beside the published alternatives");
  decimal(compare, "--sigma", cma.sigma, "sigma")->required();
  compare->add_option("--T", cma.T, "heights")->delimiter(',')->check(CLI::Number)->required();
  decimal(compare, "--sigma0", cma.sigma0, "sigma0 (default: table row or optimum)");
  decimal(compare, "--H", cma.H, "H (default: table row or optimum)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "evaluate the zero-density bound at T");
  decimal(bound, "--sigma", ba.sigma, "sigma")->required();
  decimal(bound, "--T", ba.T, "height T >= H_rh")->required();
  decimal(bound, "--sigma0", ba.sigma0, "sigma0 (default: table row or optimum)");
  decimal(bound, "--H", ba.H, "H (default: table row or optimum)");
  bound->add_option("--reference", ba.reference, "integer to report the ceiling against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }

  try {
    if (*constants) return cmd_constants(g, ca);
    if (*table1) return cmd_table1(g, ta);
    if (*optimize) return cmd_optimize(g, oa);
    if (*compare) return cmd_compare(g, cma);
    if (*bound) return cmd_bound(g, ba);
    if (*verify) {
      for (auto* sub : verify->get_subcommands({})) {
        if (*sub) va.suite = sub->get_name();
      }
      if (va.suite == "approx") return verify_approx(g, va);
      if (va.suite == "small-t") return verify_small_t(g, va);
      if (va.suite == "moment") return verify_moment(g, va);
      if (va.suite == "rademacher") return verify_rademacher(g, va);
      if (va.suite == "logzeta") return verify_logzeta(g, va);
      if (va.suite == "monotonicity") return verify_monotonicity(g, va);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
