#include "zdensity/zdensity.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "approx.hpp"
#include "density.hpp"
#include "errors.hpp"
#include "mangoldt.hpp"
#include "moment.hpp"
#include "optimizer.hpp"
#include "strip.hpp"
#include "table1.hpp"
#include "zeta.hpp"

using zdensity::Real;
namespace zd = zdensity;
namespace mp = zdensity::mp;

struct zd_context {
  zd::PrecisionContext ctx;
  std::string H_rh = zd::kDefaultHrh;
  std::string eta = "0.0001";
  std::string t0 = zd::kFirstZeroHeight;
  uint64_t N0 = 1000;
  std::unique_ptr<zd::DensityModel> model;  // built on first use, dropped on any setting change
  std::map<std::string, std::string> setting_text;
};

struct zd_values {
  zd::PrecisionContext ctx;
  std::vector<std::pair<std::string, Real>> entries;
};

struct zd_coefficients {
  zd::PrecisionContext ctx;
  zd::DensityCoefficients coeffs;
  Real c0;
  mutable std::map<std::string, std::string> formatted;
};

struct zd_comparison {
  zd::PrecisionContext ctx;
  std::vector<zd::ComparisonRow> rows;
};

struct zd_report {
  zd::VerificationReport report;
};

struct zd_table {
  std::vector<std::map<std::string, std::string>> rows;
  std::vector<int> within;
};

struct zd_optimization {
  zd::PrecisionContext ctx;
  zd::OptimizationResult result;
  zd_coefficients coefficients;
};

namespace {

thread_local std::string t_last_error;

struct NullArgument : std::invalid_argument {
  explicit NullArgument(const std::string& name) : std::invalid_argument(name + " must not be null") {}
};

template <class T>
T* require(T* p, const char* name) {
  if (p == nullptr) throw NullArgument(name);
  return p;
}

zd_status set_error(zd_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

zd_status map_kind(zd::ErrorKind kind) {
  switch (kind) {
    case zd::ErrorKind::domain: return ZD_ERR_DOMAIN;
    case zd::ErrorKind::pole: return ZD_ERR_POLE;
    case zd::ErrorKind::unsupported_height: return ZD_ERR_UNSUPPORTED_HEIGHT;
    case zd::ErrorKind::singular_parameter: return ZD_ERR_SINGULAR_PARAMETER;
    case zd::ErrorKind::invalid_argument: return ZD_ERR_INVALID_ARGUMENT;
  }
  return ZD_ERR_INTERNAL;
}

template <class F>
zd_status guarded(F&& body) {
  try {
    body();
    t_last_error.clear();
    return ZD_OK;
  } catch (const NullArgument& e) {
    return set_error(ZD_ERR_NULL_POINTER, e.what());
  } catch (const zd::Error& e) {
    return set_error(map_kind(e.kind()), e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(ZD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::range_error& e) {
    return set_error(ZD_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(ZD_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::exception& e) {
    return set_error(ZD_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(ZD_ERR_INTERNAL, "unknown error");
  }
}

Real parse(const char* text, const char* name) { return Real::parse(require(text, name)); }

void copy_text(char (&dst)[ZD_TEXT_MAX], const std::string& src) {
  std::size_t n = std::min(src.size(), static_cast<std::size_t>(ZD_TEXT_MAX - 1));
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

void fill(zd_number* out, const Real& x, const zd::PrecisionContext& ctx) {
  if (out == nullptr) return;
  out->value = x.to_double();
  copy_text(out->text, mp::to_string(x, std::min(ctx.digits, 200)));
  copy_text(out->rounded, zd::format_output(x, ctx));
}

zd::StripParams strip_of(const zd_context& c) {
  zd::StripParams s;
  s.eta = Real::parse(c.eta);
  s.N0 = c.N0;
  return s;
}

const zd::DensityModel& model_of(zd_context& c) {
  if (!c.model) {
    mp::ScopedPrecision guard(c.ctx.working_digits());
    c.model = std::make_unique<zd::DensityModel>(c.ctx, strip_of(c), Real::parse(c.H_rh), Real::parse(c.t0));
  }
  return *c.model;
}

std::string to_text(const Real& x, const zd::PrecisionContext& ctx) { return mp::to_string(x, std::min(ctx.digits, 200)); }

void fill_coefficients(zd_coefficients& out, const zd::PrecisionContext& ctx, zd::DensityCoefficients c, Real c0) {
  out.ctx = ctx;
  out.coeffs = std::move(c);
  out.c0 = std::move(c0);
  out.formatted.clear();
}

const Real* coefficient_field(const zd_coefficients& c, const std::string& key) {
  const auto& k = c.coeffs;
  const auto& b = k.moment.breakdown;
  const std::pair<const char*, const Real*> fields[] = {
      {"sigma", &k.params.sigma}, {"sigma0", &k.params.sigma0}, {"H", &k.params.H},
      {"H_rh", &k.params.H_rh},   {"c0", &c.c0},                {"b1", &k.b1},
      {"b2", &k.b2},              {"b3", &k.b3},                {"c1", &k.c1},
      {"c2", &k.c2},              {"c3", &k.c3},                {"zeta_2sigma0", &k.moment.zeta_2sigma0},
      {"bound", &k.moment.bound}, {"eps1", &b.eps1},            {"eps2", &b.eps2},
      {"eps3", &b.eps3},          {"E1", &b.E1_total},          {"e11", &b.e11},
      {"e12", &b.e12},            {"e13", &b.e13},              {"e14", &b.e14},
      {"E2", &k.E2},              {"E3", &k.E3},                {"E4", &k.E4},
  };
  for (const auto& [name, value] : fields) {
    if (key == name) return value;
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char* zd_version(void) { return ZD_PROJECT_VERSION; }

const char* zd_last_error(void) { return t_last_error.c_str(); }

const char* zd_status_name(zd_status status) {
  switch (status) {
    case ZD_OK: return "ok";
    case ZD_ERR_DOMAIN: return "domain error";
    case ZD_ERR_POLE: return "pole";
    case ZD_ERR_UNSUPPORTED_HEIGHT: return "unsupported height";
    case ZD_ERR_SINGULAR_PARAMETER: return "singular parameter";
    case ZD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZD_ERR_NULL_POINTER: return "null pointer";
    case ZD_ERR_OUT_OF_RANGE: return "out of range";
    case ZD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

// ------------------------------------------------------------------ context

zd_status zd_context_create(int digits, int output_digits, zd_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto c = std::make_unique<zd_context>();
    c->ctx = digits == 0 ? zd::PrecisionContext::from_environment() : zd::PrecisionContext{};
    if (digits != 0) c->ctx.digits = digits;
    c->ctx.output_digits = output_digits;
    c->ctx.validate();
    *out = c.release();
  });
}

void zd_context_destroy(zd_context* ctx) { delete ctx; }

zd_status zd_context_set_rounding(zd_context* ctx, zd_rounding rounding) {
  return guarded([&] {
    require(ctx, "ctx");
    switch (rounding) {
      case ZD_ROUND_UP: ctx->ctx.rounding = zd::Rounding::toward_plus_infinity; break;
      case ZD_ROUND_DOWN: ctx->ctx.rounding = zd::Rounding::toward_minus_infinity; break;
      case ZD_ROUND_NEAREST: ctx->ctx.rounding = zd::Rounding::nearest; break;
      default: throw std::invalid_argument("unknown rounding mode");
    }
    ctx->model.reset();
  });
}

int zd_context_digits(const zd_context* ctx) { return ctx == nullptr ? 0 : ctx->ctx.digits; }
int zd_context_output_digits(const zd_context* ctx) { return ctx == nullptr ? 0 : ctx->ctx.output_digits; }

zd_status zd_context_set_h_rh(zd_context* ctx, const char* H_rh) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    Real v = parse(H_rh, "H_rh");
    if (v <= 1000L) throw zd::Error(zd::ErrorKind::domain, "H_rh must exceed 1000");
    ctx->H_rh = H_rh;
    ctx->model.reset();
  });
}

zd_status zd_context_set_eta(zd_context* ctx, const char* eta) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    Real v = parse(eta, "eta");
    if (v <= 0L || v >= 1L) throw zd::Error(zd::ErrorKind::domain, "eta must lie in (0, 1)");
    ctx->eta = eta;
    ctx->model.reset();
  });
}

zd_status zd_context_set_n0(zd_context* ctx, uint64_t N0) {
  return guarded([&] {
    require(ctx, "ctx");
    if (N0 < 100) throw zd::Error(zd::ErrorKind::domain, "N0 must be at least 100");
    if (N0 > 100000000) throw zd::Error(zd::ErrorKind::domain, "N0 above 1e8");
    ctx->N0 = N0;
    ctx->model.reset();
  });
}

zd_status zd_context_set_t0(zd_context* ctx, const char* t0) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    Real v = parse(t0, "t0");
    if (v <= 0L) throw zd::Error(zd::ErrorKind::domain, "t0 must be positive");
    ctx->t0 = t0;
    ctx->model.reset();
  });
}

zd_status zd_context_setting(const zd_context* ctx, const char* key, const char** text) {
  return guarded([&] {
    require(ctx, "ctx");
    require(key, "key");
    require(text, "text");
    auto& c = const_cast<zd_context&>(*ctx);
    std::string k = key;
    std::string value;
    if (k == "H_rh") {
      value = c.H_rh;
    } else if (k == "eta") {
      value = c.eta;
    } else if (k == "t0") {
      value = c.t0;
    } else if (k == "N0") {
      value = std::to_string(c.N0);
    } else if (k == "sigma1") {
      mp::ScopedPrecision guard(c.ctx.working_digits());
      value = mp::to_string(strip_of(c).sigma1(), c.ctx.digits);
    } else {
      throw std::invalid_argument("unknown setting '" + k + "'");
    }
    c.setting_text[k] = value;
    *text = c.setting_text[k].c_str();
  });
}

// -------------------------------------------------------- special functions

zd_status zd_zeta_real(zd_context* ctx, const char* sigma, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::zeta_real(parse(sigma, "sigma"), ctx->ctx), ctx->ctx);
  });
}

zd_status zd_zeta_complex(zd_context* ctx, const char* sigma, const char* t, zd_number* re, zd_number* im) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    zd::Complex z = zd::zeta_complex({parse(sigma, "sigma"), parse(t, "t")}, ctx->ctx);
    fill(re, z.re, ctx->ctx);
    fill(im, z.im, ctx->ctx);
  });
}

zd_status zd_log_deriv_zeta_real(zd_context* ctx, const char* sigma, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::log_deriv_zeta_real(parse(sigma, "sigma"), ctx->ctx), ctx->ctx);
  });
}

zd_status zd_dirichlet_partial_sum(zd_context* ctx, const char* sigma, const char* t, const char* x, zd_number* re,
                                   zd_number* im) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    zd::Complex z = zd::dirichlet_partial_sum({parse(sigma, "sigma"), parse(t, "t")}, parse(x, "x"), ctx->ctx);
    fill(re, z.re, ctx->ctx);
    fill(im, z.im, ctx->ctx);
  });
}

zd_status zd_mangoldt(uint64_t n, double* out) {
  return guarded([&] { *require(out, "out") = zd::mangoldt(n); });
}

// ---------------------------------------------------- approximation constant

zd_status zd_big_C(zd_context* ctx, const char* sigma, const char* c, const char* t0, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    zd::ApproxParams p{parse(sigma, "sigma"), parse(c, "c"), parse(t0, "t0")};
    fill(out, zd::big_C(p, ctx->ctx), ctx->ctx);
  });
}

zd_status zd_c0(zd_context* ctx, zd_number* unrounded, zd_number* rounded) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto c = zd::c0_corollary(ctx->ctx, Real::parse(ctx->t0));
    fill(unrounded, c.unrounded, ctx->ctx);
    fill(rounded, c.rounded, ctx->ctx);
  });
}

// ------------------------------------------------------------ second moment

zd_status zd_e1_subterms(zd_context* ctx, const char* sigma0, const char* T, zd_number out[4]) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto e = zd::e1_subterms(parse(sigma0, "sigma0"), parse(T, "T"), ctx->ctx);
    fill(&out[0], e.e11, ctx->ctx);
    fill(&out[1], e.e12, ctx->ctx);
    fill(&out[2], e.e13, ctx->ctx);
    fill(&out[3], e.e14, ctx->ctx);
  });
}

zd_status zd_e12_numerator(zd_context* ctx, const char* sigma0, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::e12_numerator(parse(sigma0, "sigma0"), ctx->ctx), ctx->ctx);
  });
}

zd_status zd_e12_sign_change(zd_context* ctx, zd_number* left, zd_number* right) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto b = zd::e12_sign_change(ctx->ctx);
    fill(left, b.left, ctx->ctx);
    fill(right, b.right, ctx->ctx);
  });
}

zd_status zd_moment_bound(zd_context* ctx, const char* sigma0, const char* H, zd_values** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    zd::MomentParams p{parse(sigma0, "sigma0"), parse(H, "H"), Real::parse(ctx->H_rh)};
    auto m = zd::moment_bound(p, model_of(*ctx).c0(), ctx->ctx);
    auto v = std::make_unique<zd_values>();
    v->ctx = ctx->ctx;
    const auto& b = m.breakdown;
    v->entries = {{"zeta_2sigma0", m.zeta_2sigma0}, {"eps1", b.eps1}, {"eps2", b.eps2},   {"eps3", b.eps3},
                  {"E1", b.E1_total},               {"e11", b.e11},   {"e12", b.e12},     {"e13", b.e13},
                  {"e14", b.e14},                   {"bound", m.bound}, {"half_log_bound", m.half_log_bound}};
    *out = v.release();
  });
}

zd_status zd_second_moment(zd_context* ctx, const char* sigma0, const char* H, const char* T, zd_quadrature* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto q = zd::numeric_second_moment(parse(sigma0, "sigma0"), parse(H, "H"), parse(T, "T"), ctx->ctx);
    *out = {q.mean_square, q.relative_change, q.step, q.evaluations};
  });
}

// -------------------------------------------------------------- strip terms

zd_status zd_E2(zd_context* ctx, zd_number* unrounded, zd_number* rounded) {
  return guarded([&] {
    require(ctx, "ctx");
    const auto& e2 = model_of(*ctx).E2();
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(unrounded, e2.unrounded, ctx->ctx);
    fill(rounded, e2.rounded, ctx->ctx);
  });
}

zd_status zd_E3(zd_context* ctx, const char* sigma0, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::E3_constant(parse(sigma0, "sigma0"), strip_of(*ctx), ctx->ctx), ctx->ctx);
  });
}

zd_status zd_E4(zd_context* ctx, const char* sigma0, const char* H, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::E4_constant(parse(sigma0, "sigma0"), parse(H, "H"), strip_of(*ctx), ctx->ctx), ctx->ctx);
  });
}

// ------------------------------------------------------------- named values

size_t zd_values_count(const zd_values* v) { return v == nullptr ? 0 : v->entries.size(); }

const char* zd_values_key(const zd_values* v, size_t i) {
  if (v == nullptr || i >= v->entries.size()) return nullptr;
  return v->entries[i].first.c_str();
}

zd_status zd_values_get(const zd_values* v, const char* key, zd_number* out) {
  return guarded([&] {
    require(v, "values");
    require(key, "key");
    for (const auto& [k, x] : v->entries) {
      if (k == key) {
        fill(out, x, v->ctx);
        return;
      }
    }
    throw std::invalid_argument(std::string("unknown key '") + key + "'");
  });
}

void zd_values_destroy(zd_values* v) { delete v; }

// ------------------------------------------------------------- coefficients

zd_status zd_coefficients_compute(zd_context* ctx, const char* sigma, const char* sigma0, const char* H,
                                  zd_coefficients** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    const auto& model = model_of(*ctx);
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto c = std::make_unique<zd_coefficients>();
    fill_coefficients(*c, ctx->ctx, model.coefficients(parse(sigma, "sigma"), parse(sigma0, "sigma0"), parse(H, "H")),
                      model.c0());
    *out = c.release();
  });
}

void zd_coefficients_destroy(zd_coefficients* c) { delete c; }

zd_status zd_coefficients_get(const zd_coefficients* c, const char* key, zd_number* out) {
  return guarded([&] {
    require(c, "coefficients");
    require(key, "key");
    const Real* x = coefficient_field(*c, key);
    if (x == nullptr) throw std::invalid_argument(std::string("unknown coefficient '") + key + "'");
    mp::ScopedPrecision guard(c->ctx.working_digits());
    fill(out, *x, c->ctx);
  });
}

zd_status zd_coefficients_format(const zd_coefficients* c, const char* key, int decimals, const char** text) {
  return guarded([&] {
    require(c, "coefficients");
    require(key, "key");
    require(text, "text");
    if (decimals < 0 || decimals > 100) throw std::invalid_argument("decimals outside [0, 100]");
    mp::ScopedPrecision guard(c->ctx.working_digits());
    auto f = zd::format_coefficients(c->coeffs, decimals);
    std::string k = key;
    std::string value;
    if (k == "H") value = f.H;
    else if (k == "b1") value = f.b1;
    else if (k == "b2") value = f.b2;
    else if (k == "b3") value = f.b3;
    else if (k == "c1") value = f.c1;
    else if (k == "c2") value = f.c2;
    else if (k == "c3") value = f.c3;
    else throw std::invalid_argument("unknown table column '" + k + "'");
    std::string slot = k + "@" + std::to_string(decimals);
    c->formatted[slot] = value;
    *text = c->formatted[slot].c_str();
  });
}

zd_status zd_bound_N(zd_context* ctx, const zd_coefficients* c, const char* T, zd_number* value, int64_t* ceiling) {
  return guarded([&] {
    require(ctx, "ctx");
    require(c, "coefficients");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto b = zd::bound_N(c->coeffs, parse(T, "T"), ctx->ctx);
    fill(value, b.value, ctx->ctx);
    if (ceiling != nullptr) *ceiling = b.ceiling;
  });
}

// --------------------------------------------------------- published bounds

zd_status zd_nt_band(zd_context* ctx, const char* T, zd_nt_variant variant, zd_number* lower, zd_number* upper) {
  return guarded([&] {
    require(ctx, "ctx");
    if (variant != ZD_NT_ROSSER && variant != ZD_NT_TRUDGIAN) throw std::invalid_argument("unknown N(T) variant");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto band = zd::rosser_NT_band(parse(T, "T"), variant == ZD_NT_ROSSER ? zd::NTVariant::rosser : zd::NTVariant::trudgian,
                                   ctx->ctx);
    fill(lower, band.lower, ctx->ctx);
    fill(upper, band.upper, ctx->ctx);
  });
}

zd_status zd_ramare_bound(zd_context* ctx, const char* sigma, const char* T, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    fill(out, zd::ramare_bound(parse(sigma, "sigma"), parse(T, "T"), ctx->ctx), ctx->ctx);
  });
}

zd_status zd_cheng_bound(zd_context* ctx, const char* sigma, const char* T, int* applicable, zd_number* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(applicable, "applicable");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto a = zd::cheng_bound(parse(sigma, "sigma"), parse(T, "T"), ctx->ctx);
    *applicable = a.applicable() ? 1 : 0;
    if (a.applicable()) fill(out, *a.value, ctx->ctx);
  });
}

zd_status zd_compare(zd_context* ctx, const zd_coefficients* c, const char* const* T_list, size_t count,
                     zd_comparison** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(c, "coefficients");
    require(out, "out");
    *out = nullptr;
    if (count > 0) require(T_list, "T_list");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    std::vector<Real> Ts;
    for (size_t i = 0; i < count; ++i) Ts.push_back(parse(T_list[i], "T"));
    auto cmp = std::make_unique<zd_comparison>();
    cmp->ctx = ctx->ctx;
    cmp->rows = zd::compare(c->coeffs.params.sigma, Ts, c->coeffs, ctx->ctx);
    *out = cmp.release();
  });
}

size_t zd_comparison_rows(const zd_comparison* cmp) { return cmp == nullptr ? 0 : cmp->rows.size(); }

zd_status zd_comparison_cell(const zd_comparison* cmp, size_t row, const char* column, int* applicable,
                             zd_number* out, const char** reason) {
  return guarded([&] {
    require(cmp, "comparison");
    require(column, "column");
    require(applicable, "applicable");
    if (row >= cmp->rows.size()) throw std::out_of_range("comparison row out of range");
    const auto& r = cmp->rows[row];
    std::string col = column;
    const zd::Applicable* cell = nullptr;
    if (col == "this") cell = &r.this_bound;
    else if (col == "rosser_half") cell = &r.rosser_half;
    else if (col == "trudgian_half") cell = &r.trudgian_half;
    else if (col == "ramare") cell = &r.ramare;
    else if (col == "cheng") cell = &r.cheng;
    else throw std::invalid_argument("unknown comparison column '" + col + "'");
    *applicable = cell->applicable() ? 1 : 0;
    if (cell->applicable()) {
      mp::ScopedPrecision guard(cmp->ctx.working_digits());
      fill(out, *cell->value, cmp->ctx);
    }
    if (reason != nullptr) *reason = cell->reason.c_str();
  });
}

zd_status zd_comparison_T(const zd_comparison* cmp, size_t row, zd_number* out) {
  return guarded([&] {
    require(cmp, "comparison");
    if (row >= cmp->rows.size()) throw std::out_of_range("comparison row out of range");
    mp::ScopedPrecision guard(cmp->ctx.working_digits());
    fill(out, cmp->rows[row].T, cmp->ctx);
  });
}

void zd_comparison_destroy(zd_comparison* cmp) { delete cmp; }

// ------------------------------------------------------------- verification

zd_status zd_verify_approx(zd_context* ctx, const double* sigmas, size_t sigma_count, double t_lo, double t_hi,
                           int t_count, const char* constant, zd_report** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    if (sigma_count > 0) require(sigmas, "sigmas");
    if (t_count < 0) throw std::invalid_argument("negative t count");
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    std::vector<Real> sg;
    for (size_t i = 0; i < sigma_count; ++i) sg.push_back(Real::from_decimal(sigmas[i]));
    std::vector<Real> tg;
    if (t_count > 0) tg = zd::log_spaced(Real::from_decimal(t_lo), Real::from_decimal(t_hi), t_count);
    std::optional<Real> bound;
    if (constant != nullptr) {
      bound = Real::parse(constant);
    } else {
      bound = model_of(*ctx).c0();
    }
    auto r = std::make_unique<zd_report>();
    r->report = zd::verify_approx(sg, tg, ctx->ctx, bound);
    *out = r.release();
  });
}

zd_status zd_verify_small_t(zd_context* ctx, const zd_small_t_grid* grid, zd_report** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    zd::SmallTGrid g;
    if (grid != nullptr) {
      g.sigma_min = Real::from_decimal(grid->sigma_min);
      g.sigma_max = Real::from_decimal(grid->sigma_max);
      g.sigma_step = Real::from_decimal(grid->sigma_step);
      g.t_min = Real::from_decimal(grid->t_min);
      g.t_max = Real::from_decimal(grid->t_max);
      g.t_step = Real::from_decimal(grid->t_step);
      g.constant = Real::from_decimal(grid->constant);
      if (g.sigma_step <= 0L || g.t_step <= 0L) throw std::invalid_argument("grid steps must be positive");
      if (g.sigma_max < g.sigma_min || g.t_max < g.t_min) throw std::invalid_argument("empty grid range");
    }
    auto r = std::make_unique<zd_report>();
    r->report = zd::verify_small_t(ctx->ctx, g);
    *out = r.release();
  });
}

zd_status zd_verify_rademacher(zd_context* ctx, int count, uint64_t seed, double t_lo, double t_hi, zd_report** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    const Real eta = Real::parse(ctx->eta);
    auto sample = zd::rademacher_sample(eta, count, seed, t_lo, t_hi);
    auto r = std::make_unique<zd_report>();
    r->report = zd::verify_rademacher(eta, sample, ctx->ctx);
    *out = r.release();
  });
}

double zd_report_worst_ratio(const zd_report* r) { return r == nullptr ? 0.0 : r->report.worst_ratio; }

void zd_report_witness(const zd_report* r, double* sigma, double* t) {
  if (r == nullptr) return;
  if (sigma != nullptr) *sigma = r->report.witness.sigma;
  if (t != nullptr) *t = r->report.witness.t;
}

uint64_t zd_report_points(const zd_report* r) { return r == nullptr ? 0 : r->report.points_checked; }
int zd_report_passed(const zd_report* r) { return r != nullptr && r->report.passed ? 1 : 0; }
void zd_report_destroy(zd_report* r) { delete r; }

// -------------------------------------------------------------------- table

zd_status zd_table1(zd_context* ctx, const char* const* sigmas, size_t count, int scan_cells, zd_table** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    std::vector<std::string> filter;
    if (count > 0) require(sigmas, "sigmas");
    for (size_t i = 0; i < count; ++i) filter.emplace_back(require(sigmas[i], "sigmas[i]"));
    const auto& model = model_of(*ctx);
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto entries = zd::regenerate_table1(model, filter, scan_cells != 0);
    auto t = std::make_unique<zd_table>();
    for (const auto& e : entries) {
      std::map<std::string, std::string> m;
      const auto& p = e.published;
      m["sigma"] = p.sigma;
      m["sigma0"] = p.sigma0;
      m["H"] = std::to_string(p.H);
      m["pub_b1"] = p.b1;
      m["pub_b2"] = p.b2;
      m["pub_b3"] = std::to_string(p.b3);
      m["pub_c3"] = std::to_string(p.c3);
      m["b1"] = e.formatted.b1;
      m["b2"] = e.formatted.b2;
      m["b3"] = e.formatted.b3;
      m["c3"] = e.formatted.c3;
      m["b1_value"] = to_text(e.recomputed.b1, ctx->ctx);
      m["b2_value"] = to_text(e.recomputed.b2, ctx->ctx);
      m["b3_value"] = to_text(e.recomputed.b3, ctx->ctx);
      m["c3_value"] = to_text(e.recomputed.c3, ctx->ctx);
      m["d_b1"] = std::to_string(e.deviation.b1);
      m["d_b2"] = std::to_string(e.deviation.b2);
      m["d_b3"] = std::to_string(e.deviation.b3);
      m["d_c3"] = std::to_string(e.deviation.c3);
      const bool within = e.deviation.within_tolerance();
      m["within"] = within ? "1" : "0";
      m["scan_points"] = m["scan_hits"] = m["scan_first"] = m["scan_last"] = "";
      if (e.cell_scan) {
        m["scan_points"] = std::to_string(e.cell_scan->points);
        m["scan_hits"] = std::to_string(e.cell_scan->hits);
        if (e.cell_scan->first_hit) m["scan_first"] = mp::to_string(*e.cell_scan->first_hit, 12);
        if (e.cell_scan->last_hit) m["scan_last"] = mp::to_string(*e.cell_scan->last_hit, 12);
      }
      t->rows.push_back(std::move(m));
      t->within.push_back(within ? 1 : 0);
    }
    *out = t.release();
  });
}

size_t zd_table_rows(const zd_table* t) { return t == nullptr ? 0 : t->rows.size(); }

zd_status zd_table_text(const zd_table* t, size_t row, const char* key, const char** text) {
  return guarded([&] {
    require(t, "table");
    require(key, "key");
    require(text, "text");
    if (row >= t->rows.size()) throw std::out_of_range("table row out of range");
    auto it = t->rows[row].find(key);
    if (it == t->rows[row].end()) throw std::invalid_argument(std::string("unknown table key '") + key + "'");
    *text = it->second.c_str();
  });
}

int zd_table_row_within(const zd_table* t, size_t row) {
  if (t == nullptr || row >= t->within.size()) return 0;
  return t->within[row];
}

int zd_table_all_within(const zd_table* t) {
  if (t == nullptr) return 0;
  return std::all_of(t->within.begin(), t->within.end(), [](int w) { return w != 0; }) ? 1 : 0;
}

void zd_table_destroy(zd_table* t) { delete t; }

// ---------------------------------------------------------------- optimizer

zd_status zd_optimize(zd_context* ctx, const zd_optimize_spec* spec, zd_optimization** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    const auto& model = model_of(*ctx);
    mp::ScopedPrecision guard(ctx->ctx.working_digits());
    auto s = zd::OptimizationSpec::defaults(parse(spec->sigma, "sigma"), model.H_rh());
    switch (spec->objective) {
      case ZD_MINIMIZE_B1: s.objective = zd::Objective::minimize_b1; break;
      case ZD_MINIMIZE_BOUND_AT_T: s.objective = zd::Objective::minimize_bound_at_T; break;
      default: throw std::invalid_argument("unknown objective");
    }
    if (spec->T != nullptr) s.T = Real::parse(spec->T);
    if (spec->sigma0_lo != nullptr) s.sigma0_box.lo = Real::parse(spec->sigma0_lo);
    if (spec->sigma0_hi != nullptr) s.sigma0_box.hi = Real::parse(spec->sigma0_hi);
    if (spec->H_lo != nullptr) s.H_box.lo = Real::parse(spec->H_lo);
    if (spec->H_hi != nullptr) s.H_box.hi = Real::parse(spec->H_hi);
    if (spec->sigma0_tolerance != nullptr) s.sigma0_tolerance = Real::parse(spec->sigma0_tolerance);
    if (spec->H_tolerance != nullptr) s.H_tolerance = Real::parse(spec->H_tolerance);
    if (spec->grid_size != 0) s.grid_size = spec->grid_size;
    auto o = std::make_unique<zd_optimization>();
    o->ctx = ctx->ctx;
    o->result = zd::optimize(s, model);
    fill_coefficients(o->coefficients, ctx->ctx, o->result.coefficients, model.c0());
    *out = o.release();
  });
}

zd_status zd_optimization_get(const zd_optimization* o, const char* key, zd_number* out) {
  return guarded([&] {
    require(o, "optimization");
    require(key, "key");
    std::string k = key;
    mp::ScopedPrecision guard(o->ctx.working_digits());
    if (k == "sigma0_star") fill(out, o->result.sigma0_star, o->ctx);
    else if (k == "H_star") fill(out, o->result.H_star, o->ctx);
    else if (k == "objective") fill(out, o->result.objective, o->ctx);
    else throw std::invalid_argument("unknown optimization key '" + k + "'");
  });
}

const zd_coefficients* zd_optimization_coefficients(const zd_optimization* o) {
  return o == nullptr ? nullptr : &o->coefficients;
}

size_t zd_optimization_trace_size(const zd_optimization* o) { return o == nullptr ? 0 : o->result.trace.size(); }

zd_status zd_optimization_trace_point(const zd_optimization* o, size_t i, double* sigma0, double* H,
                                      double* objective) {
  return guarded([&] {
    require(o, "optimization");
    if (i >= o->result.trace.size()) throw std::out_of_range("trace index out of range");
    const auto& p = o->result.trace[i];
    if (sigma0 != nullptr) *sigma0 = p.sigma0.to_double();
    if (H != nullptr) *H = p.H.to_double();
    if (objective != nullptr) *objective = p.objective.to_double();
  });
}

void zd_optimization_destroy(zd_optimization* o) { delete o; }

}  // extern "C"
