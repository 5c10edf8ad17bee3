#include "density.hpp"

#include <cmath>

#include "approx.hpp"
#include "errors.hpp"
#include "zeta.hpp"

namespace zdensity {

void DensityParams::validate(const Real& sigma1) const {
  if (sigma0 <= Real::parse(kSigma0Min) || sigma0 >= Real::parse(kSigma0Max)) {
    fail(ErrorKind::domain, "sigma0 outside (0.5208, 0.9723)");
  }
  if (sigma <= sigma0) fail(ErrorKind::domain, "sigma must exceed sigma0");
  if (sigma >= sigma1) fail(ErrorKind::domain, "sigma must be below sigma1 = " + mp::to_string(sigma1, 12));
  if (H < 1000L) fail(ErrorKind::domain, "H below 1000");
  if (H == H_rh) fail(ErrorKind::singular_parameter, "H equals H_rh (division by H_rh - H)");
  if (H > H_rh) fail(ErrorKind::domain, "H above H_rh");
}

FormattedCoefficients format_coefficients(const DensityCoefficients& c, int decimals) {
  FormattedCoefficients f;
  f.H = std::to_string(ceiling(c.params.H));
  f.b1 = format_upper(c.b1, decimals);
  f.b2 = format_upper(c.b2, decimals);
  f.b3 = std::to_string(ceiling(c.b3));
  f.c1 = format_upper(c.c1, decimals);
  f.c2 = format_upper(c.c2, decimals);
  f.c3 = std::to_string(ceiling(c.c3));
  return f;
}

DensityModel::DensityModel(const PrecisionContext& ctx, StripParams strip, Real H_rh, Real t0)
    : ctx_(ctx), strip_(std::move(strip)), H_rh_(std::move(H_rh)) {
  ctx_.validate();
  strip_.validate();
  if (H_rh_ <= 1000L) fail(ErrorKind::domain, "H_rh must exceed 1000");
  c0_ = c0_corollary(ctx_, t0).rounded;
  E2_ = E2_constant(strip_, ctx_);
  const Real one_eta = Real(1) + strip_.eta;
  const Real z1 = zeta_real(one_eta, ctx_);
  const Real z2 = zeta_real(one_eta * 2L, ctx_);
  mp::ScopedPrecision guard(ctx_.working_digits());
  log_zeta_ratio_ = mp::log(z1) * 4L - mp::log(z2) * 2L;
}

DensityCoefficients DensityModel::coefficients(const Real& sigma, const Real& sigma0, const Real& H) const {
  mp::ScopedPrecision guard(ctx_.working_digits());
  DensityCoefficients c;
  c.params = DensityParams{sigma, sigma0, H, H_rh_};
  const Real s1 = strip_.sigma1();
  c.params.validate(s1);
  c.moment = moment_bound(MomentParams{sigma0, H, H_rh_}, c0_, ctx_);

  const Real& eta = strip_.eta;
  const Real one_eta = Real(1) + eta;
  const Real one_2eta = Real(1) + eta * 2L;
  const Real two_pi = mp::pi() * 2L;
  c.E2 = E2_.rounded;
  c.E3 = E3_constant(sigma0, strip_, ctx_);
  const Real ratio = (H + one_eta * 3L) / (H - one_2eta) * 3L;
  const Real log_power = mp::log((one_eta * 3L / H + 1L) / two_pi) * one_2eta / 2L;
  c.E4 = mp::pi() * (s1 - sigma0) / mp::ln2() * (mp::log(ratio) + log_power + log_zeta_ratio_);

  const Real denom = two_pi * (sigma - sigma0);
  c.b1 = mp::log(c.moment.bound) / (denom * 2L);
  c.b2 = c.E3 / denom;
  c.b3 = (c.E2 + c.E4) / denom;
  c.c1 = c.b1;
  c.c2 = c.b2;
  c.c3 = -(c.b1 * H) + c.b2 * mp::log(H) + c.b3;
  return c;
}

DensityCoefficients compute_coefficients(const DensityParams& p, const PrecisionContext& ctx) {
  StripParams strip;
  p.validate(strip.sigma1());
  return DensityModel(ctx, strip, p.H_rh).coefficients(p.sigma, p.sigma0, p.H);
}

NBound bound_N_unchecked(const DensityCoefficients& c, const Real& T, const PrecisionContext& ctx) {
  mp::ScopedPrecision guard(ctx.working_digits());
  if (T <= 0L) fail(ErrorKind::domain, "bound_N requires T > 0");
  NBound out;
  out.value = c.b1 * (T - c.params.H) + c.b2 * mp::log(T * c.params.H) + c.b3;
  out.ceiling = ceiling(out.value);
  return out;
}

NBound bound_N(const DensityCoefficients& c, const Real& T, const PrecisionContext& ctx) {
  if (T < c.params.H_rh) fail(ErrorKind::domain, "bound_N requires T >= H_rh");
  return bound_N_unchecked(c, T, ctx);
}

Band rosser_NT_band(const Real& T, NTVariant variant, const PrecisionContext& ctx) {
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real e = mp::exp(Real(1));
  if (T <= e) fail(ErrorKind::domain, "N(T) band requires T > e");
  const bool rosser = variant == NTVariant::rosser;
  const Real a = Real::parse(rosser ? "0.137" : "0.111");
  const Real b = Real::parse(rosser ? "0.443" : "0.275");
  const Real c = Real::parse(rosser ? "1.588" : "2.450");
  const Real two_pi = mp::pi() * 2L;
  const Real logT = mp::log(T);
  const Real main = T / two_pi * mp::log(T / (two_pi * e)) + Real(7) / 8L;
  const Real err = a * logT + b * mp::log(logT) + c;
  return {main - err, main + err};
}

Real ramare_bound(const Real& sigma, const Real& T, const PrecisionContext& ctx) {
  mp::ScopedPrecision guard(ctx.working_digits());
  if (T < 2000L) fail(ErrorKind::domain, "Ramare bound requires T >= 2000");
  if (sigma <= 0L || sigma >= 1L) fail(ErrorKind::domain, "Ramare bound requires 0 < sigma < 1");
  const Real L = mp::log(T * 100L);
  const Real first = mp::pow(mp::pow(T, 3L) * 100000L, Real(1) - sigma) * mp::pow(L, Real(4) - sigma) * 157L;
  return first + mp::sqr(L) * 600L;
}

Applicable cheng_bound(const Real& sigma, const Real& T, const PrecisionContext& ctx) {
  mp::ScopedPrecision guard(ctx.working_digits());
  if (sigma * 8L < 5L) fail(ErrorKind::domain, "Cheng bound requires sigma >= 5/8");
  if (T <= 1L) return {std::nullopt, "requires T >= exp(exp(18))"};
  const Real logT = mp::log(T);
  if (logT < mp::exp(Real(18))) return {std::nullopt, "requires T >= exp(exp(18))"};
  const Real value = mp::pow(T, (Real(1) - sigma) * 8L / 3L) * mp::pow(logT, 5L) * Real::parse("453472.54");
  return {value, ""};
}

std::vector<ComparisonRow> compare(const Real& sigma, const std::vector<Real>& T_list, const DensityCoefficients& c,
                                   const PrecisionContext& ctx) {
  mp::ScopedPrecision guard(ctx.working_digits());
  if (sigma != c.params.sigma) fail(ErrorKind::domain, "coefficients were computed for a different sigma");
  std::vector<ComparisonRow> rows;
  rows.reserve(T_list.size());
  const Real e = mp::exp(Real(1));
  for (const Real& T : T_list) {
    ComparisonRow row{sigma, T, {}, {}, {}, {}, {}};
    if (T >= c.params.H_rh) {
      row.this_bound.value = bound_N(c, T, ctx).value;
    } else {
      row.this_bound.reason = "requires T >= H_rh";
    }
    if (T > e) {
      row.rosser_half.value = rosser_NT_band(T, NTVariant::rosser, ctx).upper / 2L;
      row.trudgian_half.value = rosser_NT_band(T, NTVariant::trudgian, ctx).upper / 2L;
    } else {
      row.rosser_half.reason = row.trudgian_half.reason = "requires T > e";
    }
    if (T < 2000L) {
      row.ramare.reason = "requires T >= 2000";
    } else if (sigma <= 0L || sigma >= 1L) {
      row.ramare.reason = "requires 0 < sigma < 1";
    } else {
      row.ramare.value = ramare_bound(sigma, T, ctx);
    }
    if (sigma * 8L < 5L) {
      row.cheng.reason = "requires sigma >= 5/8";
    } else {
      row.cheng = cheng_bound(sigma, T, ctx);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zdensity
