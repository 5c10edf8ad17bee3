#include "strip.hpp"

#include <cmath>
#include <random>

#include "errors.hpp"
#include "mangoldt.hpp"

namespace zdensity {

Real StripParams::sigma1() const { return Real(3) / 2L + eta * 2L; }

void StripParams::validate() const {
  if (eta <= 0L) fail(ErrorKind::domain, "eta must be positive");
  if (N0 < 100) fail(ErrorKind::domain, "N0 must be at least 100");
}

RoundedConstant E2_constant(const StripParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real s1 = p.sigma1();
  const Real inv_log2_n0 = Real(1) / mp::sqr(mp::log_ui(p.N0));
  Real sum = -log_deriv_zeta_real(s1, ctx) * inv_log2_n0;
  MangoldtSieve sieve(p.N0);
  for (uint64_t n = 2; n <= p.N0; ++n) {
    const uint64_t q = sieve.prime_power_base(n);
    if (q == 0) continue;
    const Real ln = mp::log_ui(n);
    sum += mp::log_ui(q) * mp::exp(-(s1 * ln)) * (Real(1) / mp::sqr(ln) - inv_log2_n0);
  }
  Real value = sum * 2L;
  Real rounded = round_up(value, ctx.output_digits);
  return {std::move(value), std::move(rounded)};
}

Real E3_constant(const Real& sigma0, const StripParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real s1 = p.sigma1();
  if (sigma0 >= s1) fail(ErrorKind::domain, "E3 requires sigma0 < sigma1");
  return mp::pi() * (Real(1) + p.eta * 2L) * (s1 - sigma0) / (mp::ln2() * 4L);
}

Real E4_constant(const Real& sigma0, const Real& H, const StripParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real s1 = p.sigma1();
  if (sigma0 >= s1) fail(ErrorKind::domain, "E4 requires sigma0 < sigma1");
  const Real one_eta = Real(1) + p.eta;
  const Real one_2eta = Real(1) + p.eta * 2L;
  if (H <= one_2eta) fail(ErrorKind::domain, "E4 requires H > 1 + 2 eta");
  const Real z1 = zeta_real(one_eta, ctx);
  const Real z2 = zeta_real(one_eta * 2L, ctx);
  const Real ratio = (H + one_eta * 3L) / (H - one_2eta) * 3L;
  const Real power = mp::pow((one_eta * 3L / H + 1L) / (mp::pi() * 2L), one_2eta / 2L);
  const Real zetas = mp::pow(z1, 4L) / mp::sqr(z2);
  return mp::pi() * (s1 - sigma0) / mp::ln2() * mp::log(ratio * power * zetas);
}

Real rademacher_rhs(const Real& eta, const ComplexPoint& s, const PrecisionContext& ctx) {
  ctx.validate();
  const Real z = zeta_real(Real(1) + eta, ctx);
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real plus = mp::hypot(s.sigma + 1L, s.t);
  const Real minus = mp::hypot(Real(1) - s.sigma, s.t);
  const Real expo = (Real(1) + eta - s.sigma) / 2L;
  return plus * 3L / minus * mp::pow(plus / (mp::pi() * 2L), expo) * z;
}

VerificationReport verify_rademacher(const Real& eta, const std::vector<ComplexPoint>& sample,
                                     const PrecisionContext& ctx) {
  ctx.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  if (eta <= 0L) fail(ErrorKind::domain, "eta must be positive");
  for (const auto& s : sample) {
    if (s.sigma < -eta || s.sigma > Real(1) + eta) fail(ErrorKind::domain, "sample point outside -eta <= Re s <= 1 + eta");
    if (s.sigma == 1L && s.t.is_zero()) fail(ErrorKind::pole, "sample contains s = 1");
  }
  VerificationReport report;
  for (const auto& s : sample) {
    const Real lhs = abs(zeta_complex(s, ctx));
    const Real rhs = rademacher_rhs(eta, s, ctx);
    report.record({s.sigma.to_double(), s.t.to_double()}, (lhs / rhs).to_double());
  }
  return report;
}

std::vector<ComplexPoint> rademacher_sample(const Real& eta, int count, uint64_t seed, double t_lo, double t_hi) {
  if (count < 0) fail(ErrorKind::invalid_argument, "negative sample size");
  if (!(t_lo > 0.0 && t_hi >= t_lo)) fail(ErrorKind::invalid_argument, "invalid height range");
  // Manual mapping of raw 64-bit draws keeps the sample identical across
  // standard libraries (uniform_real_distribution is implementation-defined).
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double lo = -eta.to_double();
  const double width = 1.0 + 2.0 * eta.to_double();
  const double log_lo = std::log(t_lo), log_span = std::log(t_hi) - std::log(t_lo);
  std::vector<ComplexPoint> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    double sigma = lo + width * unit();
    double t = std::exp(log_lo + log_span * unit());
    out.push_back({Real::from_decimal(sigma), Real::from_decimal(t)});
  }
  return out;
}

}  // namespace zdensity
