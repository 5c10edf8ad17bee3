#include "approx.hpp"

#include <cmath>

#include "errors.hpp"
#include "zeta.hpp"

namespace zdensity {

void ApproxParams::validate() const {
  if (sigma * 2L < 1L) fail(ErrorKind::domain, "approximation requires sigma >= 1/2");
  if (t0 <= 0L) fail(ErrorKind::domain, "approximation requires t0 > 0");
  if (c * mp::pi() * 2L <= 1L) fail(ErrorKind::domain, "approximation requires c > 1/(2 pi)");
}

Real big_C(const ApproxParams& p, const PrecisionContext& ctx) {
  p.validate();
  const Real zeta2 = zeta_real(Real(2), ctx);
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real two_pi = mp::pi() * 2L;
  const Real two_pi_c = two_pi * p.c;
  const Real fourier = zeta2 / two_pi_c + 1L + Real(1) / (two_pi_c - 1L);
  const Real amplitude = mp::sqrt(Real(1) + Real(1) / mp::sqr(p.t0)) * 3L / two_pi;
  return (p.c + Real(1) / 2L + amplitude * fourier) * mp::pow(p.c, -p.sigma);
}

CorollaryConstant c0_corollary(const PrecisionContext& ctx, std::optional<Real> t0) {
  mp::ScopedPrecision guard(ctx.working_digits());
  ApproxParams p{Real(1) / 2L, Real(1), t0 ? *t0 : Real::parse(kFirstZeroHeight)};
  Real value = big_C(p, ctx);
  Real rounded = round_up(value, ctx.output_digits);
  return {std::move(value), std::move(rounded)};
}

double approx_ratio(const Real& sigma, const Real& t, const Real& constant, const PrecisionContext& ctx) {
  ComplexPoint s{sigma, t};
  Complex diff = zeta_minus_partial_sum(s, t, ctx);
  mp::ScopedPrecision guard(ctx.working_digits());
  Real lhs = abs(diff);
  Real rhs = constant * mp::pow(t, -sigma);
  return (lhs / rhs).to_double();
}

VerificationReport verify_approx(const std::vector<Real>& sigma_grid, const std::vector<Real>& t_grid,
                                 const PrecisionContext& ctx, std::optional<Real> constant) {
  ctx.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real t_floor = Real::parse(kFirstZeroHeight);
  for (const Real& sigma : sigma_grid) {
    if (sigma * 2L < 1L) fail(ErrorKind::domain, "verify_approx requires sigma >= 1/2");
  }
  for (const Real& t : t_grid) {
    if (t < t_floor) fail(ErrorKind::domain, "verify_approx requires t >= 14.1347");
    if (t > Real(kMaxHeight)) fail(ErrorKind::unsupported_height, "verify_approx requires t <= 1e7");
  }
  const Real bound = constant ? *constant : c0_corollary(ctx).rounded;
  VerificationReport report;
  for (const Real& sigma : sigma_grid) {
    for (const Real& t : t_grid) {
      report.record({sigma.to_double(), t.to_double()}, approx_ratio(sigma, t, bound, ctx));
    }
  }
  return report;
}

VerificationReport verify_small_t(const PrecisionContext& ctx, const SmallTGrid& grid) {
  ctx.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  if (grid.sigma_min * 2L < 1L) fail(ErrorKind::domain, "small-t sweep requires sigma >= 1/2");
  if (grid.t_min <= 0L) fail(ErrorKind::domain, "small-t sweep requires t > 0");
  const auto sigmas = arithmetic_grid(grid.sigma_min, grid.sigma_max, grid.sigma_step);
  const auto ts = arithmetic_grid(grid.t_min, grid.t_max, grid.t_step);
  VerificationReport report;
  for (const Real& sigma : sigmas) {
    for (const Real& t : ts) {
      if (sigma == 1L && t.is_zero()) continue;
      report.record({sigma.to_double(), t.to_double()}, approx_ratio(sigma, t, grid.constant, ctx));
    }
  }
  return report;
}

}  // namespace zdensity
