#include "moment.hpp"

#include <algorithm>
#include <cmath>

#include "approx.hpp"
#include "errors.hpp"
#include "line_zeta.hpp"
#include "zeta.hpp"

namespace zdensity {
namespace {

void require_closed_box(const Real& sigma0) {
  if (sigma0 < Real::parse(kSigma0Min) || sigma0 > Real::parse(kSigma0Max)) {
    fail(ErrorKind::domain, "sigma0 outside [0.5208, 0.9723]");
  }
}

// (e11, e12, e13, e14) with zeta(2 sigma0) supplied by the caller.
E1Subterms subterms(const Real& s, const Real& T, const Real& zeta2s) {
  const Real one_m = Real(1) - s;
  const Real two_s_m1 = s * 2L - 1L;
  const Real logT = mp::log(T);
  const Real t_1m2s = mp::pow(T, Real(1) - s * 2L);
  E1Subterms e;
  e.e11 = logT * t_1m2s / (one_m * 2L) - two_s_m1 / (one_m * 2L) * logT / T;
  e.e12 = ((Real(1) - s * 3L + mp::sqr(s) * 3L) / (mp::sqr(one_m) * 2L) - zeta2s / 2L) / T;
  e.e13 = (Real(2) - s) / (mp::sqr(one_m) * 2L) * t_1m2s - s * mp::pow(T, -s) / mp::sqr(one_m);
  e.e14 = mp::pow(T, -(s * 2L)) / (two_s_m1 * 2L) + mp::pow(T, -(s * 2L) - 1L) / 2L;
  return e;
}

}  // namespace

void MomentParams::validate() const {
  if (sigma0 <= Real::parse(kSigma0Min) || sigma0 >= Real::parse(kSigma0Max)) {
    fail(ErrorKind::domain, "sigma0 outside (0.5208, 0.9723)");
  }
  if (H < 1000L) fail(ErrorKind::domain, "H below 1000");
  if (H == H_rh) fail(ErrorKind::singular_parameter, "H equals H_rh (division by H_rh - H)");
  if (H > H_rh) fail(ErrorKind::domain, "H above H_rh");
}

E1Subterms e1_subterms(const Real& sigma0, const Real& T, const PrecisionContext& ctx) {
  ctx.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  require_closed_box(sigma0);
  if (T < 2L) fail(ErrorKind::domain, "e1_subterms requires T >= 2");
  return subterms(sigma0, T, zeta_real(sigma0 * 2L, ctx));
}

Real e12_numerator(const Real& sigma0, const PrecisionContext& ctx) {
  ctx.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  if (sigma0 * 2L <= 1L || sigma0 >= 1L) fail(ErrorKind::domain, "e12_numerator requires 1/2 < sigma0 < 1");
  const Real& s = sigma0;
  const Real one_m = Real(1) - s;
  return (Real(1) - s * 3L + mp::sqr(s) * 3L) / (mp::sqr(one_m) * 2L) - zeta_real(s * 2L, ctx) / 2L;
}

Bracket e12_sign_change(const PrecisionContext& ctx, const Real& lo, const Real& hi, const Real& tol) {
  mp::ScopedPrecision guard(ctx.working_digits());
  Real a = lo, b = hi;
  const int sa = e12_numerator(a, ctx).sign();
  if (sa == 0) return {a, a};
  if (sa == e12_numerator(b, ctx).sign()) fail(ErrorKind::domain, "e12 numerator has no sign change in the bracket");
  while (b - a > tol) {
    Real m = (a + b) / 2L;
    int sm = e12_numerator(m, ctx).sign();
    if (sm == 0) return {m, m};
    if (sm == sa) {
      a = std::move(m);
    } else {
      b = std::move(m);
    }
  }
  return {a, b};
}

Real epsilon1(const MomentParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real& Hr = p.H_rh;
  E1Subterms e = subterms(p.sigma0, Hr, zeta_real(p.sigma0 * 2L, ctx));
  Real bracket = e.e11 + mp::max(Real(0), e.e12) + e.e13 + e.e14;
  return Hr * 4L / (Hr - p.H) * bracket;
}

Real epsilon2(const MomentParams& p, const Real& c0, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real a = p.sigma0 * 2L - 1L;
  return mp::sqr(c0) / a * (mp::pow(p.H, -a) - mp::pow(p.H_rh, -a)) / (p.H_rh - p.H);
}

Real epsilon2(const MomentParams& p, const PrecisionContext& ctx) { return epsilon2(p, c0_corollary(ctx).rounded, ctx); }

Real epsilon3(const MomentParams& p, const PrecisionContext& ctx) {
  Real e1 = epsilon1(p, ctx);
  Real e2 = epsilon2(p, ctx);
  Real z = zeta_real(p.sigma0 * 2L, ctx);
  mp::ScopedPrecision guard(ctx.working_digits());
  return mp::sqrt(e2 * (z + e1)) * 2L;
}

MomentBound moment_bound(const MomentParams& p, const PrecisionContext& ctx) {
  return moment_bound(p, c0_corollary(ctx).rounded, ctx);
}

MomentBound moment_bound(const MomentParams& p, const Real& c0, const PrecisionContext& ctx) {
  ctx.validate();
  p.validate();
  mp::ScopedPrecision guard(ctx.working_digits());
  MomentBound out;
  out.zeta_2sigma0 = zeta_real(p.sigma0 * 2L, ctx);
  const Real& Hr = p.H_rh;
  E1Subterms e = subterms(p.sigma0, Hr, out.zeta_2sigma0);
  MomentErrorBreakdown& b = out.breakdown;
  b.eps1 = Hr * 4L / (Hr - p.H) * (e.e11 + mp::max(Real(0), e.e12) + e.e13 + e.e14);
  b.eps2 = epsilon2(p, c0, ctx);
  b.eps3 = mp::sqrt(b.eps2 * (out.zeta_2sigma0 + b.eps1)) * 2L;
  b.E1_total = b.eps1 + b.eps2 + b.eps3;
  b.e11 = std::move(e.e11);
  b.e12 = std::move(e.e12);
  b.e13 = std::move(e.e13);
  b.e14 = std::move(e.e14);
  out.bound = out.zeta_2sigma0 + b.E1_total;
  out.half_log_bound = mp::log(out.bound) / 2L;
  return out;
}

namespace {

// Sum of |zeta|^2 over sigma + i(start + j step), j < count.
long double square_sum(double sigma, double start, double step, std::size_t count, uint64_t& evaluations) {
  long double sum = 0.0L;
  constexpr std::size_t kBatch = std::size_t{1} << 16;
  for (std::size_t j0 = 0; j0 < count; j0 += kBatch) {
    std::size_t n = std::min(kBatch, count - j0);
    auto values = line::zeta_on_line(sigma, start + step * static_cast<double>(j0), step, n);
    for (const auto& z : values) sum += std::norm(z);
  }
  evaluations += count;
  return sum;
}

}  // namespace

QuadratureResult numeric_second_moment(const Real& sigma0, const Real& H, const Real& T, const PrecisionContext& ctx) {
  ctx.validate();
  if (T == H) fail(ErrorKind::singular_parameter, "empty interval: T equals H");
  if (H < 2L || T < H) fail(ErrorKind::domain, "numeric_second_moment requires 2 <= H < T");
  if (T > Real(kMaxQuadratureHeight)) fail(ErrorKind::unsupported_height, "numeric_second_moment requires T <= 1e5");
  if (sigma0 <= 0L || sigma0 >= 2L) fail(ErrorKind::domain, "numeric_second_moment requires 0 < sigma0 < 2");

  constexpr double kTolerance = 1e-6;
  constexpr double kMaxStartStep = 0.25;
  constexpr int kMaxLevels = 14;

  const double s = sigma0.to_double();
  const double a = H.to_double();
  const double b = T.to_double();
  const double len = b - a;
  std::size_t panels = static_cast<std::size_t>(std::ceil(len / kMaxStartStep));
  panels += panels % 2;
  double h = len / static_cast<double>(panels);

  QuadratureResult r;
  // Simpson: h/3 (ends + 4 odd + 2 even-interior); refinement turns the old
  // interior points into even points and adds the midpoints as odd points.
  long double ends = std::norm(line::zeta_at(s, a)) + std::norm(line::zeta_at(s, b));
  r.evaluations = 2;
  long double odd = square_sum(s, a + h, 2.0 * h, panels / 2, r.evaluations);
  long double even = square_sum(s, a + 2.0 * h, 2.0 * h, panels / 2 - 1, r.evaluations);
  long double prev = h / 3.0L * (ends + 4.0L * odd + 2.0L * even);
  for (int level = 1; level <= kMaxLevels; ++level) {
    even += odd;
    odd = square_sum(s, a + h / 2.0, h, panels, r.evaluations);
    panels *= 2;
    h /= 2.0;
    long double cur = h / 3.0L * (ends + 4.0L * odd + 2.0L * even);
    double change = static_cast<double>(std::fabs(static_cast<double>(cur - prev)) / std::fabs(static_cast<double>(cur)));
    prev = cur;
    if (change < kTolerance) {
      r.mean_square = static_cast<double>(cur) / len;
      r.relative_change = change;
      r.step = h;
      return r;
    }
  }
  fail(ErrorKind::invalid_argument, "quadrature did not reach 1e-6 relative agreement");
}

}  // namespace zdensity
