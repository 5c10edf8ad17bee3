#include "zeta.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <vector>

#include "bernoulli.hpp"
#include "errors.hpp"

namespace zdensity {
namespace {

constexpr double kLog10TwoPi = 0.798179868358115;  // log10(2 pi)
constexpr double kLog10Four = 0.602059991327962;
constexpr int kMaxBernoulliTerms = 4000;

int extra_digits_for_height(double abs_t) { return static_cast<int>(std::ceil(std::log10(abs_t + 1.0))); }

uint64_t truncation_point(double abs_t, int target_digits) {
  return static_cast<uint64_t>(std::ceil((abs_t + 4.0 * target_digits) / M_PI)) + 1;
}

// log10 of the Euler-Maclaurin remainder bound after M Bernoulli terms, given
// log10 |(s)_{2M}| accumulated by the caller. `sigma_eff` and the Pochhammer
// magnitude may be the worst case over a disc (derivative bound).
double remainder_log10(double log10_poch_2m, int M, double sigma_eff, double log10_N) {
  double expo = sigma_eff + 2.0 * M - 1.0;
  return kLog10Four + log10_poch_2m - 2.0 * M * kLog10TwoPi - expo * log10_N - std::log10(expo);
}

// Cache cap for the multiplicative power table; beyond it powers are
// evaluated directly (memory stays bounded at the 1e7 height ceiling).
constexpr uint64_t kPowerTableCap = uint64_t{1} << 18;

// n^-s for n = 1..limit. Composite n reuse p^-s (n/p)^-s with p the smallest
// prime factor: one complex product instead of exp, log and sin/cos.
template <class S>
std::vector<S> neg_power_table(const S& s, uint64_t limit) {
  std::vector<uint32_t> spf(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
    }
  }
  std::vector<S> table;
  table.reserve(limit + 1);
  table.emplace_back(Real(0));
  if (limit >= 1) table.emplace_back(Real(1));
  for (uint64_t n = 2; n <= limit; ++n) {
    uint64_t p = spf[n];
    if (p == n) {
      table.push_back(neg_power(mp::log_ui(n), s));
    } else {
      table.push_back(table[p] * table[n / p]);
    }
  }
  return table;
}

// sum_{n=lo}^{hi} n^-s in ascending order, table-backed where possible.
template <class S>
S power_sum(const S& s, const std::vector<S>& table, uint64_t lo, uint64_t hi) {
  S sum(Real(0));
  for (uint64_t n = lo; n <= hi; ++n) {
    if (n < table.size()) {
      sum += table[n];
    } else {
      sum += neg_power(mp::log_ui(n), s);
    }
  }
  return sum;
}

// Everything in the Euler-Maclaurin formula except sum_{n<N} n^-s.
template <class S>
S em_tail(const S& s, double sigma, double t, uint64_t N, int target_digits, EulerMaclaurinTrace* trace) {
  const double log10_N = std::log10(static_cast<double>(N));
  const Real log_N = mp::log_ui(N);
  const S n_pow = neg_power(log_N, s);  // N^-s
  const Real big_n(N);
  S sum = (n_pow * big_n) / (s - 1L);
  sum += n_pow / 2L;

  S poch = s;                    // (s)_{2k-1}
  S power = n_pow / big_n;       // N^{-s-2k+1}
  const Real inv_n2 = Real(1) / (big_n * big_n);
  double log10_poch = std::log10(std::hypot(sigma, t));  // log10 |(s)_{2k-1}|

  int k = 1;
  double bound = 0.0;
  for (;; ++k) {
    if (k > kMaxBernoulliTerms) fail(ErrorKind::invalid_argument, "Euler-Maclaurin series failed to converge");
    sum += (poch * power) * bernoulli_over_factorial(k);
    // (s)_{2k} = (s)_{2k-1} (s + 2k - 1)
    log10_poch += std::log10(std::hypot(sigma + 2.0 * k - 1.0, t));
    bound = remainder_log10(log10_poch, k, sigma, log10_N);
    if (bound < -target_digits) break;
    poch *= (s + (2L * k - 1)) * (s + 2L * k);
    log10_poch += std::log10(std::hypot(sigma + 2.0 * k, t));
    power *= inv_n2;
  }
  if (trace != nullptr) *trace = {N, k, bound};
  return sum;
}

template <class S>
S em_zeta(const S& s, double sigma, double t, int target_digits, EulerMaclaurinTrace* trace) {
  const uint64_t N = truncation_point(std::fabs(t), target_digits);
  const auto table = neg_power_table(s, std::min(N - 1, kPowerTableCap));
  S sum = power_sum(s, table, 1, N - 1);
  sum += em_tail(s, sigma, t, N, target_digits, trace);
  return sum;
}

void require_above_one(const Real& sigma, const char* what) {
  if (sigma <= 1L) fail(ErrorKind::domain, std::string(what) + " requires sigma > 1");
}

}  // namespace

Real zeta_real(const Real& sigma, const PrecisionContext& ctx, EulerMaclaurinTrace* trace) {
  ctx.validate();
  require_above_one(sigma, "zeta_real");
  mp::ScopedPrecision guard(ctx.working_digits());
  Real s = sigma;
  return em_zeta(s, s.to_double(), 0.0, ctx.digits + 3, trace);
}

Complex zeta_complex(const ComplexPoint& s, const PrecisionContext& ctx, EulerMaclaurinTrace* trace) {
  ctx.validate();
  const double t = s.t.to_double();
  if (!(std::fabs(t) <= kMaxHeight)) {
    fail(ErrorKind::unsupported_height, "|t| = " + std::to_string(std::fabs(t)) + " exceeds the supported height 1e7");
  }
  if (s.t.is_zero() && s.sigma == 1L) fail(ErrorKind::pole, "zeta has a pole at s = 1");
  const double sigma = s.sigma.to_double();
  if (sigma <= -1.0) fail(ErrorKind::domain, "zeta_complex supports Re s > -1 only");
  mp::ScopedPrecision guard(ctx.working_digits() + extra_digits_for_height(std::fabs(t)));
  Complex z(s.sigma, s.t);
  return em_zeta(z, sigma, t, ctx.digits + 3, trace);
}

Real zeta_real_derivative(const Real& sigma, const PrecisionContext& ctx, EulerMaclaurinTrace* trace) {
  ctx.validate();
  require_above_one(sigma, "zeta_real_derivative");
  mp::ScopedPrecision guard(ctx.working_digits());
  const int target = ctx.digits + 3;
  const double sd = sigma.to_double();
  const uint64_t N = truncation_point(0.0, target);
  const double log10_N = std::log10(static_cast<double>(N));
  constexpr double radius = 0.5;

  Real s = sigma;
  Real sum(0);
  for (uint64_t n = 2; n < N; ++n) {
    Real ln = mp::log_ui(n);
    sum -= ln * mp::exp(-(s * ln));
  }
  const Real log_N = mp::log_ui(N);
  const Real n_pow = mp::exp(-(s * log_N));  // N^-s
  const Real big_n(N);
  const Real sm1 = s - 1L;
  // d/ds [N^{1-s}/(s-1)] = -N^{1-s} (log N/(s-1) + 1/(s-1)^2)
  sum -= (n_pow * big_n) * (log_N / sm1 + Real(1) / mp::sqr(sm1));
  // d/ds [N^-s / 2] = -log N N^-s / 2
  sum -= log_N * n_pow / 2L;

  // T_k = c_k (s)_{2k-1} N^{-s-2k+1};  T_k' = T_k (sum_{j<2k-1} 1/(s+j) - log N)
  Real poch = s;
  Real power = n_pow / big_n;
  Real harmonic = Real(1) / s;
  const Real inv_n2 = Real(1) / (big_n * big_n);
  double log10_poch_disc = std::log10(std::fabs(sd) + radius);

  int k = 1;
  double bound = 0.0;
  for (;; ++k) {
    if (k > kMaxBernoulliTerms) fail(ErrorKind::invalid_argument, "Euler-Maclaurin series failed to converge");
    Real term = bernoulli_over_factorial(k) * poch * power;
    sum += term * (harmonic - log_N);
    log10_poch_disc += std::log10(std::fabs(sd + 2.0 * k - 1.0) + radius);
    bound = remainder_log10(log10_poch_disc, k, sd - radius, log10_N) - std::log10(radius);
    if (bound < -target) break;
    poch *= (s + (2L * k - 1)) * (s + 2L * k);
    harmonic += Real(1) / (s + (2L * k - 1)) + Real(1) / (s + 2L * k);
    log10_poch_disc += std::log10(std::fabs(sd + 2.0 * k) + radius);
    power *= inv_n2;
  }
  if (trace != nullptr) *trace = {N, k, bound};
  return sum;
}

Real log_deriv_zeta_real(const Real& sigma, const PrecisionContext& ctx) {
  Real d = zeta_real_derivative(sigma, ctx);
  Real z = zeta_real(sigma, ctx);
  mp::ScopedPrecision guard(ctx.working_digits());
  return d / z;
}

uint64_t partial_sum_length(const Real& x) {
  if (x <= 1L) return 0;
  return static_cast<uint64_t>(mp::ceil_to_int(x) - 1);
}

Complex dirichlet_partial_sum(const ComplexPoint& s, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (x < 0L) fail(ErrorKind::domain, "dirichlet_partial_sum requires x >= 0");
  const uint64_t count = partial_sum_length(x);
  mp::ScopedPrecision guard(ctx.working_digits() + extra_digits_for_height(std::fabs(s.t.to_double())));
  Complex z(s.sigma, s.t);
  const auto table = neg_power_table(z, std::min(count, kPowerTableCap));
  return power_sum(z, table, 1, count);
}

Complex zeta_minus_partial_sum(const ComplexPoint& s, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (x < 0L) fail(ErrorKind::domain, "zeta_minus_partial_sum requires x >= 0");
  const double t = s.t.to_double();
  if (!(std::fabs(t) <= kMaxHeight)) fail(ErrorKind::unsupported_height, "|t| exceeds the supported height 1e7");
  if (s.t.is_zero() && s.sigma == 1L) fail(ErrorKind::pole, "zeta has a pole at s = 1");
  const double sigma = s.sigma.to_double();
  if (sigma <= -1.0) fail(ErrorKind::domain, "zeta_minus_partial_sum supports Re s > -1 only");
  const uint64_t count = partial_sum_length(x);
  mp::ScopedPrecision guard(ctx.working_digits() + extra_digits_for_height(std::fabs(t)));
  Complex z(s.sigma, s.t);
  const int target = ctx.digits + 3;
  const uint64_t N = truncation_point(std::fabs(t), target);
  const auto table = neg_power_table(z, std::min(std::max(N - 1, count), kPowerTableCap));
  Complex out = em_tail(z, sigma, t, N, target, nullptr);
  // zeta - partial = sum_{count < n < N} n^-s + tail   (or minus the overlap)
  if (count + 1 <= N - 1) {
    out += power_sum(z, table, count + 1, N - 1);
  } else if (count >= N) {
    out -= power_sum(z, table, N, count);
  }
  return out;
}

}  // namespace zdensity
