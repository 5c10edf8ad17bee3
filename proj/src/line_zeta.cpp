#include "line_zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bernoulli.hpp"
#include "errors.hpp"

namespace zdensity::line {
namespace {

constexpr std::size_t kChunk = 256;
constexpr int kMaxTerms = 150;
constexpr double kTwoPi = 6.283185307179586;

// B_{2k}/(2k)! (2 pi)^{2k}, which tends to 2 (-1)^{k+1}.
const std::array<double, kMaxTerms + 1>& scaled_bernoulli() {
  static const std::array<double, kMaxTerms + 1> table = [] {
    std::array<double, kMaxTerms + 1> out{};
    mp::ScopedPrecision guard(40);
    const mp::Real two_pi = mp::pi() * 2L;
    for (int k = 1; k <= kMaxTerms; ++k) {
      out[k] = (bernoulli_over_factorial(k) * mp::pow(two_pi, 2L * k)).to_double();
    }
    return out;
  }();
  return table;
}

// Keeps |s + 2k| / (2 pi N) <= 0.8 for the first 80 correction terms.
std::size_t truncation(double abs_t) { return static_cast<std::size_t>(std::ceil((abs_t + 200.0) / (kTwoPi * 0.8))); }

std::complex<double> tail(double sigma, double t, std::size_t N) {
  using C = std::complex<double>;
  const auto& c = scaled_bernoulli();
  const C s(sigma, t);
  const double log_n = std::log(static_cast<double>(N));
  const C n_pow = std::exp(-sigma * log_n) * C(std::cos(t * log_n), -std::sin(t * log_n));
  C sum = n_pow * static_cast<double>(N) / (s - 1.0) + 0.5 * n_pow;
  const double u = kTwoPi * static_cast<double>(N);
  C q = s / u;  // (s)_{2k-1} / (2 pi N)^{2k-1}
  const C scale = n_pow / kTwoPi;
  for (int k = 1; k <= kMaxTerms; ++k) {
    C term = c[k] * q * scale;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    q *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / (u * u);
  }
  return sum;
}

}  // namespace

std::vector<std::complex<double>> zeta_on_line(double sigma, double t_start, double step, std::size_t count) {
  std::vector<std::complex<double>> out(count);
  if (count == 0) return out;
  const double t_last = t_start + step * static_cast<double>(count - 1);
  const double lo = std::min(t_start, t_last);
  const double hi = std::max(t_start, t_last);
  if (!(sigma > -1.0)) fail(ErrorKind::domain, "line evaluator requires sigma > -1");
  if (!(lo >= 1.0)) fail(ErrorKind::domain, "line evaluator requires t >= 1");
  if (!(hi <= kMaxLineHeight)) fail(ErrorKind::unsupported_height, "line evaluator requires t <= 1e6");

  std::vector<double> zr, zi, rr, ri;
  for (std::size_t j0 = 0; j0 < count; j0 += kChunk) {
    const std::size_t j1 = std::min(count, j0 + kChunk);
    const double tc = t_start + step * static_cast<double>(j0);
    const double tmax = std::max(tc, t_start + step * static_cast<double>(j1 - 1));
    const std::size_t N = truncation(tmax);
    zr.assign(N, 0.0);
    zi.assign(N, 0.0);
    rr.assign(N, 0.0);
    ri.assign(N, 0.0);
    for (std::size_t n = 1; n < N; ++n) {
      const double ln = std::log(static_cast<double>(n));
      const double mag = std::exp(-sigma * ln);
      zr[n] = mag * std::cos(tc * ln);
      zi[n] = -mag * std::sin(tc * ln);
      rr[n] = std::cos(step * ln);
      ri[n] = -std::sin(step * ln);
    }
    for (std::size_t j = j0; j < j1; ++j) {
      double sr = 0.0, si = 0.0;
      for (std::size_t n = 1; n < N; ++n) {
        sr += zr[n];
        si += zi[n];
      }
      const double t = t_start + step * static_cast<double>(j);
      out[j] = std::complex<double>(sr, si) + tail(sigma, t, N);
      for (std::size_t n = 1; n < N; ++n) {
        const double a = zr[n] * rr[n] - zi[n] * ri[n];
        zi[n] = zr[n] * ri[n] + zi[n] * rr[n];
        zr[n] = a;
      }
    }
  }
  return out;
}

std::complex<double> zeta_at(double sigma, double t) { return zeta_on_line(sigma, t, 0.0, 1)[0]; }

}  // namespace zdensity::line
