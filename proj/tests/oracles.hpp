#pragma once

// Independent reference evaluations used only by the tests. None of these
// share an algorithm with the library code they check.

#include <mpfr.h>

#include <cmath>

#include <string>
#include <vector>

#include "hp_complex.hpp"
#include "mp_real.hpp"

namespace oracle {

using zdensity::Complex;
using zdensity::mp::Real;

// MPFR's own zeta for real arguments.
inline Real mpfr_zeta_real(const Real& s) {
  Real r;
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

// Laurent expansion about s = 1 with Stieltjes constants gamma_0..gamma_12:
// zeta(s) = 1/(s-1) + sum (-1)^n gamma_n (s-1)^n / n!.
inline Real laurent_zeta(const Real& s) {
  static const char* const stieltjes[] = {
      nullptr,  // gamma_0 is Euler's constant
      "-0.072815845483676724860586375874901",   "-0.0096903631928723184845303860352125",
      "0.0020538344203033458661600465427534",   "0.0023253700654673000574681701775261",
      "0.00079332381730106270175333487744444",  "-0.000238769345430199609872421841908",
      "-0.00052728956705775104607409750547886", "-0.00035212335380303950960205216500121",
      "-0.000034394774418088048177914623798227", "0.00020533281490906479468372228923707",
      "0.00027018443954390352667290208206796",  "0.00016727291210514019335350154334118"};
  const Real x = s - 1L;
  Real sum = Real(1) / x + zdensity::mp::euler_gamma();
  Real power(1);
  Real fact(1);
  for (int n = 1; n <= 12; ++n) {
    power = power * x;
    fact = fact * static_cast<long>(n);
    Real term = Real::parse(stieltjes[n]) * power / fact;
    sum = (n % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

// Borwein's accelerated alternating series for the eta function,
// zeta(s) = -1/(d_n (1 - 2^{1-s})) sum_{k<n} (-1)^k (d_k - d_n) (k+1)^-s.
// Precision and n are chosen by the caller; the error is about
// (3 + sqrt 8)^-n e^{pi |t| / 2}.
inline Complex borwein_zeta(const Real& sigma, const Real& t, int n) {
  using zdensity::mp::log_ui;
  std::vector<Real> d(static_cast<size_t>(n) + 1);
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built from the ratio of
  // consecutive summands.
  Real term = Real(1) / static_cast<long>(n);  // i = 0: (n-1)!/n! = 1/n
  Real acc = term;
  d[0] = acc * static_cast<long>(n);
  for (int i = 1; i <= n; ++i) {
    // term_i / term_{i-1} = (n+i-1)(n-i+1) 4 / ((2i-1)(2i))
    term = term * static_cast<long>(n + i - 1) * static_cast<long>(n - i + 1) * 4L /
           (static_cast<long>(2 * i - 1) * static_cast<long>(2 * i));
    acc = acc + term;
    d[static_cast<size_t>(i)] = acc * static_cast<long>(n);
  }
  const Complex s(sigma, t);
  Complex sum(Real(0), Real(0));
  for (int k = 0; k < n; ++k) {
    Complex p = zdensity::neg_power(log_ui(static_cast<unsigned long>(k + 1)), s);
    Real w = d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)];
    if (k % 2 == 1) w = -w;
    sum += p * w;
  }
  // 1 - 2^{1-s}
  const Real ln2 = zdensity::mp::ln2();
  Complex one_minus_s(Real(1) - sigma, -t);
  Complex two_pow = zdensity::neg_power(ln2, Complex(Real(0), Real(0)) - one_minus_s);
  Complex denom = Complex(Real(1), Real(0)) - two_pow;
  denom *= d[static_cast<size_t>(n)];
  return -(sum / denom);
}

// sum_{n<x} n^-s summed directly, one exp/sin/cos per term.
inline Complex direct_partial_sum(const Real& sigma, const Real& t, unsigned long count) {
  Complex sum(Real(0), Real(0));
  for (unsigned long n = 1; n <= count; ++n) {
    const Real ln = zdensity::mp::log_ui(n);
    const Real mag = zdensity::mp::exp(-(sigma * ln));
    sum += Complex(mag * zdensity::mp::cos(t * ln), -(mag * zdensity::mp::sin(t * ln)));
  }
  return sum;
}

// Brute-force divisor sum of the von Mangoldt function.
inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline double mangoldt_brute(unsigned long n) {
  for (unsigned long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    if (!is_prime(p)) return 0.0;
    unsigned long m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return 0.0;
}

}  // namespace oracle
