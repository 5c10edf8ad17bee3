#pragma once

// Riemann zeta and related arithmetic sums at arbitrary precision.
//
// Evaluation scheme: Euler-Maclaurin summation
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{k=1}^{M} B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1} + R(N, M)
//
// with the remainder bound
//
//   |R(N, M)| <= 4 |(s)_{2M}| / (2 pi)^{2M} * N^{-sigma-2M+1} / (sigma+2M-1)
//
// (valid whenever sigma + 2M - 1 > 0). The truncation point is
// N = ceil((|t| + 4 D) / pi) + 1 for a target of D decimal digits, which keeps
// |s + 2M| / (2 pi N) below about 1/2 so each extra Bernoulli term gains at
// least 0.6 digits. M grows until the bound drops below 10^-D.

#include <cstdint>

#include "hp_complex.hpp"
#include "precision.hpp"

namespace zdensity {

struct ComplexPoint {
  Real sigma;
  Real t;
};

// Desk-scale height ceiling; Riemann-Siegel would be required beyond it.
inline constexpr double kMaxHeight = 1e7;

struct EulerMaclaurinTrace {
  uint64_t N = 0;            // terms summed directly are n < N
  int M = 0;                 // Bernoulli correction terms used
  double log10_bound = 0.0;  // log10 of the remainder bound actually achieved
};

// zeta(sigma) for real sigma > 1; absolute error below 10^{-digits+5}.
Real zeta_real(const Real& sigma, const PrecisionContext& ctx, EulerMaclaurinTrace* trace = nullptr);

// zeta(s) for s != 1 and |t| <= kMaxHeight; absolute error below
// 10^{-digits/2} (in practice far smaller, see the trace).
Complex zeta_complex(const ComplexPoint& s, const PrecisionContext& ctx, EulerMaclaurinTrace* trace = nullptr);

// zeta'(sigma) for real sigma > 1, from the term-by-term derivative of the
// Euler-Maclaurin formula. The remainder of the derivative is bounded by a
// Cauchy estimate on the circle |s - sigma| = 1/2.
Real zeta_real_derivative(const Real& sigma, const PrecisionContext& ctx, EulerMaclaurinTrace* trace = nullptr);

// zeta'/zeta(sigma) = -sum Lambda(n) n^-sigma for sigma > 1.
Real log_deriv_zeta_real(const Real& sigma, const PrecisionContext& ctx);

// sum_{1 <= n < x} n^-s, ascending n. Empty (zero) when x <= 1.
Complex dirichlet_partial_sum(const ComplexPoint& s, const Real& x, const PrecisionContext& ctx);

// zeta(s) - sum_{1 <= n < x} n^-s, sharing the power table between the two
// sums and cancelling their common terms exactly.
Complex zeta_minus_partial_sum(const ComplexPoint& s, const Real& x, const PrecisionContext& ctx);

// Number of terms in dirichlet_partial_sum for a given x: ceil(x) - 1, or 0.
uint64_t partial_sum_length(const Real& x);

}  // namespace zdensity
