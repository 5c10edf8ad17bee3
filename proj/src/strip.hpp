#pragma once

// Constants from the strip sigma0 <= Re s <= sigma1:
//   E2  lower bound constant for int log|zeta(sigma1 + it)| dt,
//   E3, E4  constants bounding the argument integral,
// and a sampled check of Rademacher's convexity bound used for E4.

#include <cstdint>
#include <vector>

#include "precision.hpp"
#include "verification.hpp"
#include "zeta.hpp"

namespace zdensity {

struct StripParams {
  Real eta = Real::parse("0.0001");
  uint64_t N0 = 1000;

  // 3/2 + 2 eta.
  Real sigma1() const;
  // eta > 0 and N0 >= 100.
  void validate() const;
};

struct RoundedConstant {
  Real unrounded;
  Real rounded;  // toward +infinity at ctx.output_digits decimals
};

// 2 (-zeta'/zeta(sigma1)/log^2 N0 + sum_{n<=N0} Lambda(n) n^-sigma1 (1/log^2 n - 1/log^2 N0)).
RoundedConstant E2_constant(const StripParams& p, const PrecisionContext& ctx);

// pi (1 + 2 eta)(sigma1 - sigma0) / (4 log 2). Requires sigma0 < sigma1.
Real E3_constant(const Real& sigma0, const StripParams& p, const PrecisionContext& ctx);

// (pi (sigma1 - sigma0)/log 2) log(3 (H + 3(1+eta))/(H - (1+2eta))
//   ((3(1+eta)/H + 1)/(2 pi))^{(1+2eta)/2} zeta(1+eta)^4 / zeta(2+2eta)^2).
// Requires sigma0 < sigma1 and H > 1 + 2 eta.
Real E4_constant(const Real& sigma0, const Real& H, const StripParams& p, const PrecisionContext& ctx);

// 3 |1+s|/|1-s| (|1+s|/(2 pi))^{(1+eta-sigma)/2} zeta(1+eta).
Real rademacher_rhs(const Real& eta, const ComplexPoint& s, const PrecisionContext& ctx);

// Checks |zeta(s)| <= rademacher_rhs at every point. Each point must satisfy
// -eta <= Re s <= 1 + eta and s != 1.
VerificationReport verify_rademacher(const Real& eta, const std::vector<ComplexPoint>& sample,
                                     const PrecisionContext& ctx);

// Deterministic sample: Re s uniform on [-eta, 1+eta], Im s log-uniform on
// [t_lo, t_hi], from a 64-bit Mersenne Twister seeded with `seed`.
std::vector<ComplexPoint> rademacher_sample(const Real& eta, int count, uint64_t seed, double t_lo = 10.0,
                                            double t_hi = 1e4);

}  // namespace zdensity
