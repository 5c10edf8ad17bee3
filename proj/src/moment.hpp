#pragma once

// Second moment of zeta on Re s = sigma0: the explicit bound
//
//   (1/(T-H)) int_H^T |zeta(sigma0+it)|^2 dt <= zeta(2 sigma0) + E1(sigma0, H),
//   E1 = eps1 + eps2 + eps3,                                    T >= H_rh,
//
// its ingredients, and a quadrature oracle for the left side.

#include <cstdint>

#include "precision.hpp"

namespace zdensity {

// Height up to which RH is taken as numerically verified.
inline constexpr const char* kDefaultHrh = "3.061e10";
inline constexpr const char* kSigma0Min = "0.5208";
inline constexpr const char* kSigma0Max = "0.9723";

struct MomentParams {
  Real sigma0;
  Real H;
  Real H_rh = Real::parse(kDefaultHrh);

  // 0.5208 < sigma0 < 0.9723 and 1e3 <= H < H_rh. H == H_rh raises
  // singular_parameter; other violations raise domain.
  void validate() const;
};

struct E1Subterms {
  Real e11, e12, e13, e14;
};

struct MomentErrorBreakdown {
  Real eps1, eps2, eps3;
  Real E1_total;                 // eps1 + eps2 + eps3
  Real e11, e12, e13, e14;       // sub-terms at T = H_rh; e12 before max(0, .)
};

struct MomentBound {
  MomentErrorBreakdown breakdown;
  Real zeta_2sigma0;
  Real bound;           // zeta(2 sigma0) + E1
  Real half_log_bound;  // log(bound)/2, the coefficient of (T - H) in the log-moment form
};

// E11..E14 at (sigma0, T). Requires T >= 2 and sigma0 in [0.5208, 0.9723].
E1Subterms e1_subterms(const Real& sigma0, const Real& T, const PrecisionContext& ctx);

// (1 - 3 s + 3 s^2)/(2 (1-s)^2) - zeta(2 s)/2, the bracket of E12.
Real e12_numerator(const Real& sigma0, const PrecisionContext& ctx);

// Root of e12_numerator in [lo, hi] by bisection to `tol`; returns the final
// bracket [left, right].
struct Bracket {
  Real left, right;
};
Bracket e12_sign_change(const PrecisionContext& ctx, const Real& lo = Real::parse("0.6"),
                        const Real& hi = Real::parse("0.75"), const Real& tol = Real::parse("1e-12"));

Real epsilon1(const MomentParams& p, const PrecisionContext& ctx);
Real epsilon2(const MomentParams& p, const PrecisionContext& ctx);
Real epsilon2(const MomentParams& p, const Real& c0, const PrecisionContext& ctx);
Real epsilon3(const MomentParams& p, const PrecisionContext& ctx);

// Uses c0 = c0_corollary(ctx).rounded unless given.
MomentBound moment_bound(const MomentParams& p, const PrecisionContext& ctx);
MomentBound moment_bound(const MomentParams& p, const Real& c0, const PrecisionContext& ctx);

inline constexpr double kMaxQuadratureHeight = 1e5;

struct QuadratureResult {
  double mean_square = 0.0;      // (1/(T-H)) int_H^T |zeta|^2
  double relative_change = 0.0;  // between the last two step sizes
  double step = 0.0;             // final Simpson step
  uint64_t evaluations = 0;
};

// Step-doubling composite Simpson until two successive steps agree to 1e-6
// relative. Requires 2 <= H < T <= 1e5; T == H raises singular_parameter.
QuadratureResult numeric_second_moment(const Real& sigma0, const Real& H, const Real& T, const PrecisionContext& ctx);

}  // namespace zdensity
