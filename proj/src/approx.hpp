#pragma once

// Effective Dirichlet-polynomial approximation of zeta in the critical strip:
// |zeta(s) - sum_{n < c t} n^-s| <= C(sigma, c) t^-sigma.

#include <optional>
#include <vector>

#include "precision.hpp"
#include "verification.hpp"

namespace zdensity {

// Height of the first zero as used for the corollary constant.
inline constexpr const char* kFirstZeroHeight = "14.1347";

struct ApproxParams {
  Real sigma;  // >= 1/2
  Real c;      // > 1/(2 pi)
  Real t0;     // > 0

  void validate() const;
};

// (c + 1/2 + 3 sqrt(1 + 1/t0^2)/(2 pi) (zeta(2)/(2 pi c) + 1 + 1/(2 pi c - 1))) c^-sigma
Real big_C(const ApproxParams& p, const PrecisionContext& ctx);

struct CorollaryConstant {
  Real unrounded;
  Real rounded;  // toward +infinity at ctx.output_digits decimals
};

// C(1/2, 1, t0) with t0 = 14.1347 unless overridden.
CorollaryConstant c0_corollary(const PrecisionContext& ctx, std::optional<Real> t0 = std::nullopt);

// |zeta(s) - sum_{n<t} n^-s| / (constant * t^-sigma) at one point.
double approx_ratio(const Real& sigma, const Real& t, const Real& constant, const PrecisionContext& ctx);

// Sweeps sigma_grid x t_grid against c0 (or `constant` when given).
// Requires sigma >= 1/2 and 14.1347 <= t <= 1e7 at every point.
VerificationReport verify_approx(const std::vector<Real>& sigma_grid, const std::vector<Real>& t_grid,
                                 const PrecisionContext& ctx, std::optional<Real> constant = std::nullopt);

struct SmallTGrid {
  Real sigma_min = Real::parse("0.5");
  Real sigma_max = Real(2);
  Real sigma_step = Real::parse("0.05");
  Real t_min = Real::parse("0.01");
  Real t_max = Real(15);
  Real t_step = Real::parse("0.01");
  Real constant = Real(43);
};

// Checks |zeta(s) - sum_{n<t} n^-s| <= constant t^-sigma for small heights.
VerificationReport verify_small_t(const PrecisionContext& ctx, const SmallTGrid& grid = {});

}  // namespace zdensity
