#pragma once

// Zero-density bound
//
//   N(sigma, T) <= b1 (T - H) + b2 log(T H) + b3 = c1 T + c2 log T + c3,  T >= H_rh,
//
// with
//   b1 = log(zeta(2 sigma0) + E1(sigma0, H)) / (4 pi (sigma - sigma0)),
//   b2 = E3(sigma0) / (2 pi (sigma - sigma0)),
//   b3 = (E2 + E4(sigma0, H)) / (2 pi (sigma - sigma0)),
// and the published bounds it is compared against.

#include <optional>
#include <string>
#include <vector>

#include "approx.hpp"
#include "moment.hpp"
#include "strip.hpp"

namespace zdensity {

struct DensityParams {
  Real sigma;
  Real sigma0;
  Real H;
  Real H_rh = Real::parse(kDefaultHrh);

  // 0.5208 < sigma0 < 0.9723, sigma0 < sigma < sigma1, 1e3 <= H < H_rh.
  void validate(const Real& sigma1) const;
};

struct DensityCoefficients {
  Real b1, b2, b3;
  Real c1, c2, c3;
  DensityParams params;
  MomentBound moment;  // zeta(2 sigma0), E1 breakdown and the bound
  Real E2, E3, E4;
};

// Table conventions: b1, b2, c1, c2 rounded up at `decimals`; H, b3, c3 by ceiling.
struct FormattedCoefficients {
  std::string H, b1, b2, b3, c1, c2, c3;
};
FormattedCoefficients format_coefficients(const DensityCoefficients& c, int decimals);

// Caches the parameter-free constants (c0, E2, zeta(1+eta), zeta(2+2eta)) so
// repeated evaluations, as in the optimizer, only pay for zeta(2 sigma0).
class DensityModel {
 public:
  explicit DensityModel(const PrecisionContext& ctx, StripParams strip = {}, Real H_rh = Real::parse(kDefaultHrh),
                        Real t0 = Real::parse(kFirstZeroHeight));

  DensityCoefficients coefficients(const Real& sigma, const Real& sigma0, const Real& H) const;

  const PrecisionContext& context() const noexcept { return ctx_; }
  const StripParams& strip() const noexcept { return strip_; }
  const Real& H_rh() const noexcept { return H_rh_; }
  const Real& c0() const noexcept { return c0_; }
  const RoundedConstant& E2() const noexcept { return E2_; }

 private:
  PrecisionContext ctx_;
  StripParams strip_;
  Real H_rh_;
  Real c0_;
  RoundedConstant E2_;
  Real log_zeta_ratio_;  // log(zeta(1+eta)^4 / zeta(2+2eta)^2)
};

DensityCoefficients compute_coefficients(const DensityParams& p, const PrecisionContext& ctx);

struct NBound {
  Real value;
  int64_t ceiling = 0;
};

// b1 (T - H) + b2 log(T H) + b3 with unrounded coefficients. Requires T >= H_rh.
NBound bound_N(const DensityCoefficients& c, const Real& T, const PrecisionContext& ctx);
// Same expression without the T >= H_rh hypothesis; for identities only.
NBound bound_N_unchecked(const DensityCoefficients& c, const Real& T, const PrecisionContext& ctx);

enum class NTVariant { rosser, trudgian };

struct Band {
  Real lower, upper;
};

// T/(2 pi) log(T/(2 pi e)) + 7/8 -+ (a log T + b log log T + c). Requires T > e.
Band rosser_NT_band(const Real& T, NTVariant variant, const PrecisionContext& ctx);

// 157 (1e5 T^3)^{1-sigma} log^{4-sigma}(100 T) + 600 log^2(100 T).
// Requires T >= 2000 and 0 < sigma < 1.
Real ramare_bound(const Real& sigma, const Real& T, const PrecisionContext& ctx);

// A value, or the reason it does not apply.
struct Applicable {
  std::optional<Real> value;
  std::string reason;

  bool applicable() const noexcept { return value.has_value(); }
};

// 453472.54 T^{8(1-sigma)/3} (log T)^5, valid for sigma >= 5/8 and
// T >= exp(exp(18)); not applicable below that height. sigma < 5/8 raises.
Applicable cheng_bound(const Real& sigma, const Real& T, const PrecisionContext& ctx);

struct ComparisonRow {
  Real sigma;
  Real T;
  Applicable this_bound;  // bound_N value
  Applicable rosser_half;
  Applicable trudgian_half;
  Applicable ramare;
  Applicable cheng;
};

// One row per T. The trivial bounds use the upper edge of the N(T) band.
std::vector<ComparisonRow> compare(const Real& sigma, const std::vector<Real>& T_list, const DensityCoefficients& c,
                                   const PrecisionContext& ctx);

}  // namespace zdensity
