#pragma once

// Search over (sigma0, H) for the density coefficients at a fixed sigma:
// a coarse grid (cell midpoints; log-spaced in H) followed by alternating
// golden-section refinement in sigma0 and in log H. H is always evaluated at
// its integer ceiling, which is also how it is reported.

#include <vector>

#include "density.hpp"

namespace zdensity {

enum class Objective { minimize_b1, minimize_bound_at_T };

struct Interval {
  Real lo;
  Real hi;
};

struct OptimizationSpec {
  Real sigma;
  Objective objective = Objective::minimize_b1;
  Real T;  // used by minimize_bound_at_T; must be >= H_rh
  Interval sigma0_box;
  Interval H_box;
  Real sigma0_tolerance = Real::parse("1e-6");
  Real H_tolerance = Real(1);
  int grid_size = 40;

  // sigma0 in (0.5208, min(sigma, 0.9723)), H in [1e3, H_rh).
  static OptimizationSpec defaults(const Real& sigma, const Real& H_rh = Real::parse(kDefaultHrh));

  // Empty boxes or boxes leaving the admissible region raise domain.
  void validate(const Real& H_rh) const;
};

struct TracePoint {
  Real sigma0;
  Real H;
  Real objective;
  Real b2, c3;
};

struct OptimizationResult {
  Real sigma0_star;
  Real H_star;  // integer
  Real objective;
  DensityCoefficients coefficients;
  std::vector<TracePoint> trace;  // every evaluation, in order
};

// Among evaluated points whose objective is within 1e-6 of the smallest one,
// the point with the smallest b2, then the smallest c3.
OptimizationResult optimize(const OptimizationSpec& spec, const DensityModel& model);
OptimizationResult optimize(const OptimizationSpec& spec, const PrecisionContext& ctx);

}  // namespace zdensity
