#pragma once

// Published coefficient table (sigma = 0.60 .. 0.99) and its regeneration at
// the published (sigma0, H).

#include <optional>
#include <string>
#include <vector>

#include "density.hpp"

namespace zdensity {

struct PublishedRow {
  const char* sigma;
  const char* sigma0;
  int64_t H;
  const char* b1;
  const char* b2;
  int64_t b3;
  int64_t c3;
};

const std::vector<PublishedRow>& published_table1();

// Allowed deviations: b1, b2 in units of 1e-4; b3, c3 in units of 1.
inline constexpr int64_t kTolB1 = 2, kTolB2 = 2, kTolB3 = 1, kTolC3 = 50;

struct Deviation {
  int64_t b1 = 0, b2 = 0, b3 = 0, c3 = 0;  // recomputed minus published

  bool within_tolerance() const noexcept;
  bool exact() const noexcept { return b1 == 0 && b2 == 0 && b3 == 0 && c3 == 0; }
};

// For a row outside tolerance: sigma0 values in (published - 1e-4, published]
// on a 1e-6 lattice whose recomputed coefficients are within tolerance.
// `hits` counts them; first and last are the largest and smallest.
struct RoundingCellScan {
  int points = 0;
  int hits = 0;
  std::optional<Real> first_hit, last_hit;
};

struct Table1Entry {
  PublishedRow published;
  DensityCoefficients recomputed;
  FormattedCoefficients formatted;
  Deviation deviation;
  std::optional<RoundingCellScan> cell_scan;
};

// Deviation of formatted coefficients from a published row.
Deviation deviation_from(const FormattedCoefficients& f, const PublishedRow& row);

// Rows whose sigma matches one of `sigmas` (all rows when empty). Unknown
// sigma values raise invalid_argument. The rounding-cell scan runs for rows
// outside tolerance when `scan_cells` is set.
std::vector<Table1Entry> regenerate_table1(const DensityModel& model, const std::vector<std::string>& sigmas = {},
                                           bool scan_cells = true);
std::vector<Table1Entry> regenerate_table1(const PrecisionContext& ctx);

}  // namespace zdensity
