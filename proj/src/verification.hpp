#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mp_real.hpp"

namespace zdensity {

struct GridPoint {
  double sigma = 0.0;
  double t = 0.0;
};

// Outcome of checking |lhs| <= rhs over a grid: the worst ratio |lhs|/rhs and
// where it occurred. passed <=> worst_ratio <= 1.
struct VerificationReport {
  double worst_ratio = 0.0;
  GridPoint witness{};
  uint64_t points_checked = 0;
  bool passed = true;

  void record(const GridPoint& p, double ratio);

  // Max-reduction; ties resolve to the lexicographically smaller witness so
  // merging is associative and order independent.
  static VerificationReport merge(const VerificationReport& a, const VerificationReport& b);
};

// lo * (hi/lo)^{i/(count-1)}, i = 0..count-1. count == 1 yields {lo}.
std::vector<mp::Real> log_spaced(const mp::Real& lo, const mp::Real& hi, int count);

// lo, lo + step, ..., up to hi inclusive (hi is hit when (hi-lo)/step is an
// integer up to 1e-9 slack).
std::vector<mp::Real> arithmetic_grid(const mp::Real& lo, const mp::Real& hi, const mp::Real& step);

}  // namespace zdensity
