#pragma once

// Double-precision zeta on a vertical line, sampled on a uniform grid.
//
// Used by the mean-square quadrature, where millions of values at ~1e-12
// relative accuracy matter more than 60 digits at a few points. Same
// Euler-Maclaurin scheme as zeta.hpp; the main sum advances from one grid
// point to the next by the fixed rotations n^{-i h}, reseeded from exact
// phases every kChunk points to keep rounding drift below 1e-13.

#include <complex>
#include <cstddef>
#include <vector>

namespace zdensity::line {

inline constexpr double kMaxLineHeight = 1e6;

// zeta(sigma + i (t_start + j step)) for j = 0..count-1.
// Requires 1 <= t <= kMaxLineHeight along the grid and sigma > -1.
std::vector<std::complex<double>> zeta_on_line(double sigma, double t_start, double step, std::size_t count);

// Single point convenience wrapper.
std::complex<double> zeta_at(double sigma, double t);

}  // namespace zdensity::line
