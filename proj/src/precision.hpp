#pragma once

#include <string>

#include "mp_real.hpp"

namespace zdensity {

using mp::Real;

enum class Rounding { toward_plus_infinity, toward_minus_infinity, nearest };

// Working precision and output rounding discipline shared by every
// evaluation. Rounding only applies when a value is rendered; internal
// arithmetic is always round-to-nearest at `digits` (plus guard digits).
struct PrecisionContext {
  int digits = 60;
  int output_digits = 4;
  Rounding rounding = Rounding::toward_plus_infinity;

  static constexpr int kMinDigits = 30;
  static constexpr int kGuardDigits = 10;

  // Throws Error(invalid_argument) when digits < kMinDigits or
  // output_digits < 0.
  void validate() const;

  // Working precision used internally: digits plus guard digits.
  int working_digits() const noexcept { return digits + kGuardDigits; }

  // Reads ZDENSITY_PRECISION when set; falls back to the defaults.
  static PrecisionContext from_environment();
};

mp::Direction to_direction(Rounding r) noexcept;

// Renders an upper bound: always rounds toward +infinity whatever the
// context's rounding says.
std::string format_upper(const Real& x, int decimals);

// Renders with the context's rounding at its output_digits (17 significant
// digits in scientific form from 1e30 up).
std::string format_output(const Real& x, const PrecisionContext& ctx);

// Ceiling as an integer; used for H, b3 and c3 in published tables.
int64_t ceiling(const Real& x);

// Rounds x up to `decimals` places and returns the rounded value.
Real round_up(const Real& x, int decimals);

}  // namespace zdensity
