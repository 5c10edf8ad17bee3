#include "precision.hpp"

#include <cstdlib>

#include "errors.hpp"

namespace zdensity {

void PrecisionContext::validate() const {
  if (digits < kMinDigits) {
    fail(ErrorKind::invalid_argument,
         "precision must be at least " + std::to_string(kMinDigits) + " digits (got " + std::to_string(digits) + ")");
  }
  if (output_digits < 0 || output_digits > digits) {
    fail(ErrorKind::invalid_argument, "output digits must lie in [0, digits]");
  }
}

PrecisionContext PrecisionContext::from_environment() {
  PrecisionContext ctx;
  if (const char* env = std::getenv("ZDENSITY_PRECISION"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < kMinDigits || v > 10000) {
      fail(ErrorKind::invalid_argument, std::string("ZDENSITY_PRECISION is not a valid digit count: ") + env);
    }
    ctx.digits = static_cast<int>(v);
  }
  return ctx;
}

mp::Direction to_direction(Rounding r) noexcept {
  switch (r) {
    case Rounding::toward_plus_infinity: return mp::Direction::up;
    case Rounding::toward_minus_infinity: return mp::Direction::down;
    case Rounding::nearest: return mp::Direction::nearest;
  }
  return mp::Direction::nearest;
}

std::string format_upper(const Real& x, int decimals) { return mp::to_fixed(x, decimals, mp::Direction::up); }

std::string format_output(const Real& x, const PrecisionContext& ctx) {
  // Fixed-point text for astronomically large values would be unbounded.
  if (x.is_finite() && mp::abs(x) >= Real::parse("1e30")) return mp::to_sci(x, 17, to_direction(ctx.rounding));
  return mp::to_fixed_decimal(x, ctx.output_digits, to_direction(ctx.rounding), ctx.digits);
}

int64_t ceiling(const Real& x) { return mp::ceil_to_int(x); }

Real round_up(const Real& x, int decimals) { return Real::parse(format_upper(x, decimals)); }

}  // namespace zdensity
