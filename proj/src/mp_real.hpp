#pragma once

// Thin value-semantic wrapper over an MPFR float.
//
// Precision model: every thread carries a working precision (in bits). A Real
// created without an explicit source takes the working precision at the time
// of construction, and every arithmetic result is produced at the working
// precision of the calling thread. Public entry points of the library install
// a ScopedPrecision derived from their PrecisionContext, so results never
// depend on state left behind by an unrelated caller.

#include <cstdint>
#include <stdio.h>  // mpfr.h only declares FILE* functions after stdio
#include <mpfr.h>

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace zdensity::mp {

mpfr_prec_t working_bits() noexcept;
mpfr_prec_t digits_to_bits(int decimal_digits) noexcept;

class ScopedPrecision {
 public:
  explicit ScopedPrecision(int decimal_digits);
  ~ScopedPrecision();

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

enum class Direction { up, down, nearest };

class Real {
 public:
  Real() {
    mpfr_init2(v_, working_bits());
    mpfr_set_zero(v_, 1);
  }

  template <std::signed_integral I>
  Real(I v) {  // NOLINT(google-explicit-constructor)
    mpfr_init2(v_, working_bits());
    mpfr_set_sj(v_, static_cast<intmax_t>(v), MPFR_RNDN);
  }

  template <std::unsigned_integral U>
  Real(U v) {  // NOLINT(google-explicit-constructor)
    mpfr_init2(v_, working_bits());
    mpfr_set_uj(v_, static_cast<uintmax_t>(v), MPFR_RNDN);
  }

  explicit Real(double v) {
    mpfr_init2(v_, working_bits());
    mpfr_set_d(v_, v, MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  // Parses a decimal literal ("0.6472", "3.061e10") exactly up to the working
  // precision. Throws std::invalid_argument on malformed input.
  static Real parse(std::string_view text);

  // Converts a double through its shortest round-trip decimal form, so that
  // 0.6472 (the double) becomes the decimal 0.6472 rather than its binary
  // neighbour.
  static Real from_decimal(double v);

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

 private:
  mpfr_t v_;
};

// Arithmetic. Results are produced at the calling thread's working precision.
Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

Real abs(const Real& x);
Real sqr(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log_ui(unsigned long n);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
std::pair<Real, Real> sin_cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real ceil(const Real& x);
const Real& min(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);

Real pi();
Real ln2();
Real euler_gamma();

// Integer rounding toward +inf / -inf; throws std::range_error outside int64.
int64_t ceil_to_int(const Real& x);
int64_t floor_to_int(const Real& x);

// Fixed-point rendering with exactly `decimals` digits after the point,
// rounded in the requested direction. Exact: the scaled value is rounded to
// an integer once, then printed digit by digit.
std::string to_fixed(const Real& x, int decimals, Direction dir);

// As above, but the directed rounding applies to x first rounded to nearest at
// `significant` decimal digits. A binary value standing for an exact short
// decimal (1.7655) then renders as that decimal in every direction.
std::string to_fixed_decimal(const Real& x, int decimals, Direction dir, int significant);

// Scientific rendering with `significant` digits.
std::string to_sci(const Real& x, int significant, Direction dir = Direction::nearest);

// Shortest decimal form that survives a round trip through the working
// precision at `significant` digits; used for machine-readable output.
std::string to_string(const Real& x, int significant);

}  // namespace zdensity::mp
