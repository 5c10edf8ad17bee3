#include "mp_real.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace zdensity::mp {
namespace {

thread_local mpfr_prec_t t_working_bits = digits_to_bits(70);

struct MpfrString {
  char* s = nullptr;
  ~MpfrString() {
    if (s != nullptr) mpfr_free_str(s);
  }
};

mpfr_rnd_t to_mpfr(Direction d) {
  switch (d) {
    case Direction::up: return MPFR_RNDU;
    case Direction::down: return MPFR_RNDD;
    case Direction::nearest: return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

}  // namespace

mpfr_prec_t working_bits() noexcept { return t_working_bits; }

mpfr_prec_t digits_to_bits(int decimal_digits) noexcept {
  // log2(10) = 3.3219...; a few spare bits cover the conversion loss.
  return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.321928094887362)) + 8;
}

ScopedPrecision::ScopedPrecision(int decimal_digits) : saved_(t_working_bits) {
  if (decimal_digits < 1) throw std::invalid_argument("precision must be positive");
  t_working_bits = digits_to_bits(decimal_digits);
}

ScopedPrecision::~ScopedPrecision() { t_working_bits = saved_; }

Real Real::parse(std::string_view text) {
  std::string buf(text);
  Real r;
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.raw(), buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end == buf.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
  return r;
}

Real Real::from_decimal(double v) {
  if (!std::isfinite(v)) return Real(v);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return Real(v);
  return parse(std::string_view(buf, static_cast<size_t>(ptr - buf)));
}

Real operator-(const Real& a) { Real r; mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); return r; }
Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

Real abs(const Real& x) { Real r; mpfr_abs(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real sqr(const Real& x) { Real r; mpfr_sqr(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real exp(const Real& x) { Real r; mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real log(const Real& x) { Real r; mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real log_ui(unsigned long n) { Real r; mpfr_log_ui(r.raw(), n, MPFR_RNDN); return r; }
Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
Real pow(const Real& x, long n) { Real r; mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN); return r; }
Real sin(const Real& x) { Real r; mpfr_sin(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real cos(const Real& x) { Real r; mpfr_cos(r.raw(), x.raw(), MPFR_RNDN); return r; }

std::pair<Real, Real> sin_cos(const Real& x) {
  std::pair<Real, Real> r;
  mpfr_sin_cos(r.first.raw(), r.second.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
Real hypot(const Real& x, const Real& y) { Real r; mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
Real floor(const Real& x) { Real r; mpfr_floor(r.raw(), x.raw()); return r; }
Real ceil(const Real& x) { Real r; mpfr_ceil(r.raw(), x.raw()); return r; }
const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }
const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real ln2() { Real r; mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }
Real euler_gamma() { Real r; mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }

int64_t ceil_to_int(const Real& x) {
  Real c = ceil(x);
  if (!mpfr_fits_intmax_p(c.raw(), MPFR_RNDN)) throw std::range_error("value outside int64 range");
  return static_cast<int64_t>(mpfr_get_sj(c.raw(), MPFR_RNDN));
}

int64_t floor_to_int(const Real& x) {
  Real f = floor(x);
  if (!mpfr_fits_intmax_p(f.raw(), MPFR_RNDN)) throw std::range_error("value outside int64 range");
  return static_cast<int64_t>(mpfr_get_sj(f.raw(), MPFR_RNDN));
}

std::string to_fixed(const Real& x, int decimals, Direction dir) {
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  if (decimals < 0) throw std::invalid_argument("negative decimal count");
  // Scale with enough headroom that the product is exact for every input we
  // produce (precision of x plus the bits of 10^decimals).
  mpfr_prec_t bits = x.precision() + static_cast<mpfr_prec_t>(decimals * 4 + 16);
  mpfr_t scaled, ten;
  mpfr_init2(scaled, bits);
  mpfr_init2(ten, bits);
  mpfr_set_ui(ten, 10, MPFR_RNDN);
  mpfr_pow_ui(ten, ten, static_cast<unsigned long>(decimals), MPFR_RNDN);
  mpfr_mul(scaled, x.raw(), ten, to_mpfr(dir));
  mpfr_rint(scaled, scaled, to_mpfr(dir));

  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, scaled, MPFR_RNDN);
  std::unique_ptr<char, void (*)(void*)> digits(mpz_get_str(nullptr, 10, z), std::free);
  mpz_clear(z);
  mpfr_clear(scaled);
  mpfr_clear(ten);

  std::string s(digits.get());
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  if (decimals > 0) {
    if (s.size() <= static_cast<size_t>(decimals)) s.insert(0, static_cast<size_t>(decimals) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(decimals), ".");
  }
  if (negative) s.insert(0, "-");
  return s;
}

std::string to_fixed_decimal(const Real& x, int decimals, Direction dir, int significant) {
  if (!x.is_finite()) return to_fixed(x, decimals, dir);
  if (decimals < 0 || significant < 1) throw std::invalid_argument("bad digit counts");
  if (x.is_zero()) return to_fixed(x, decimals, dir);
  MpfrString str;
  mpfr_exp_t e = 0;
  str.s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x.raw(), MPFR_RNDN);
  // x ~ M 10^(e - significant), M the digit string as an integer.
  mpz_t m, p;
  mpz_init_set_str(m, str.s, 10);
  mpz_init(p);
  long k = static_cast<long>(e) - significant + decimals;
  if (k >= 0) {
    mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(k));
    mpz_mul(m, m, p);
  } else {
    mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(-k));
    switch (dir) {
      case Direction::up: mpz_cdiv_q(m, m, p); break;
      case Direction::down: mpz_fdiv_q(m, m, p); break;
      case Direction::nearest: {
        // Half away from zero.
        mpz_t h;
        mpz_init(h);
        mpz_fdiv_q_ui(h, p, 2);
        if (mpz_sgn(m) < 0) mpz_sub(m, m, h); else mpz_add(m, m, h);
        mpz_tdiv_q(m, m, p);
        mpz_clear(h);
        break;
      }
    }
  }
  std::unique_ptr<char, void (*)(void*)> digits(mpz_get_str(nullptr, 10, m), std::free);
  mpz_clear(m);
  mpz_clear(p);
  std::string s(digits.get());
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  if (decimals > 0) {
    if (s.size() <= static_cast<size_t>(decimals)) s.insert(0, static_cast<size_t>(decimals) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<size_t>(decimals), ".");
  }
  if (negative && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "-");
  return s;
}

std::string to_sci(const Real& x, int significant, Direction dir) {
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  if (x.is_zero()) return "0";
  MpfrString str;
  mpfr_exp_t e = 0;
  str.s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x.raw(), to_mpfr(dir));
  std::string m(str.s);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

std::string to_string(const Real& x, int significant) {
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  if (x.is_zero()) return "0";
  MpfrString str;
  mpfr_exp_t e = 0;
  str.s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x.raw(), MPFR_RNDN);
  std::string m(str.s);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  if (e < -5 || e > significant) return to_sci(x, static_cast<int>(m.size()));
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else if (static_cast<size_t>(e) >= m.size()) {
    out = m + std::string(static_cast<size_t>(e) - m.size(), '0');
  } else {
    out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
  }
  return sign + out;
}

}  // namespace zdensity::mp
