#include <doctest.h>

#include <cstdlib>
#include <string>

#include "bernoulli.hpp"
#include "errors.hpp"
#include "line_zeta.hpp"
#include "mangoldt.hpp"
#include "oracles.hpp"
#include "precision.hpp"
#include "zeta.hpp"

using namespace zdensity;
using mp::Real;

namespace {

Real R(const char* s) { return Real::parse(s); }

Real tol(int digits) { return mp::pow(Real(10), static_cast<long>(-digits)); }

bool close(const Real& a, const Real& b, const Real& eps) { return mp::abs(a - b) <= eps; }

bool close(const Complex& a, const Complex& b, const Real& eps) { return abs(a - b) <= eps; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("precision context") {
  PrecisionContext ctx;
  CHECK(ctx.digits == 60);
  CHECK(ctx.output_digits == 4);
  CHECK(ctx.rounding == Rounding::toward_plus_infinity);
  ctx.digits = 29;
  CHECK(kind_of([&] { ctx.validate(); }) == ErrorKind::invalid_argument);

  ::setenv("ZDENSITY_PRECISION", "85", 1);
  CHECK(PrecisionContext::from_environment().digits == 85);
  ::setenv("ZDENSITY_PRECISION", "abc", 1);
  CHECK_THROWS_AS(PrecisionContext::from_environment(), Error);
  ::unsetenv("ZDENSITY_PRECISION");
  CHECK(PrecisionContext::from_environment().digits == 60);
}

TEST_CASE("directed rounding of output") {
  mp::ScopedPrecision guard(70);
  CHECK(mp::to_fixed(R("2.19451"), 4, mp::Direction::up) == "2.1946");
  CHECK(mp::to_fixed(R("2.19451"), 4, mp::Direction::down) == "2.1945");
  CHECK(mp::to_fixed(R("-2.19451"), 4, mp::Direction::up) == "-2.1945");
  CHECK(mp::to_fixed(R("0.00001"), 4, mp::Direction::up) == "0.0001");
  CHECK(format_upper(R("0.55602"), 4) == "0.5561");
  CHECK(ceiling(R("110.0001")) == 111);
  CHECK(ceiling(R("-268659.07")) == -268659);

  // A binary value standing for an exact decimal stays put in every direction.
  PrecisionContext ctx;
  for (const char* v : {"1.7655", "2.1946", "0.1", "-3.25"}) {
    CHECK(format_output(R(v), ctx) == mp::to_fixed(R(v), 4, mp::Direction::nearest));
  }
  CHECK(format_output(R("1.76549601"), ctx) == "1.7655");
  CHECK(format_output(R("1.76550001"), ctx) == "1.7656");
  ctx.rounding = Rounding::toward_minus_infinity;
  CHECK(format_output(R("1.76559"), ctx) == "1.7655");
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_exact(1) == "1/6");
  CHECK(bernoulli_exact(2) == "-1/30");
  CHECK(bernoulli_exact(3) == "1/42");
  CHECK(bernoulli_exact(6) == "-691/2730");
  CHECK(bernoulli_exact(13) == "8553103/6");
  mp::ScopedPrecision guard(70);
  // B_2/2! = 1/12
  CHECK(close(bernoulli_over_factorial(1), Real(1) / 12L, tol(65)));
}

TEST_CASE("zeta_real against closed forms and MPFR") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real pi = mp::pi();
  CHECK(close(zeta_real(Real(2), ctx), pi * pi / 6L, tol(55)));
  CHECK(close(zeta_real(Real(4), ctx), mp::pow(pi, 4L) / 90L, tol(55)));
  for (const char* s : {"1.0416", "1.2944", "1.5002", "2.5", "7.25", "19.9", "40"}) {
    CAPTURE(std::string(s));
    CHECK(close(zeta_real(R(s), ctx), oracle::mpfr_zeta_real(R(s)), tol(ctx.digits - 5)));
  }
}

TEST_CASE("zeta_real near the pole matches the Laurent expansion") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real z1 = zeta_real(R("1.0001"), ctx);
  CHECK(z1 > R("10000.5"));
  CHECK(z1 < R("10000.7"));
  // The tabulated Stieltjes constants carry about 35 digits.
  CHECK(close(z1, oracle::laurent_zeta(R("1.0001")), tol(36)));

  const Real z2 = zeta_real(R("1.2944"), ctx);
  CHECK(z2 > R("3.99"));
  CHECK(z2 < R("4.00"));
  // Thirteen Laurent terms at distance 0.2944: truncation below 1e-12.
  CHECK(close(z2, oracle::laurent_zeta(R("1.2944")), tol(12)));
}

TEST_CASE("zeta_real domain") {
  PrecisionContext ctx;
  CHECK(kind_of([&] { zeta_real(Real(1), ctx); }) == ErrorKind::domain);
  CHECK(kind_of([&] { zeta_real(R("0.5"), ctx); }) == ErrorKind::domain);
}

TEST_CASE("zeta_complex against the Borwein series") {
  PrecisionContext ctx;
  struct Point {
    const char* sigma;
    const char* t;
  };
  for (Point p : {Point{"0.5", "14.134725"}, Point{"1.5", "100"}, Point{"0.75", "37.5"}, Point{"-0.5", "3"},
                  Point{"2", "0.25"}, Point{"0.6472", "250"}}) {
    CAPTURE(std::string(p.sigma));
    CAPTURE(std::string(p.t));
    Complex ours = zeta_complex({R(p.sigma), R(p.t)}, ctx);
    mp::ScopedPrecision guard(300);
    Complex ref = oracle::borwein_zeta(R(p.sigma), R(p.t), 700);
    CHECK(close(ours, ref, tol(ctx.digits / 2)));
    CHECK(close(ours, ref, tol(ctx.digits - 5)));
  }
}

TEST_CASE("zeta_complex examples") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  Complex on_axis = zeta_complex({Real(2), Real(0)}, ctx);
  CHECK(close(on_axis.re, zeta_real(Real(2), ctx), tol(ctx.digits / 2)));
  CHECK(on_axis.im.is_zero());

  // First zero near 14.1347.
  CHECK(abs(zeta_complex({R("0.5"), R("14.134725")}, ctx)) < R("1e-3"));

  // Step-doubling self-consistency at (1.5, 100).
  Complex z60 = zeta_complex({R("1.5"), Real(100)}, ctx);
  PrecisionContext twice = ctx;
  twice.digits = 120;
  Complex z120 = zeta_complex({R("1.5"), Real(100)}, twice);
  CHECK(close(z60, z120, tol(ctx.digits / 2)));
}

TEST_CASE("zeta_complex errors") {
  PrecisionContext ctx;
  CHECK(kind_of([&] { zeta_complex({Real(1), Real(0)}, ctx); }) == ErrorKind::pole);
  CHECK(kind_of([&] { zeta_complex({R("0.5"), R("1.5e7")}, ctx); }) == ErrorKind::unsupported_height);
  CHECK(kind_of([&] { zeta_complex({R("-1.5"), Real(5)}, ctx); }) == ErrorKind::domain);
}

TEST_CASE("property: real axis agreement on (1, 20]") {
  PrecisionContext ctx;
  for (const char* s : {"1.001", "1.1", "1.7", "3", "6.5", "11", "20"}) {
    CAPTURE(std::string(s));
    Complex z = zeta_complex({R(s), Real(0)}, ctx);
    mp::ScopedPrecision guard(ctx.working_digits());
    CHECK(close(z.re, zeta_real(R(s), ctx), tol(ctx.digits / 2)));
  }
}

TEST_CASE("property: conjugate symmetry is exact") {
  PrecisionContext ctx;
  for (const char* t : {"0.3", "14.1347", "321.5", "5000"}) {
    CAPTURE(std::string(t));
    Complex up = zeta_complex({R("0.6"), R(t)}, ctx);
    Complex down = zeta_complex({R("0.6"), -R(t)}, ctx);
    mp::ScopedPrecision guard(2 * ctx.working_digits());
    CHECK(up.re == down.re);
    CHECK((up.im + down.im).is_zero());
  }
}

TEST_CASE("property: doubling the precision stays within the error bound") {
  PrecisionContext lo;
  PrecisionContext hi;
  hi.digits = 2 * lo.digits;
  for (const char* s : {"1.0416", "1.5002", "3.3"}) {
    Real a = zeta_real(R(s), lo);
    Real b = zeta_real(R(s), hi);
    mp::ScopedPrecision guard(hi.working_digits());
    CHECK(close(a, b, tol(lo.digits - 5)));
  }
  for (const char* t : {"20", "777.7"}) {
    Complex a = zeta_complex({R("0.7"), R(t)}, lo);
    Complex b = zeta_complex({R("0.7"), R(t)}, hi);
    mp::ScopedPrecision guard(hi.working_digits());
    CHECK(close(a, b, tol(lo.digits / 2)));
  }
}

TEST_CASE("Euler-Maclaurin trace reports a bound below the target") {
  PrecisionContext ctx;
  EulerMaclaurinTrace tr;
  zeta_complex({R("0.5"), Real(1000)}, ctx, &tr);
  CHECK(tr.N >= 318);  // N >= (|t| + 4 D)/pi
  CHECK(tr.M > 0);
  CHECK(tr.log10_bound < -ctx.digits);
}

TEST_CASE("mangoldt") {
  CHECK(mangoldt(1) == 0.0);
  CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(mangoldt(6) == 0.0);
  CHECK(mangoldt(7) == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(mangoldt(1024) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(prime_power_base(243) == 3);
  CHECK(prime_power_base(12) == 0);
  for (unsigned long n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(mangoldt(n) == doctest::Approx(oracle::mangoldt_brute(n)).epsilon(1e-14));
  }
}

TEST_CASE("property: Chebyshev identity sum_{d|n} Lambda(d) = log n for n <= 1e4") {
  MangoldtSieve sieve(10000);
  mp::ScopedPrecision guard(40);
  for (uint64_t n = 1; n <= 10000; ++n) {
    Real sum(0);
    for (uint64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      if (uint64_t p = sieve.prime_power_base(d)) sum += mp::log_ui(p);
      const uint64_t e = n / d;
      if (e != d) {
        if (uint64_t p = sieve.prime_power_base(e)) sum += mp::log_ui(p);
      }
    }
    if (!close(sum, mp::log_ui(n), tol(35))) {
      FAIL("Chebyshev identity fails at n = " << n);
    }
  }
}

TEST_CASE("log_deriv_zeta_real against two oracles") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits() + 20);

  // Central difference of MPFR's zeta; h^2 error ~ 1e-40.
  for (const char* s : {"1.5002", "1.0416", "2.75"}) {
    CAPTURE(std::string(s));
    const Real h = R("1e-20");
    const Real x = R(s);
    Real num = (oracle::mpfr_zeta_real(x + h) - oracle::mpfr_zeta_real(x - h)) / (h * 2L);
    CHECK(close(log_deriv_zeta_real(x, ctx), num / oracle::mpfr_zeta_real(x), tol(35)));
  }

  // -sum Lambda(n) n^-10 over n <= 1e4; the tail is below 1e-35.
  Real lambda_sum(0);
  for (unsigned long n = 2; n <= 10000; ++n) {
    const double l = mangoldt(n);
    if (l == 0.0) continue;
    lambda_sum += mangoldt_mp(n) * mp::exp(-(Real(10) * mp::log_ui(n)));
  }
  CHECK(close(log_deriv_zeta_real(Real(10), ctx), -lambda_sum, tol(35)));
}

TEST_CASE("dirichlet_partial_sum") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  Complex s = dirichlet_partial_sum({Real(2), Real(0)}, R("3.5"), ctx);
  CHECK(close(s.re, Real(49) / 36L, tol(ctx.digits)));
  CHECK(s.im.is_zero());

  CHECK(partial_sum_length(Real(1)) == 0);
  CHECK(partial_sum_length(R("0.5")) == 0);
  CHECK(partial_sum_length(Real(100)) == 99);
  CHECK(partial_sum_length(R("100.01")) == 100);
  Complex empty = dirichlet_partial_sum({R("0.5"), R("0.5")}, R("0.5"), ctx);
  CHECK(empty.re.is_zero());

  Complex ours = dirichlet_partial_sum({R("0.5"), Real(100)}, Real(100), ctx);
  mp::ScopedPrecision wide(2 * ctx.working_digits());
  Complex ref = oracle::direct_partial_sum(R("0.5"), Real(100), 99);
  CHECK(close(ours, ref, tol(ctx.digits / 2)));
}

TEST_CASE("zeta_minus_partial_sum agrees with the difference") {
  PrecisionContext ctx;
  for (const char* x : {"14.1347", "500", "2000.5"}) {
    CAPTURE(std::string(x));
    const ComplexPoint s{R("0.75"), R(x)};
    Complex d = zeta_minus_partial_sum(s, R(x), ctx);
    Complex z = zeta_complex(s, ctx);
    Complex p = dirichlet_partial_sum(s, R(x), ctx);
    mp::ScopedPrecision guard(ctx.working_digits());
    CHECK(close(d, z - p, tol(ctx.digits - 10)));
  }
}

TEST_CASE("double-precision line evaluator against zeta_complex") {
  PrecisionContext ctx;
  for (double sigma : {0.55, 0.75, 1.5}) {
    auto line = line::zeta_on_line(sigma, 1000.0, 0.125, 2000);
    for (size_t i : {size_t{0}, size_t{1}, size_t{257}, size_t{1999}}) {
      const double t = 1000.0 + 0.125 * static_cast<double>(i);
      Complex ref = zeta_complex({Real::from_decimal(sigma), Real::from_decimal(t)}, ctx);
      CAPTURE(sigma);
      CAPTURE(t);
      CHECK(std::abs(line[i].real() - ref.re.to_double()) < 1e-10);
      CHECK(std::abs(line[i].imag() - ref.im.to_double()) < 1e-10);
    }
  }
  auto far = line::zeta_at(0.65, 99999.5);
  Complex ref = zeta_complex({R("0.65"), R("99999.5")}, ctx);
  CHECK(std::abs(far - std::complex<double>(ref.re.to_double(), ref.im.to_double())) < 1e-9);
  CHECK_THROWS(line::zeta_at(0.5, 2e6));
}
