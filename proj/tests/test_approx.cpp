#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "approx.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "verification.hpp"

using namespace zdensity;
using mp::Real;

namespace {

Real R(const char* s) { return Real::parse(s); }

// Direct transcription of the constant, evaluated with MPFR's zeta(2).
Real big_C_oracle(const Real& sigma, const Real& c, const Real& t0) {
  const Real pi = mp::pi();
  const Real zeta2 = oracle::mpfr_zeta_real(Real(2));
  const Real tpc = pi * c * 2L;
  const Real inner = zeta2 / tpc + Real(1) + Real(1) / (tpc - Real(1));
  const Real outer = c + Real(1) / 2L + Real(3) * mp::sqrt(Real(1) + Real(1) / (t0 * t0)) / (pi * 2L) * inner;
  return outer / mp::pow(c, sigma);
}

}  // namespace

TEST_CASE("big_C matches the transcribed formula") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  for (const char* sig : {"0.5", "0.8", "1.3"}) {
    for (const char* c : {"0.2", "1", "3.5"}) {
      for (const char* t0 : {"1", "14.1347", "1000"}) {
        CAPTURE(std::string(sig) + " " + c + " " + t0);
        Real ours = big_C({R(sig), R(c), R(t0)}, ctx);
        CHECK(mp::abs(ours - big_C_oracle(R(sig), R(c), R(t0))) < R("1e-55"));
      }
    }
  }
}

TEST_CASE("corollary constant c0") {
  PrecisionContext ctx;
  CorollaryConstant c0 = c0_corollary(ctx);
  CHECK(format_output(c0.rounded, ctx) == "2.1946");
  mp::ScopedPrecision guard(ctx.working_digits());
  CHECK(c0.unrounded < R("2.1946"));
  CHECK(c0.unrounded > R("2.1945"));
  CHECK(mp::abs(c0.unrounded - big_C_oracle(R("0.5"), Real(1), R("14.1347"))) < R("1e-55"));
  // c = 1 kills the sigma dependence.
  CHECK(big_C({R("1.3"), Real(1), R("14.1347")}, ctx) == c0.unrounded);
}

TEST_CASE("big_C domain") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  const Real edge = Real(1) / (mp::pi() * 2L);
  CHECK_THROWS_AS(big_C({R("0.5"), edge, R("14.1347")}, ctx), Error);
  CHECK_THROWS_AS(big_C({R("0.5"), R("0.1"), R("14.1347")}, ctx), Error);
  CHECK_THROWS_AS(big_C({R("0.4"), Real(1), R("14.1347")}, ctx), Error);
  CHECK_THROWS_AS(big_C({R("0.5"), Real(1), Real(0)}, ctx), Error);
}

TEST_CASE("property: big_C monotone in t0 and sigma, big_C c^sigma independent of sigma") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  Real prev = big_C({R("0.5"), Real(1), Real(10)}, ctx);
  for (const char* t0 : {"1000", "1000000", "1e12"}) {
    Real next = big_C({R("0.5"), Real(1), R(t0)}, ctx);
    CHECK(next < prev);
    prev = next;
  }
  for (const char* c : {"1.5", "2", "7"}) {
    Real a = big_C({R("0.5"), R(c), R("14.1347")}, ctx);
    Real b = big_C({R("0.9"), R(c), R("14.1347")}, ctx);
    Real d = big_C({R("1.7"), R(c), R("14.1347")}, ctx);
    CHECK(b < a);
    CHECK(d < b);
    Real sa = a * mp::pow(R(c), R("0.5"));
    Real sd = d * mp::pow(R(c), R("1.7"));
    CHECK(mp::abs(sa - sd) < R("1e-55"));
  }
}

TEST_CASE("approx_ratio at a single point against Borwein") {
  PrecisionContext ctx;
  const Real sigma = R("0.5");
  const Real t = R("14.1347");
  const double ours = approx_ratio(sigma, t, c0_corollary(ctx).rounded, ctx);
  mp::ScopedPrecision guard(200);
  Complex diff = oracle::borwein_zeta(sigma, t, 400) - oracle::direct_partial_sum(sigma, t, 14);
  Real ref = abs(diff) / (R("2.1946") * mp::pow(t, -sigma));
  CHECK(ours == doctest::Approx(ref.to_double()).epsilon(1e-14));
  CHECK(ours <= 1.0);
}

TEST_CASE("verify_approx") {
  PrecisionContext ctx;
  mp::ScopedPrecision guard(ctx.working_digits());
  VerificationReport empty = verify_approx({}, {}, ctx);
  CHECK(empty.passed);
  CHECK(empty.worst_ratio == 0.0);
  CHECK(empty.points_checked == 0);

  std::vector<Real> sig{R("0.5"), R("1")};
  std::vector<Real> ts = log_spaced(R("14.1347"), R("2000"), 12);
  VerificationReport r = verify_approx(sig, ts, ctx);
  CHECK(r.passed);
  CHECK(r.points_checked == 24);
  CHECK(r.worst_ratio > 0.0);

  // A larger constant never raises the worst ratio.
  VerificationReport looser = verify_approx(sig, ts, ctx, R("3"));
  CHECK(looser.worst_ratio <= r.worst_ratio);
  VerificationReport tighter = verify_approx(sig, ts, ctx, R("0.1"));
  CHECK_FALSE(tighter.passed);

  CHECK_THROWS_AS(verify_approx({R("0.4")}, ts, ctx), Error);
  CHECK_THROWS_AS(verify_approx(sig, {R("10")}, ctx), Error);
}

TEST_CASE("verify_small_t points") {
  PrecisionContext ctx;
  SmallTGrid one;
  one.sigma_min = one.sigma_max = R("0.5");
  one.t_min = one.t_max = R("0.5");
  VerificationReport r = verify_small_t(ctx, one);
  CHECK(r.points_checked == 1);
  {
    mp::ScopedPrecision guard(200);
    // Empty partial sum: the ratio is |zeta(0.5 + 0.5 i)| / (43 0.5^-0.5).
    Real ref = abs(oracle::borwein_zeta(R("0.5"), R("0.5"), 300)) / (Real(43) * mp::pow(R("0.5"), R("-0.5")));
    CHECK(r.worst_ratio == doctest::Approx(ref.to_double()).epsilon(1e-14));
  }
  SmallTGrid corner = one;
  corner.sigma_min = corner.sigma_max = Real(2);
  corner.t_min = corner.t_max = Real(15);
  VerificationReport c = verify_small_t(ctx, corner);
  CHECK(c.worst_ratio < 0.05);
  {
    mp::ScopedPrecision guard(200);
    Complex d = oracle::borwein_zeta(Real(2), Real(15), 300) - oracle::direct_partial_sum(Real(2), Real(15), 14);
    Real ref = abs(d) / (Real(43) * mp::pow(Real(15), Real(-2)));
    CHECK(c.worst_ratio == doctest::Approx(ref.to_double()).epsilon(1e-14));
  }

  // A coarse version of the default sweep.
  SmallTGrid coarse;
  coarse.sigma_step = R("0.25");
  coarse.t_step = R("0.5");
  coarse.t_min = R("0.01");
  VerificationReport cr = verify_small_t(ctx, coarse);
  CHECK(cr.passed);
  CHECK(cr.points_checked == 7 * 30);
}

TEST_CASE("property: report merge is associative and order independent") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<VerificationReport> parts(5);
  VerificationReport serial;
  for (int i = 0; i < 60; ++i) {
    GridPoint p{u(rng), u(rng)};
    double ratio = (i % 7 == 3) ? 1.25 : u(rng) / 2;  // repeated maxima exercise the tie rule
    serial.record(p, ratio);
    parts[static_cast<size_t>(i % 5)].record(p, ratio);
  }
  auto fold = [](std::vector<VerificationReport> v) {
    VerificationReport acc;
    for (const auto& r : v) acc = VerificationReport::merge(acc, r);
    return acc;
  };
  VerificationReport a = fold(parts);
  std::reverse(parts.begin(), parts.end());
  VerificationReport b = fold(parts);
  VerificationReport c = VerificationReport::merge(VerificationReport::merge(parts[0], parts[1]),
                                                   VerificationReport::merge(parts[2], VerificationReport::merge(parts[3], parts[4])));
  for (const auto* r : {&a, &b, &c}) {
    CHECK(r->worst_ratio == serial.worst_ratio);
    CHECK(r->witness.sigma == serial.witness.sigma);
    CHECK(r->witness.t == serial.witness.t);
    CHECK(r->points_checked == serial.points_checked);
    CHECK(r->passed == serial.passed);
  }
  CHECK_FALSE(serial.passed);
}

TEST_CASE("grids") {
  mp::ScopedPrecision guard(70);
  auto g = log_spaced(R("10"), R("1000"), 3);
  REQUIRE(g.size() == 3);
  CHECK(mp::abs(g[1] - Real(100)) < R("1e-60"));
  CHECK(g[2] == Real(1000));
  auto a = arithmetic_grid(R("0.5"), R("2"), R("0.05"));
  CHECK(a.size() == 31);
  CHECK(mp::abs(a.back() - Real(2)) < R("1e-60"));
  CHECK_THROWS_AS(arithmetic_grid(R("1"), R("0"), R("0.1")), Error);
  CHECK_THROWS_AS(log_spaced(R("0"), R("1"), 4), Error);
}
