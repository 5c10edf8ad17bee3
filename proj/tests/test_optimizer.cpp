#include <doctest.h>

#include <string>

#include "errors.hpp"
#include "optimizer.hpp"
#include "table1.hpp"

using namespace zdensity;
using mp::Real;

namespace {

Real R(const char* s) { return Real::parse(s); }

const DensityModel& model() {
  static const DensityModel m{PrecisionContext{}};
  return m;
}

}  // namespace

TEST_CASE("optimum at sigma = 0.85") {
  auto r = optimize(OptimizationSpec::defaults(R("0.85")), model());
  mp::ScopedPrecision guard(model().context().working_digits());
  CHECK(r.coefficients.b1 <= R("0.5561"));
  CHECK(mp::abs(r.sigma0_star - R("0.6472")) <= R("0.005"));
  CHECK(r.H_star == mp::ceil(r.H_star));
  CHECK(r.objective == r.coefficients.b1);
  CHECK(r.trace.size() >= 1600);
}

TEST_CASE("optimum at sigma = 0.60 and 0.75") {
  auto a = optimize(OptimizationSpec::defaults(R("0.60")), model());
  auto b = optimize(OptimizationSpec::defaults(R("0.75")), model());
  mp::ScopedPrecision guard(model().context().working_digits());
  CHECK(a.coefficients.b1 <= R("4.2288"));
  CHECK(b.coefficients.b1 <= R("1.0031"));
}

TEST_CASE("degenerate box returns the single feasible point") {
  auto spec = OptimizationSpec::defaults(R("0.85"));
  spec.sigma0_box = {R("0.6472"), R("0.6472")};
  spec.H_box = {R("483393"), R("483393")};
  auto r = optimize(spec, model());
  auto direct = model().coefficients(R("0.85"), R("0.6472"), R("483393"));
  REQUIRE(r.trace.size() == 1);
  CHECK(r.coefficients.b1 == direct.b1);
  CHECK(r.coefficients.b2 == direct.b2);
  CHECK(r.coefficients.b3 == direct.b3);
  CHECK(r.coefficients.c3 == direct.c3);
  auto f = format_coefficients(r.coefficients, 4);
  CHECK(f.b1 == "0.5561");
  CHECK(f.b3 == "111");
}

TEST_CASE("property: result inside the box and within the tie window of every trace point") {
  auto spec = OptimizationSpec::defaults(R("0.92"));
  spec.sigma0_box = {R("0.6"), R("0.75")};
  spec.H_box = {R("1e5"), R("1e7")};
  spec.grid_size = 12;
  auto r = optimize(spec, model());
  mp::ScopedPrecision guard(model().context().working_digits());
  CHECK(r.sigma0_star >= spec.sigma0_box.lo);
  CHECK(r.sigma0_star <= spec.sigma0_box.hi);
  CHECK(r.H_star >= spec.H_box.lo);
  CHECK(r.H_star <= spec.H_box.hi);
  for (const auto& p : r.trace) CHECK(r.objective <= p.objective + R("1e-6"));
  for (const auto& p : r.trace) {
    CHECK(p.H == mp::ceil(p.H));
  }
}

TEST_CASE("property: deterministic trace") {
  auto spec = OptimizationSpec::defaults(R("0.7"));
  spec.grid_size = 8;
  auto a = optimize(spec, model());
  auto b = optimize(spec, model());
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].sigma0 == b.trace[i].sigma0);
    CHECK(a.trace[i].H == b.trace[i].H);
    CHECK(a.trace[i].objective == b.trace[i].objective);
  }
  CHECK(a.sigma0_star == b.sigma0_star);
  CHECK(a.H_star == b.H_star);
}

TEST_CASE("property: optimum never loses to the published parameters") {
  const auto& table = published_table1();
  for (const char* sigma : {"0.65", "0.80", "0.90", "0.99"}) {
    auto r = optimize(OptimizationSpec::defaults(R(sigma)), model());
    for (const auto& row : table) {
      if (std::string(row.sigma) != sigma) continue;
      auto pub = model().coefficients(R(sigma), R(row.sigma0), Real(row.H));
      mp::ScopedPrecision guard(model().context().working_digits());
      CAPTURE(std::string(sigma));
      CHECK(r.objective <= pub.b1 + R("1e-6"));
    }
  }
}

TEST_CASE("property: b1 decreasing in H below the optimal H") {
  // b1 has an interior minimum in H (near 5e5 for sigma0 = 0.6472), so the
  // finite-difference check is taken on H below the minimizer.
  const char* pairs[][3] = {{"0.85", "0.6472", "3e5"},
                            {"0.70", "0.5873", "5e4"},
                            {"0.90", "0.6667", "5e5"},
                            {"0.99", "0.7077", "1e6"},
                            {"0.75", "0.6096", "1e5"}};
  for (const auto& p : pairs) {
    auto a = model().coefficients(R(p[0]), R(p[1]), R(p[2]));
    mp::ScopedPrecision guard(model().context().working_digits());
    auto b = model().coefficients(R(p[0]), R(p[1]), R(p[2]) + 100L);
    CAPTURE(std::string(p[0]));
    CHECK(b.b1 < a.b1);
  }
}

TEST_CASE("bound objective") {
  auto spec = OptimizationSpec::defaults(R("0.85"));
  spec.objective = Objective::minimize_bound_at_T;
  spec.T = R("30610000001");
  spec.grid_size = 20;
  auto r = optimize(spec, model());
  auto pub = model().coefficients(R("0.85"), R("0.6472"), R("30609999999"));
  mp::ScopedPrecision guard(model().context().working_digits());
  CHECK(r.objective == bound_N(r.coefficients, spec.T, model().context()).value);
  CHECK(r.objective <= bound_N(pub, spec.T, model().context()).value + R("1e-6"));
}

TEST_CASE("invalid search boxes") {
  auto spec = OptimizationSpec::defaults(R("0.85"));
  spec.sigma0_box = {R("0.7"), R("0.6")};
  CHECK_THROWS_AS(optimize(spec, model()), Error);
  spec = OptimizationSpec::defaults(R("0.85"));
  spec.H_box = {R("1e6"), R("1e5")};
  CHECK_THROWS_AS(optimize(spec, model()), Error);
  spec = OptimizationSpec::defaults(R("0.85"));
  spec.H_box = {R("500"), R("1e5")};
  CHECK_THROWS_AS(optimize(spec, model()), Error);
  spec = OptimizationSpec::defaults(R("0.85"));
  spec.objective = Objective::minimize_bound_at_T;
  spec.T = R("1e10");
  CHECK_THROWS_AS(optimize(spec, model()), Error);
  spec = OptimizationSpec::defaults(R("0.85"));
  spec.sigma0_tolerance = Real(0);
  CHECK_THROWS_AS(optimize(spec, model()), Error);
}
