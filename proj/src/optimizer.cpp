#include "optimizer.hpp"

#include <functional>

#include "errors.hpp"

namespace zdensity {

OptimizationSpec OptimizationSpec::defaults(const Real& sigma, const Real& H_rh) {
  OptimizationSpec s;
  s.sigma = sigma;
  s.T = H_rh;
  s.sigma0_box = {Real::parse(kSigma0Min), mp::min(sigma, Real::parse(kSigma0Max))};
  s.H_box = {Real(1000), H_rh};
  return s;
}

void OptimizationSpec::validate(const Real& H_rh) const {
  if (grid_size < 1) fail(ErrorKind::invalid_argument, "grid size must be positive");
  if (sigma0_tolerance <= 0L || H_tolerance <= 0L) fail(ErrorKind::invalid_argument, "tolerances must be positive");
  if (sigma0_box.lo > sigma0_box.hi) fail(ErrorKind::domain, "empty sigma0 box");
  if (H_box.lo > H_box.hi) fail(ErrorKind::domain, "empty H box");
  if (sigma0_box.lo < Real::parse(kSigma0Min) || sigma0_box.hi > Real::parse(kSigma0Max)) {
    fail(ErrorKind::domain, "sigma0 box outside [0.5208, 0.9723]");
  }
  if (sigma0_box.hi > sigma) fail(ErrorKind::domain, "sigma0 box reaches above sigma");
  if (H_box.lo < 1000L || H_box.hi > H_rh) fail(ErrorKind::domain, "H box outside [1000, H_rh]");
  if (objective == Objective::minimize_bound_at_T && T < H_rh) fail(ErrorKind::domain, "objective height T below H_rh");
}

namespace {

constexpr double kTieWindow = 1e-6;

class Search {
 public:
  Search(const OptimizationSpec& spec, const DensityModel& model) : spec_(spec), model_(model) {
    // Largest integer strictly below H_rh.
    H_cap_ = Real(mp::ceil_to_int(model.H_rh()) - 1);
  }

  Real integer_H(const Real& H) const {
    Real h = mp::ceil(H);
    return h > H_cap_ ? H_cap_ : h;
  }

  const Real& evaluate(const Real& sigma0, const Real& H) {
    Real h = integer_H(H);
    DensityCoefficients c = model_.coefficients(spec_.sigma, sigma0, h);
    Real obj = spec_.objective == Objective::minimize_b1 ? c.b1 : bound_N(c, spec_.T, model_.context()).value;
    trace_.push_back({sigma0, h, obj, c.b2, c.c3});
    if (best_ < 0 || obj < best().objective) best_ = static_cast<long>(trace_.size() - 1);
    return trace_.back().objective;
  }

  // Golden-section minimum of f on (a, b), stopping when b - a <= tol.
  void golden(Real a, Real b, const Real& tol, const std::function<Real(const Real&)>& f) {
    const Real invphi = (mp::sqrt(Real(5)) - 1L) / 2L;
    Real x1 = b - invphi * (b - a);
    Real x2 = a + invphi * (b - a);
    Real f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - invphi * (b - a);
        f1 = f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + invphi * (b - a);
        f2 = f(x2);
      }
    }
  }

  OptimizationResult run() {
    const int n = spec_.grid_size;
    const Interval& sb = spec_.sigma0_box;
    const Interval& hb = spec_.H_box;
    const bool fixed_sigma0 = sb.lo == sb.hi;
    const bool fixed_H = hb.lo == hb.hi;
    const Real log_lo = mp::log(hb.lo), log_hi = mp::log(hb.hi);
    const Real s_cell = (sb.hi - sb.lo) / n;
    const Real u_cell = (log_hi - log_lo) / n;

    auto sigma0_at = [&](int i) { return fixed_sigma0 ? sb.lo : sb.lo + s_cell * (Real(2 * i + 1) / 2L); };
    auto H_at = [&](int j) { return fixed_H ? hb.lo : mp::exp(log_lo + u_cell * (Real(2 * j + 1) / 2L)); };
    const int ns = fixed_sigma0 ? 1 : n;
    const int nh = fixed_H ? 1 : n;
    for (int i = 0; i < ns; ++i) {
      for (int j = 0; j < nh; ++j) evaluate(sigma0_at(i), H_at(j));
    }

    constexpr int kMaxRounds = 12;
    for (int round = 0; round < kMaxRounds && !(fixed_sigma0 && fixed_H); ++round) {
      const Real s_before = best().sigma0;
      const Real h_before = best().H;
      if (!fixed_sigma0) {
        const Real h = best().H;
        Real a = mp::max(sb.lo, best().sigma0 - s_cell);
        Real b = mp::min(sb.hi, best().sigma0 + s_cell);
        golden(a, b, spec_.sigma0_tolerance, [&](const Real& x) { return evaluate(x, h); });
      }
      if (!fixed_H) {
        const Real s0 = best().sigma0;
        Real u = mp::log(best().H);
        Real a = mp::max(log_lo, u - u_cell);
        Real b = mp::min(log_hi, u + u_cell);
        // Width tolerance in log H equivalent to H_tolerance at the upper end.
        Real tol = spec_.H_tolerance / mp::exp(b);
        golden(a, b, tol, [&](const Real& x) { return evaluate(s0, mp::exp(x)); });
      }
      if (mp::abs(best().sigma0 - s_before) <= spec_.sigma0_tolerance && mp::abs(best().H - h_before) <= spec_.H_tolerance) {
        break;
      }
    }

    // Tie-break inside the window above the minimum.
    const Real window = best().objective + Real(kTieWindow);
    std::size_t pick = static_cast<std::size_t>(best_);
    for (std::size_t i = 0; i < trace_.size(); ++i) {
      const TracePoint& p = trace_[i];
      const TracePoint& q = trace_[pick];
      if (p.objective > window) continue;
      if (p.b2 < q.b2 || (p.b2 == q.b2 && (p.c3 < q.c3 || (p.c3 == q.c3 && p.objective < q.objective)))) pick = i;
    }
    OptimizationResult r;
    r.sigma0_star = trace_[pick].sigma0;
    r.H_star = trace_[pick].H;
    r.objective = trace_[pick].objective;
    r.coefficients = model_.coefficients(spec_.sigma, r.sigma0_star, r.H_star);
    r.trace = std::move(trace_);
    return r;
  }

 private:
  const TracePoint& best() const { return trace_[static_cast<std::size_t>(best_)]; }

  const OptimizationSpec& spec_;
  const DensityModel& model_;
  Real H_cap_;
  long best_ = -1;  // index of the smallest objective so far
  std::vector<TracePoint> trace_;
};

}  // namespace

OptimizationResult optimize(const OptimizationSpec& spec, const DensityModel& model) {
  spec.validate(model.H_rh());
  mp::ScopedPrecision guard(model.context().working_digits());
  return Search(spec, model).run();
}

OptimizationResult optimize(const OptimizationSpec& spec, const PrecisionContext& ctx) {
  return optimize(spec, DensityModel(ctx));
}

}  // namespace zdensity
