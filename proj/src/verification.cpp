#include "verification.hpp"

#include <tuple>

#include "errors.hpp"

namespace zdensity {
namespace {

bool before(const GridPoint& a, const GridPoint& b) { return std::tie(a.sigma, a.t) < std::tie(b.sigma, b.t); }

}  // namespace

void VerificationReport::record(const GridPoint& p, double ratio) {
  ++points_checked;
  if (points_checked == 1 || ratio > worst_ratio || (ratio == worst_ratio && before(p, witness))) {
    worst_ratio = ratio;
    witness = p;
  }
  passed = worst_ratio <= 1.0;
}

VerificationReport VerificationReport::merge(const VerificationReport& a, const VerificationReport& b) {
  if (a.points_checked == 0) return b;
  if (b.points_checked == 0) return a;
  VerificationReport out = a;
  if (b.worst_ratio > a.worst_ratio || (b.worst_ratio == a.worst_ratio && before(b.witness, a.witness))) {
    out.worst_ratio = b.worst_ratio;
    out.witness = b.witness;
  }
  out.points_checked = a.points_checked + b.points_checked;
  out.passed = out.worst_ratio <= 1.0;
  return out;
}

std::vector<mp::Real> log_spaced(const mp::Real& lo, const mp::Real& hi, int count) {
  if (count < 1 || lo <= 0L || hi < lo) fail(ErrorKind::invalid_argument, "log_spaced needs 0 < lo <= hi and count >= 1");
  std::vector<mp::Real> out;
  out.reserve(static_cast<size_t>(count));
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  mp::Real span = mp::log(hi / lo);
  for (int i = 0; i < count; ++i) {
    if (i == count - 1) {
      out.push_back(hi);
    } else {
      out.push_back(lo * mp::exp(span * i / static_cast<long>(count - 1)));
    }
  }
  return out;
}

std::vector<mp::Real> arithmetic_grid(const mp::Real& lo, const mp::Real& hi, const mp::Real& step) {
  if (step <= 0L || hi < lo) fail(ErrorKind::invalid_argument, "arithmetic grid needs lo <= hi and step > 0");
  double span = ((hi - lo) / step).to_double();
  auto count = static_cast<int64_t>(span + 1e-9) + 1;
  if (count > 50'000'000) fail(ErrorKind::invalid_argument, "grid too large");
  std::vector<mp::Real> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) out.push_back(lo + step * static_cast<long>(i));
  return out;
}

}  // namespace zdensity
