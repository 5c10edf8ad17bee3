#pragma once

#include "mp_real.hpp"

namespace zdensity {

// B_{2k} / (2k)! for k >= 1, at the calling thread's working precision.
// The rationals are computed exactly (tangent-number recurrence) and cached
// process-wide; the cache is guarded, so concurrent callers are safe.
mp::Real bernoulli_over_factorial(int k);

// Exact B_{2k} as "numerator/denominator" text; used by tests.
std::string bernoulli_exact(int k);

}  // namespace zdensity
