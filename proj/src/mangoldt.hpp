#pragma once

#include <cstdint>
#include <vector>

#include "mp_real.hpp"

namespace zdensity {

// p if n = p^k for a prime p and k >= 1, otherwise 0 (including n = 1).
uint64_t prime_power_base(uint64_t n);

// Lambda(n) = log p when n = p^k, else 0. Throws for n = 0.
double mangoldt(uint64_t n);

// Same, at the calling thread's working precision.
mp::Real mangoldt_mp(uint64_t n);

// Smallest-prime-factor sieve on [0, limit] answering prime_power_base in
// O(log n) per query. Used for the truncated sums over n <= N0.
class MangoldtSieve {
 public:
  explicit MangoldtSieve(uint64_t limit);

  uint64_t limit() const noexcept { return limit_; }
  uint64_t prime_power_base(uint64_t n) const;

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

}  // namespace zdensity
