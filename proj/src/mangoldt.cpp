#include "mangoldt.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace zdensity {

uint64_t prime_power_base(uint64_t n) {
  if (n == 0) fail(ErrorKind::domain, "mangoldt is defined for n >= 1");
  if (n == 1) return 0;
  uint64_t p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (uint64_t d = 3; d <= n / d; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) return n;  // n is prime
  }
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

double mangoldt(uint64_t n) {
  uint64_t p = prime_power_base(n);
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

mp::Real mangoldt_mp(uint64_t n) {
  uint64_t p = prime_power_base(n);
  return p == 0 ? mp::Real(0) : mp::log_ui(static_cast<unsigned long>(p));
}

MangoldtSieve::MangoldtSieve(uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit > (uint64_t{1} << 32)) throw std::length_error("sieve limit too large");
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<uint32_t>(i);
    for (uint64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
    }
  }
}

uint64_t MangoldtSieve::prime_power_base(uint64_t n) const {
  if (n == 0 || n > limit_) fail(ErrorKind::domain, "sieve query outside [1, limit]");
  if (n == 1) return 0;
  uint64_t p = spf_[n];
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

}  // namespace zdensity
