#include "bernoulli.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zdensity {
namespace {

struct Cache {
  std::mutex mu;
  std::vector<mpq_class> b2k;       // index k: B_{2k}, k >= 1 (slot 0 unused)
  std::vector<mpq_class> b2k_fact;  // index k: B_{2k}/(2k)!
};

Cache& cache() {
  static Cache c;
  return c;
}

// Tangent numbers T_1..T_n (Brent & Harvey), then
// B_{2k} = (-1)^{k-1} 2k T_k / (2^{2k} (2^{2k} - 1)).
void fill(Cache& c, int n) {
  std::vector<mpz_class> tangent(static_cast<size_t>(n) + 1);
  tangent[1] = 1;
  for (int k = 2; k <= n; ++k) tangent[k] = (k - 1) * tangent[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];
  }

  c.b2k.assign(static_cast<size_t>(n) + 1, mpq_class(0));
  c.b2k_fact.assign(static_cast<size_t>(n) + 1, mpq_class(0));
  mpz_class factorial = 1;
  for (int k = 1; k <= n; ++k) {
    factorial *= (2 * k - 1);
    factorial *= (2 * k);
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    mpq_class b(mpz_class(2 * k) * tangent[k], four_k * (four_k - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    c.b2k[k] = b;
    mpq_class bf(b.get_num(), b.get_den() * factorial);
    bf.canonicalize();
    c.b2k_fact[k] = bf;
  }
}

mpq_class lookup(std::vector<mpq_class> Cache::*table, int k) {
  if (k < 1) throw std::invalid_argument("Bernoulli index must be >= 1");
  Cache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  int have = static_cast<int>(c.b2k.size()) - 1;
  if (k > have) fill(c, std::max(k, std::max(64, 2 * have)));
  return (c.*table)[static_cast<size_t>(k)];
}

}  // namespace

mp::Real bernoulli_over_factorial(int k) {
  mpq_class q = lookup(&Cache::b2k_fact, k);
  mp::Real r;
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string bernoulli_exact(int k) { return lookup(&Cache::b2k, k).get_str(); }

}  // namespace zdensity
