#include "entbounds/moments.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "entbounds/errors.hpp"
#include "entbounds/oracle.hpp"

namespace entbounds {

namespace {

// Deques keep references stable while the caches grow.
struct PoissonCache {
  std::mutex mutex;
  std::deque<UniPoly> table{UniPoly::constant(1), UniPoly()};
};

struct BinomialCache {
  std::mutex mutex;
  std::deque<BiPoly> table{BiPoly::from_s(UniPoly::constant(1)), BiPoly()};
};

PoissonCache& poisson_cache() {
  static PoissonCache cache;
  return cache;
}

BinomialCache& binomial_cache() {
  static BinomialCache cache;
  return cache;
}

void require_order(int k) {
  if (k < 0) throw std::invalid_argument("moment order must be non-negative");
}

}  // namespace

PoissonMoment poisson_central_moment(int k) {
  require_order(k);
  auto& cache = poisson_cache();
  std::lock_guard lock(cache.mutex);
  auto& mu = cache.table;
  for (int order = static_cast<int>(mu.size()); order <= k; ++order) {
    UniPoly sum;
    for (int j = 0; j <= order - 2; ++j) {
      sum += Rational(binomial(static_cast<unsigned long>(order - 1), static_cast<unsigned long>(j))) *
             mu[static_cast<size_t>(j)];
    }
    mu.push_back(sum.shifted(1));
  }
  return {k, mu[static_cast<size_t>(k)]};
}

BinomialMoment binomial_central_moment(int k) {
  require_order(k);
  auto& cache = binomial_cache();
  std::lock_guard lock(cache.mutex);
  auto& mu = cache.table;
  const BiPoly pq = BiPoly::from_s(UniPoly({0, 1, -1}));
  for (int order = static_cast<int>(mu.size()); order <= k; ++order) {
    const int prev = order - 1;
    const BiPoly inner =
        Rational(prev) * mu[static_cast<size_t>(prev - 1)].times_n() + mu[static_cast<size_t>(prev)].derivative_s();
    mu.push_back(pq * inner);
  }
  return {k, mu[static_cast<size_t>(k)]};
}

Real moment_oracle_poisson(int k, const Rational& s, const PrecisionContext& ctx) {
  require_order(k);
  if (s.sign() <= 0) throw DomainError("Poisson mean must be positive");
  const long wp = ctx.bits + 64;
  const Real sw = Real::of(s, wp);
  return poisson_expectation(sw, ctx, [&](long j, long bits) {
           return pow(Real::of(j, bits) - sw, k);
         }).value;
}

Rational moment_oracle_binomial(int k, long n, const Rational& s) {
  require_order(k);
  if (n < 1) throw DomainError("n must be positive");
  if (s.sign() <= 0 || s >= Rational(1)) throw DomainError("s must lie in (0, 1)");
  const Rational q = Rational(1) - s;
  const Rational mean = Rational(n) * s;
  Rational total;
  for (long j = 0; j <= n; ++j) {
    const Rational weight = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                            pow(s, static_cast<unsigned>(j)) * pow(q, static_cast<unsigned>(n - j));
    total += weight * pow(Rational(j) - mean, static_cast<unsigned>(k));
  }
  return total;
}

}  // namespace entbounds
