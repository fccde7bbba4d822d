#include "entbounds/coefficients.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "entbounds/errors.hpp"
#include "entbounds/moments.hpp"

namespace entbounds {

namespace {

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("order m must be at least 1, got " + std::to_string(m));
}

// c * mu_j(s) / s^j
LaurentPoly poisson_term(int j, const Rational& c) {
  return c * LaurentPoly(poisson_central_moment(j).poly).shifted(-j);
}

// c * n * mu_j(n,s) / (ns)^j, accumulated into out[k] where k is the power of 1/n.
void add_binomial_term(std::map<int, LaurentPoly>& out, int j, const Rational& c) {
  const BiPoly mu = binomial_central_moment(j).poly;
  for (int b = 0; b <= mu.degree_s(); ++b) {
    const UniPoly n_coeffs = mu.coeff_s(b);
    for (int a = 0; a <= n_coeffs.degree(); ++a) {
      const Rational coeff = n_coeffs.coeff(a);
      if (coeff.is_zero()) continue;
      out[j - 1 - a].add_term(b - j, c * coeff);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
}

template <typename Set>
class Memo {
 public:
  Set get(int m, const std::function<Set(int)>& build) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(m);
    if (it == table_.end()) it = table_.emplace(m, build(m)).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, Set> table_;
};

std::map<int, Rational> read_tail_coeffs(const LaurentPoly& integrand, int lo, int hi) {
  const LaurentPoly integral = laurent_integrate_tail(integrand);
  std::map<int, Rational> out;
  for (int k = lo; k <= hi; ++k) out[k] = integral.coeff(-k);
  return out;
}

std::map<int, LogLaurent> integrate_by_power(const std::map<int, LaurentPoly>& parts, int lo, int hi) {
  std::map<int, LogLaurent> out;
  for (int k = lo; k <= hi; ++k) {
    auto it = parts.find(k);
    out[k] = it == parts.end() ? LogLaurent() : loglog_integrate_interval(it->second);
  }
  return out;
}

// sum_{j=0}^{k-1} (-1)^(k-1-j) C(k-1,j) log(point(j)), with the 4x/8x agreement check.
Real stable_alternating_log_sum(int k, const std::function<long(int)>& point, const PrecisionContext& ctx) {
  ctx.validate();
  auto evaluate = [&](long bits) {
    Real sum(bits);
    for (int j = 0; j < k; ++j) {
      const Real term = Real::of(binomial(static_cast<unsigned long>(k - 1), static_cast<unsigned long>(j)), bits) *
                        log(Real::of(point(j), bits));
      if ((k - 1 - j) % 2 == 0) sum += term;
      else sum -= term;
    }
    return sum.round_to(ctx.bits);
  };
  for (long factor = 4; factor <= 64; factor *= 2) {
    Real lo = evaluate(factor * ctx.bits);
    if (lo == evaluate(2 * factor * ctx.bits)) return lo;
  }
  throw PrecisionInsufficient("alternating log sum did not stabilise for k = " + std::to_string(k));
}

}  // namespace

LaurentPoly PoissonCoeffSet::beta() const {
  LaurentPoly p;
  for (const auto& [k, c] : b) p.add_term(-k, c);
  return p;
}

LaurentPoly PoissonCoeffSet::r() const {
  LaurentPoly p;
  for (const auto& [k, c] : a) p.add_term(-k, c);
  return p;
}

LaurentPoly poisson_beta_integrand(int m) {
  require_order(m);
  LaurentPoly f;
  for (int j = 3; j <= 2 * m + 1; ++j) {
    const long sign = (j - 1) % 2 == 0 ? 1 : -1;
    f += poisson_term(j, Rational(sign, static_cast<long>(j) * (j - 1)));
  }
  return f;
}

LaurentPoly poisson_r_integrand(int m) {
  require_order(m);
  return poisson_term(2 * m + 2, Rational(1, 2 * m + 1));
}

PoissonCoeffSet poisson_coeffs(int m) {
  require_order(m);
  static Memo<PoissonCoeffSet> memo;
  return memo.get(m, [](int order) {
    PoissonCoeffSet set;
    set.m = order;
    set.b = read_tail_coeffs(poisson_beta_integrand(order), 1, 2 * order - 1);
    set.a = read_tail_coeffs(poisson_r_integrand(order), order, 2 * order);
    return set;
  });
}

std::map<int, LaurentPoly> binomial_beta_integrand(int m) {
  require_order(m);
  std::map<int, LaurentPoly> parts;
  for (int j = 3; j <= 2 * m + 1; ++j) {
    const long sign = j % 2 == 0 ? 1 : -1;
    add_binomial_term(parts, j, Rational(sign, static_cast<long>(j) * (j - 1)));
  }
  return parts;
}

std::map<int, LaurentPoly> binomial_r_integrand(int m) {
  require_order(m);
  std::map<int, LaurentPoly> parts;
  add_binomial_term(parts, 2 * m + 2, Rational(1, 2 * m + 1));
  return parts;
}

BinomialCoeffSet binomial_coeffs(int m) {
  require_order(m);
  static Memo<BinomialCoeffSet> memo;
  return memo.get(m, [](int order) {
    BinomialCoeffSet set;
    set.m = order;
    set.b_tilde = integrate_by_power(binomial_beta_integrand(order), 1, 2 * order - 1);
    set.a_tilde = integrate_by_power(binomial_r_integrand(order), order, 2 * order);
    return set;
  });
}

LogLaurent relative_entropy_leading() {
  std::map<int, LaurentPoly> parts;
  add_binomial_term(parts, 2, Rational(1, 2));
  // mu_2(n,s) = n s (1-s) is linear in n, so everything lands at n^0.
  return loglog_integrate_interval(parts[0]);
}

Real c_coeff(int k, const PrecisionContext& ctx) {
  if (k < 2) throw std::invalid_argument("c(k) requires k >= 2");
  using Key = std::pair<int, long>;
  static std::mutex mutex;
  static std::map<Key, Real> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({k, ctx.bits}); it != cache.end()) return it->second;
  }
  Real value = stable_alternating_log_sum(k, [](int j) { return static_cast<long>(j) + 1; }, ctx);
  std::lock_guard lock(mutex);
  return cache.emplace(Key{k, ctx.bits}, std::move(value)).first->second;
}

Real c_tilde_coeff(long n, int k, const PrecisionContext& ctx) {
  if (k < 2 || k > n) throw std::invalid_argument("c~(k) requires 2 <= k <= n");
  using Key = std::tuple<long, int, long>;
  static std::mutex mutex;
  static std::map<Key, Real> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, k, ctx.bits}); it != cache.end()) return it->second;
  }
  Real value = stable_alternating_log_sum(k, [n](int j) { return n - j; }, ctx);
  std::lock_guard lock(mutex);
  return cache.emplace(Key{n, k, ctx.bits}, std::move(value)).first->second;
}

StirlingConstants stirling_m1_constants() {
  const BinomialCoeffSet set = binomial_coeffs(1);
  const LogLaurent sym_b11 = symmetrize_pq(set.b_tilde.at(1));
  const LogLaurent sym_a11 = symmetrize_pq(set.a_tilde.at(1));
  const LogLaurent sym_a12 = symmetrize_pq(set.a_tilde.at(2));
  // log n! - n log n + n - log(2 pi n)/2 lies in (1/(12n) - 1/(360 n^3), 1/(12n)).
  const LogLaurent twelfth(LaurentPoly::monomial(Rational(1, 12), 0), Rational());
  StirlingConstants c;
  c.c4 = twelfth - sym_b11;
  c.c1 = c.c4 - sym_a11;
  c.c2 = Rational(-1) * sym_a12;
  c.c3 = LogLaurent(LaurentPoly::monomial(Rational(-1, 360), 0), Rational());
  return c;
}

}  // namespace entbounds
