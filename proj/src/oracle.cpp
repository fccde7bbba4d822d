#include "entbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "entbounds/errors.hpp"

namespace entbounds {

namespace {

constexpr long kGuardBits = 64;
constexpr long kMaxTerms = 50'000'000;

void require_probability(const Real& p) {
  if (p < 0 || p > 1) throw DomainError("probability outside [0, 1]");
}

void require_n(long n) {
  if (n < 1) throw DomainError("n must be a positive integer");
}

}  // namespace

OracleValue poisson_expectation(const Real& s, const PrecisionContext& ctx, const PoissonTerm& g) {
  ctx.validate();
  if (s < 0) throw DomainError("Poisson mean must be non-negative");
  const long wp = ctx.bits + kGuardBits;
  if (s.is_zero()) {
    return {g(0, wp).round_to(ctx.bits), {1, Real(ctx.bits), Real(ctx.bits)}};
  }

  const double sd = s.to_double();
  long limit = static_cast<long>(
      std::ceil(sd + 12.0 * std::sqrt(sd * static_cast<double>(ctx.bits)) + static_cast<double>(ctx.bits)));
  const Real sw = s.round_to(std::max(wp, s.bits()));
  const Real log_s = log(sw);
  const Real tol = Real::of(ctx.target_rel_err, wp);

  Real log_pmf = -sw;
  Real sum(wp);
  Real abs_sum(wp);
  Real last(wp);
  std::optional<Real> pending;
  long j = 0;

  auto next_term = [&]() {
    Real t = exp(log_pmf) * g(j, wp);
    log_pmf += log_s - log(Real::of(j + 1, wp));
    return t;
  };

  for (;;) {
    while (j < limit) {
      Real t = pending ? std::move(*pending) : next_term();
      pending.reset();
      sum += t;
      abs_sum += abs(t);
      last = std::move(t);
      ++j;
    }
    pending = next_term();
    if (!abs_sum.is_finite() || !pending->is_finite()) {
      throw PrecisionInsufficient("Poisson series produced a non-finite term");
    }
    const Real tail = 2 * abs(*pending);
    const bool shrinking = last.is_zero() ? pending->is_zero() : 2 * abs(*pending) <= abs(last);
    if (shrinking && tail <= tol * abs_sum) {
      Real rel = abs_sum.is_zero() ? Real(wp) : tail / abs_sum;
      return {sum.round_to(ctx.bits), {limit, tail.round_to(ctx.bits), rel.round_to(ctx.bits)}};
    }
    if (limit >= kMaxTerms) {
      throw PrecisionInsufficient("Poisson series did not reach the target accuracy within " +
                                  std::to_string(kMaxTerms) + " terms");
    }
    // The pending term was produced for index j; it is consumed first.
    limit = std::min(kMaxTerms, limit + std::max<long>(16, limit / 4));
  }
}

std::vector<Real> binomial_pmf(long n, const Real& p, long bits) {
  require_n(n);
  require_probability(p);
  std::vector<Real> pmf(static_cast<size_t>(n) + 1, Real(bits));
  const Real pw = p.round_to(std::max(bits, p.bits()));
  const Real q = 1 - pw;
  if (pw.is_zero()) {
    pmf.front() = Real::of(1, bits);
    return pmf;
  }
  if (q.is_zero()) {
    pmf.back() = Real::of(1, bits);
    return pmf;
  }
  const Real log_p = log(pw);
  const Real log_q = log(q);
  Real log_binom(bits);
  for (long k = 0; k <= n; ++k) {
    pmf[static_cast<size_t>(k)] = exp(log_binom + log_p * k + log_q * (n - k)).round_to(bits);
    if (k < n) log_binom += log(Real::of(n - k, bits)) - log(Real::of(k + 1, bits));
  }
  return pmf;
}

OracleValue poisson_entropy_oracle(const Real& lambda, const PrecisionContext& ctx) {
  ctx.validate();
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (lambda.is_zero()) return {Real(ctx.bits), {0, Real(ctx.bits), Real(ctx.bits)}};

  // Tighten the series target so that the relative error holds for H, not for E[log N!].
  const double ld = lambda.to_double();
  PrecisionContext series_ctx = ctx;
  series_ctx.target_rel_err = ctx.target_rel_err / std::max(1.0, ld * (1.0 + std::abs(std::log(ld))));

  Real log_factorial(ctx.bits + kGuardBits);
  OracleValue e = poisson_expectation(lambda, series_ctx, [&](long j, long bits) {
    if (j > 0) log_factorial += log(Real::of(j, bits));
    return log_factorial;
  });

  const long wp = ctx.bits + kGuardBits;
  const Real lw = lambda.round_to(std::max(wp, lambda.bits()));
  Real h = lw - lw * log(lw) + e.value.round_to(wp);
  Real rel = h.is_zero() ? Real(ctx.bits) : e.receipt.tail_bound / abs(h);
  return {h.round_to(ctx.bits), {e.receipt.terms_used, e.receipt.tail_bound, rel.round_to(ctx.bits)}};
}

Real binomial_entropy_oracle(long n, const Real& p, const PrecisionContext& ctx) {
  ctx.validate();
  const long wp = ctx.bits + kGuardBits;
  Real h(wp);
  for (const Real& pk : binomial_pmf(n, p, wp)) h -= xlogx(pk);
  return h.round_to(ctx.bits);
}

Real relative_entropy_oracle(long n, const Real& p, const PrecisionContext& ctx) {
  ctx.validate();
  const long wp = ctx.bits + kGuardBits;
  const std::vector<Real> pmf = binomial_pmf(n, p, wp);
  const Real pw = p.round_to(std::max(wp, p.bits()));
  const Real q = 1 - pw;

  Real falling_log(wp);  // log(n! / (n-k)!)
  Real expectation(wp);
  for (long k = 0; k <= n; ++k) {
    expectation += pmf[static_cast<size_t>(k)] * falling_log;
    if (k < n) falling_log += log(Real::of(n - k, wp));
  }
  const Real nw = Real::of(n, wp);
  Real d = nw * (pw + xlogx(q)) - nw * pw * log(nw) + expectation;
  return d.round_to(ctx.bits);
}

OracleValue expected_log_poisson(const Real& s, const PrecisionContext& ctx) {
  if (s <= 0) throw DomainError("s must be positive");
  return poisson_expectation(s, ctx, [](long j, long bits) { return log(Real::of(j + 1, bits)); });
}

Real expected_log_binomial(long n, const Real& s, const PrecisionContext& ctx) {
  ctx.validate();
  require_n(n);
  if (s <= 0 || s >= 1) throw DomainError("s must lie in (0, 1)");
  const long wp = ctx.bits + kGuardBits;
  Real value(wp);
  if (n > 1) {
    const std::vector<Real> pmf = binomial_pmf(n - 1, s, wp);
    for (long k = 0; k < n; ++k) value += pmf[static_cast<size_t>(k)] * log(Real::of(k + 1, wp));
  }
  value -= log(Real::of(n, wp) * s.round_to(std::max(wp, s.bits())));
  return value.round_to(ctx.bits);
}

}  // namespace entbounds
