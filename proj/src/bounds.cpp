#include "entbounds/bounds.hpp"

#include <array>
#include <exception>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entbounds/coefficients.hpp"
#include "entbounds/errors.hpp"
#include "entbounds/moments.hpp"

namespace entbounds {

namespace {

constexpr std::array<std::pair<BoundMethod, std::string_view>, 8> kMethodNames{{
    {BoundMethod::small_lambda, "small-lambda"},
    {BoundMethod::large_lambda, "large-lambda"},
    {BoundMethod::cover_thomas, "cover-thomas"},
    {BoundMethod::relative_entropy, "relative-entropy"},
    {BoundMethod::binomial_corollary, "binomial-corollary"},
    {BoundMethod::binomial_stirling, "binomial-stirling"},
    {BoundMethod::expected_log_poisson, "expected-log-poisson"},
    {BoundMethod::expected_log_binomial, "expected-log-binomial"},
}};

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("order m must be at least 1");
}

void require_open_probability(long n, const Real& p) {
  if (n < 1) throw DomainError("n must be a positive integer");
  if (p <= 0 || p >= 1) throw DomainError("p must lie in (0, 1)");
}

Real widen(const Real& x, long bits) { return x.round_to(x.bits() > bits ? x.bits() : bits); }

// sum_{k>=1} values[k-1] x^k by Horner.
Real horner_no_constant(const std::vector<Real>& values, const Real& x) {
  Real acc(x.bits());
  for (auto it = values.rbegin(); it != values.rend(); ++it) acc = (acc + *it) * x;
  return acc;
}

// sum_k f_k(q) / n^k over the keys of `coeffs`.
Real series_in_inverse_n(const std::map<int, LogLaurent>& coeffs, const Real& q, const Real& inv_n) {
  const int top = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  std::vector<Real> values(static_cast<size_t>(top), Real(q.bits()));
  for (const auto& [k, f] : coeffs) values[static_cast<size_t>(k - 1)] = f.eval(q);
  return horner_no_constant(values, inv_n);
}

Real log_factorial(long n, long bits) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return log(Real::of(f, bits));
}

}  // namespace

std::string_view method_name(BoundMethod method) {
  for (const auto& [m, name] : kMethodNames)
    if (m == method) return name;
  return "unknown";
}

std::optional<BoundMethod> parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames)
    if (n == name) return m;
  return std::nullopt;
}

BoundReport BoundReport::make(Interval interval, int m, BoundMethod method, std::optional<Real> gap) {
  Real mid = interval.midpoint();
  Real g = gap ? std::move(*gap) : interval.width();
  return BoundReport{std::move(interval), std::move(mid), std::move(g), m, method};
}

BoundReport entropy_poisson_small(const Real& lambda, int m, const PrecisionContext& ctx) {
  ctx.validate();
  require_order(m);
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  const long bits = ctx.bits;
  if (lambda.is_zero()) {
    return BoundReport::make(Interval(Real(bits), Real(bits)), m, BoundMethod::small_lambda);
  }
  const Real x = widen(lambda, bits);
  auto term_coeff = [&](int k) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return c_coeff(k, ctx) / Real::of(fact, bits);
  };
  Real acc(bits);
  for (int k = 2 * m; k >= 2; --k) acc = acc * x + term_coeff(k);
  const Real base = x - x * log(x);
  const Real upper = base + acc * x * x;
  const Real last = term_coeff(2 * m + 1) * pow(x, 2 * m + 1);
  return BoundReport::make(Interval(upper + last, upper), m, BoundMethod::small_lambda, -last);
}

BoundReport entropy_poisson_large(const Real& lambda, int m, const PrecisionContext& ctx) {
  require_order(m);
  return entropy_poisson_large(lambda, poisson_coeffs(m), ctx);
}

BoundReport entropy_poisson_large(const Real& lambda, const PoissonCoeffSet& coeffs, const PrecisionContext& ctx) {
  ctx.validate();
  if (lambda <= 0) throw DomainError("large-lambda bound requires lambda > 0");
  const Real x = widen(lambda, ctx.bits);
  const Real base = log(2 * Real::pi(x.bits()) * x) / 2 + Real::of(1, x.bits()) / 2;
  const Real upper = base + coeffs.beta().eval(x);
  Real gap = coeffs.r().eval(x);
  return BoundReport::make(Interval(upper - gap, upper), coeffs.m, BoundMethod::large_lambda, gap);
}

Real entropy_poisson_ct(const Real& lambda, const PrecisionContext& ctx) {
  ctx.validate();
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  const Real x = widen(lambda, ctx.bits);
  const Real two_pi_e = 2 * Real::pi(x.bits()) * exp(Real::of(1, x.bits()));
  return log(two_pi_e * (x + Real::of(Rational(1, 12), x.bits()))) / 2;
}

Real relative_entropy_exact(long n, const Real& p, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw DomainError("n must be a positive integer");
  if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1]");
  const Real x = widen(p, ctx.bits);
  const Real q = 1 - x;
  Real acc(x.bits());
  for (long k = n; k >= 2; --k) {
    const Real ck = Real::of(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), x.bits()) *
                    c_tilde_coeff(n, static_cast<int>(k), ctx);
    acc = acc * x + ck;
  }
  return (Real::of(n, x.bits()) * (x + xlogx(q)) + acc * x * x).round_to(ctx.bits);
}

BoundReport relative_entropy_bounds(long n, const Real& p, int m, const PrecisionContext& ctx) {
  ctx.validate();
  require_order(m);
  require_open_probability(n, p);
  const Real x = widen(p, ctx.bits);
  const Real q = 1 - x;
  if (q <= 0) throw DomainError("q = 1 - p evaluates to zero");
  const BinomialCoeffSet coeffs = binomial_coeffs(m);
  const Real inv_n = 1 / Real::of(n, x.bits());
  const Real lower = relative_entropy_leading().eval(q) + series_in_inverse_n(coeffs.b_tilde, q, inv_n);
  Real gap = series_in_inverse_n(coeffs.a_tilde, q, inv_n);
  return BoundReport::make(Interval(lower, lower + gap), m, BoundMethod::relative_entropy, gap);
}

BoundReport entropy_binomial_bounds(long n, const Real& p, int m, const PrecisionContext& ctx) {
  ctx.validate();
  require_open_probability(n, p);
  const Real x = widen(p, ctx.bits);
  const Real q = 1 - x;
  const BoundReport dp = relative_entropy_bounds(n, x, m, ctx);
  const BoundReport dq = relative_entropy_bounds(n, q, m, ctx);
  const Real nw = Real::of(n, x.bits());
  const Real stirling_part = log_factorial(n, x.bits()) - nw * log(nw) + nw;
  const Real upper = stirling_part - (dp.interval.lower() + dq.interval.lower());
  const Real lower = stirling_part - (dp.interval.upper() + dq.interval.upper());
  return BoundReport::make(Interval(lower, upper), m, BoundMethod::binomial_corollary);
}

BoundReport entropy_binomial_stirling_m1(long n, const Real& p, const PrecisionContext& ctx) {
  ctx.validate();
  require_open_probability(n, p);
  const Real x = widen(p, ctx.bits);
  const Real t = x * (1 - x);
  const StirlingConstants c = stirling_m1_constants();
  const Real nw = Real::of(n, x.bits());
  const Real inv_n = 1 / nw;
  const Real base = log(2 * Real::pi(x.bits()) * nw * t) / 2 + Real::of(1, x.bits()) / 2;
  std::vector<Real> lower_terms;
  lower_terms.push_back(c.c1.eval(t));
  lower_terms.push_back(c.c2.eval(t));
  lower_terms.push_back(c.c3.eval(t));
  const Real lower = base + horner_no_constant(lower_terms, inv_n);
  const Real upper = base + c.c4.eval(t) * inv_n;
  return BoundReport::make(Interval(lower, upper), 1, BoundMethod::binomial_stirling);
}

BoundReport expected_log_poisson_bounds(const Real& s, int m, const PrecisionContext& ctx) {
  ctx.validate();
  require_order(m);
  if (s <= 0) throw DomainError("s must be positive");
  const Real x = widen(s, ctx.bits);
  LaurentPoly series;
  for (int k = 2; k <= 2 * m + 1; ++k) {
    const long sign = k % 2 == 0 ? 1 : -1;
    series += Rational(sign, static_cast<long>(k) * (k - 1)) *
              LaurentPoly(poisson_central_moment(k).poly).shifted(-k);
  }
  const LaurentPoly remainder =
      Rational(1, 2 * m + 1) * LaurentPoly(poisson_central_moment(2 * m + 2).poly).shifted(-(2 * m + 2));
  const Real lower = log(x) + series.eval(x);
  Real gap = remainder.eval(x);
  return BoundReport::make(Interval(lower, lower + gap), m, BoundMethod::expected_log_poisson, gap);
}

BoundReport expected_log_binomial_bounds(long n, const Real& s, int m, const PrecisionContext& ctx) {
  ctx.validate();
  require_order(m);
  require_open_probability(n, s);
  const Real x = widen(s, ctx.bits);
  const Rational nr(n);
  const Real ns = Real::of(n, x.bits()) * x;
  auto scaled_moment = [&](int k) {
    return binomial_central_moment(k).poly.at_n(nr).eval(x) / pow(ns, k);
  };
  Real lower(x.bits());
  for (int k = 2; k <= 2 * m + 1; ++k) {
    const Real term = scaled_moment(k) / (static_cast<long>(k) * (k - 1));
    if (k % 2 == 0) lower += term;
    else lower -= term;
  }
  Real gap = scaled_moment(2 * m + 2) / (2 * m + 1);
  return BoundReport::make(Interval(lower, lower + gap), m, BoundMethod::expected_log_binomial, gap);
}

BoundReport best_interval(const std::function<BoundReport(int m)>& bound, int max_m) {
  if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
  std::optional<BoundReport> best;
  std::exception_ptr first_error;
  for (int m = 1; m <= max_m; ++m) {
    try {
      BoundReport r = bound(m);
      if (!best || r.gap < best->gap) best = std::move(r);
    } catch (const DomainError&) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (!best) std::rethrow_exception(first_error);
  return *best;
}

}  // namespace entbounds
