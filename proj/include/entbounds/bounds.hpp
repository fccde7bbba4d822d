#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "entbounds/real.hpp"

namespace entbounds {

enum class BoundMethod {
  small_lambda,
  large_lambda,
  cover_thomas,
  relative_entropy,
  binomial_corollary,
  binomial_stirling,
  expected_log_poisson,
  expected_log_binomial,
};

std::string_view method_name(BoundMethod method);
std::optional<BoundMethod> parse_method(std::string_view name);

struct BoundReport {
  Interval interval;
  Real midpoint;
  Real gap;
  int m = 0;
  BoundMethod method = BoundMethod::large_lambda;

  /// gap defaults to upper - lower; pass the analytic gap when it is known in closed form.
  static BoundReport make(Interval interval, int m, BoundMethod method, std::optional<Real> gap = {});
};

/// Small-lambda sandwich on H(lambda), valid for every lambda >= 0:
///   lower = lambda - lambda log lambda + sum_{k=2}^{2m+1} c(k) lambda^k / k!
///   upper = same sum stopped at 2m.
BoundReport entropy_poisson_small(const Real& lambda, int m, const PrecisionContext& ctx);

/// Large-lambda sandwich on H(lambda):
///   upper = log(2 pi lambda)/2 + 1/2 + beta_m(lambda),  lower = upper - r_m(lambda).
/// The reported gap is r_m(lambda) itself. Throws DomainError unless lambda > 0.
BoundReport entropy_poisson_large(const Real& lambda, int m, const PrecisionContext& ctx);

struct PoissonCoeffSet;
/// Same evaluation with a caller-supplied coefficient set.
BoundReport entropy_poisson_large(const Real& lambda, const PoissonCoeffSet& coeffs, const PrecisionContext& ctx);

/// Classical upper bound log(2 pi e (lambda + 1/12)) / 2.
Real entropy_poisson_ct(const Real& lambda, const PrecisionContext& ctx);

/// D(n, p) = n(p + q log q) + sum_{k=2}^n C(n,k) c~(k) p^k, exact for p in [0, 1].
Real relative_entropy_exact(long n, const Real& p, const PrecisionContext& ctx);

/// lower = -(p + log q)/2 + sum_k b~(m,k;p)/n^k, upper = lower + sum_k a~(m,k;p)/n^k.
/// Throws DomainError unless p is in (0, 1).
BoundReport relative_entropy_bounds(long n, const Real& p, int m, const PrecisionContext& ctx);

/// H(n,p) = log n! - n log n + n - D(n,p) - D(n,q) with both D's replaced by their intervals.
BoundReport entropy_binomial_bounds(long n, const Real& p, int m, const PrecisionContext& ctx);

/// m = 1 bound in closed form:
///   log(2 pi n pq)/2 + 1/2 + C1/n + C2/n^2 + C3/n^3 <= H(n,p) <= log(2 pi n pq)/2 + 1/2 + C4/n.
BoundReport entropy_binomial_stirling_m1(long n, const Real& p, const PrecisionContext& ctx);

/// Bounds on E[log(N_s + 1)].
BoundReport expected_log_poisson_bounds(const Real& s, int m, const PrecisionContext& ctx);

/// Bounds on E[log((B_{n-1,s} + 1) / (ns))].
BoundReport expected_log_binomial_bounds(long n, const Real& s, int m, const PrecisionContext& ctx);

/// Evaluates `bound` for m = 1..max_m and returns the report with the smallest gap.
/// Orders that throw DomainError are skipped; rethrows if all of them do.
BoundReport best_interval(const std::function<BoundReport(int m)>& bound, int max_m = 6);

}  // namespace entbounds
