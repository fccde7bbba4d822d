#pragma once

#include <functional>
#include <vector>

#include "entbounds/real.hpp"

namespace entbounds {

/// Evidence that a truncated series met its accuracy target.
struct TruncationReceipt {
  long terms_used = 0;
  Real tail_bound;
  /// tail_bound relative to the quantity the series was asked for.
  Real rel_err_bound;
};

struct OracleValue {
  Real value;
  TruncationReceipt receipt;
};

/// Term function for poisson_expectation: receives j = 0, 1, 2, ... in order,
/// exactly once each, plus the working precision.
using PoissonTerm = std::function<Real(long j, long bits)>;

/// E[g(N_s)] for N_s ~ Poisson(s), summed in log-space pmf form.
///
/// The series is cut at J = ceil(s + 12 sqrt(s * bits) + bits). Truncation is
/// accepted when the first neglected term t_J satisfies |t_J| <= |t_{J-1}| / 2
/// and 2 |t_J| <= target_rel_err * sum_{j<J} |t_j|; otherwise J grows. Throws
/// PrecisionInsufficient if J would exceed 5e7.
OracleValue poisson_expectation(const Real& s, const PrecisionContext& ctx, const PoissonTerm& g);

/// Binomial(n, p) pmf evaluated as exp(log C(n,k) + k log p + (n-k) log q), k = 0..n.
std::vector<Real> binomial_pmf(long n, const Real& p, long bits);

/// H(lambda) = lambda - lambda log lambda + E[log N_lambda!]; H(0) = 0.
OracleValue poisson_entropy_oracle(const Real& lambda, const PrecisionContext& ctx);

/// -sum P(k) log P(k) for B(n, p).
Real binomial_entropy_oracle(long n, const Real& p, const PrecisionContext& ctx);

/// D(B(n,p) || Poisson(np)) = n(p + q log q) - np log n + E[log(n!/(n - B)!)].
Real relative_entropy_oracle(long n, const Real& p, const PrecisionContext& ctx);

/// E[log(N_s + 1)], s > 0.
OracleValue expected_log_poisson(const Real& s, const PrecisionContext& ctx);

/// E[log((B_{n-1,s} + 1) / (n s))], s in (0, 1).
Real expected_log_binomial(long n, const Real& s, const PrecisionContext& ctx);

}  // namespace entbounds
