#pragma once

#include <map>

#include "entbounds/laurent.hpp"
#include "entbounds/rational.hpp"
#include "entbounds/real.hpp"

namespace entbounds {

/// Coefficients of the large-lambda Poisson bounds at order m:
///   beta_m(lambda) = sum_{k=1}^{2m-1} b(m,k) / lambda^k
///   r_m(lambda)    = sum_{k=m}^{2m}   a(m,k) / lambda^k
struct PoissonCoeffSet {
  int m = 0;
  std::map<int, Rational> a;
  std::map<int, Rational> b;

  /// beta_m as a Laurent polynomial in lambda.
  LaurentPoly beta() const;
  /// r_m as a Laurent polynomial in lambda.
  LaurentPoly r() const;

  friend bool operator==(const PoissonCoeffSet&, const PoissonCoeffSet&) = default;
};

/// Coefficients of the large-n relative-entropy bounds at order m; every entry is
/// a LogLaurent in q = 1 - p.
struct BinomialCoeffSet {
  int m = 0;
  std::map<int, LogLaurent> a_tilde;
  std::map<int, LogLaurent> b_tilde;

  friend bool operator==(const BinomialCoeffSet&, const BinomialCoeffSet&) = default;
};

/// Integrand of beta_m: sum_{j=3}^{2m+1} (-1)^(j-1) mu_j(s) / (j (j-1) s^j).
LaurentPoly poisson_beta_integrand(int m);
/// Integrand of r_m: mu_{2m+2}(s) / ((2m+1) s^(2m+2)).
LaurentPoly poisson_r_integrand(int m);

/// Memoized; throws std::invalid_argument for m < 1.
PoissonCoeffSet poisson_coeffs(int m);

/// Integrand of the binomial beta, split by power k of 1/n:
/// n sum_{j=3}^{2m+1} (-1)^j mu_j(n,s) / (j (j-1) (ns)^j) = sum_k n^-k f_k(s).
std::map<int, LaurentPoly> binomial_beta_integrand(int m);
/// Same split for n mu_{2m+2}(n,s) / ((2m+1) (ns)^(2m+2)).
std::map<int, LaurentPoly> binomial_r_integrand(int m);

/// Memoized; throws std::invalid_argument for m < 1.
BinomialCoeffSet binomial_coeffs(int m);

/// n * int_q^1 mu_2(n,s) / (2 (ns)^2) ds, which equals -(p + log q)/2.
LogLaurent relative_entropy_leading();

/// c(k) = sum_{j=0}^{k-1} (-1)^(k-1-j) C(k-1,j) log(j+1), k >= 2.
///
/// Evaluated at 4x and 8x the context precision; both must round to the same
/// value at ctx.bits, else the pair is doubled (up to 64x) before giving up
/// with PrecisionInsufficient.
Real c_coeff(int k, const PrecisionContext& ctx);

/// c~(k) = sum_{j=0}^{k-1} (-1)^(k-1-j) C(k-1,j) log(n-j), 2 <= k <= n. Same protocol as c_coeff.
Real c_tilde_coeff(long n, int k, const PrecisionContext& ctx);

/// Constants of the m = 1 binomial-entropy bound, each a LogLaurent in t = pq.
struct StirlingConstants {
  LogLaurent c1, c2, c3, c4;
};

StirlingConstants stirling_m1_constants();

}  // namespace entbounds
