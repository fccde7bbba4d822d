#pragma once

#include "entbounds/polynomial.hpp"
#include "entbounds/rational.hpp"
#include "entbounds/real.hpp"

namespace entbounds {

/// mu_k(s) = E[(N_s - s)^k] as a polynomial in s.
struct PoissonMoment {
  int k = 0;
  UniPoly poly;
};

/// mu_k(n, s) = E[(B_{n,s} - ns)^k] as a polynomial in s with coefficients in n.
struct BinomialMoment {
  int k = 0;
  BiPoly poly;
};

/// mu_k(s) = s * sum_{j=0}^{k-2} C(k-1, j) mu_j(s), memoized. Thread-safe.
PoissonMoment poisson_central_moment(int k);

/// mu_{k+1} = s(1-s) (n k mu_{k-1} + d mu_k / ds), mu_0 = 1, mu_1 = 0; memoized. Thread-safe.
BinomialMoment binomial_central_moment(int k);

/// Direct series sum_j e^-s s^j / j! (j - s)^k.
Real moment_oracle_poisson(int k, const Rational& s, const PrecisionContext& ctx);

/// Exact finite sum_j C(n,j) s^j (1-s)^(n-j) (j - ns)^k.
Rational moment_oracle_binomial(int k, long n, const Rational& s);

}  // namespace entbounds
