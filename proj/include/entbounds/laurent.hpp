#pragma once

#include <map>
#include <string>

#include "entbounds/polynomial.hpp"
#include "entbounds/rational.hpp"
#include "entbounds/real.hpp"

namespace entbounds {

/// Finite sum of c_e x^e with integer (possibly negative) exponents. Zero
/// coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Terms& terms);
  explicit LaurentPoly(const UniPoly& p);
  static LaurentPoly monomial(const Rational& c, int exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  void add_term(int exponent, const Rational& c);

  Rational eval(const Rational& x) const;
  /// Horner in x for the non-negative part and in 1/x for the rest.
  Real eval(const Real& x) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string str(const std::string& var = "x") const;

 private:
  Terms terms_;
};

/// sum_j c_j x^j + c_log * log(x), defined for x in (0, 1].
class LogLaurent {
 public:
  LogLaurent() = default;
  LogLaurent(LaurentPoly laurent, Rational log_coeff);

  const LaurentPoly& laurent() const { return laurent_; }
  const Rational& log_coeff() const { return log_coeff_; }
  bool is_zero() const { return laurent_.is_zero() && log_coeff_.is_zero(); }

  /// Throws DomainError unless 0 < x <= 1.
  Real eval(const Real& x) const;

  LogLaurent& operator+=(const LogLaurent& rhs);
  LogLaurent& operator-=(const LogLaurent& rhs);
  friend LogLaurent operator+(LogLaurent a, const LogLaurent& b) { return a += b; }
  friend LogLaurent operator-(LogLaurent a, const LogLaurent& b) { return a -= b; }
  friend LogLaurent operator*(const Rational& c, const LogLaurent& f);
  friend bool operator==(const LogLaurent& a, const LogLaurent& b) = default;

  std::string str(const std::string& var = "q") const;

 private:
  LaurentPoly laurent_;
  Rational log_coeff_;
};

/// Exact integral over [lambda, inf) of f(s) ds, as a Laurent polynomial in lambda.
/// Each term s^-k (k >= 2) maps to lambda^-(k-1)/(k-1). Throws NonIntegrableTail
/// if any exponent is >= -1.
LaurentPoly laurent_integrate_tail(const LaurentPoly& f);

/// Exact integral over [q, 1] of f(s) ds, as a LogLaurent in q. The s^-1 term
/// contributes -log q; s^e contributes (1 - q^(e+1))/(e+1) otherwise.
LogLaurent loglog_integrate_interval(const LaurentPoly& f);

/// Given f in the variable q, returns g in t = p*q (p = 1 - q) with
/// g(pq) = f(q) + f(p).
LogLaurent symmetrize_pq(const LogLaurent& f);

}  // namespace entbounds
