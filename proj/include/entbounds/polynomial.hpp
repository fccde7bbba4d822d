#pragma once

#include <string>
#include <vector>

#include "entbounds/rational.hpp"
#include "entbounds/real.hpp"

namespace entbounds {

/// Dense univariate polynomial with exact coefficients; index = power.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^power (zero past the degree).
  Rational coeff(int power) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly derivative() const;
  /// Multiplies by x^k.
  UniPoly shifted(int k) const;

  Rational eval(const Rational& x) const;
  Real eval(const Real& x) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in s whose coefficients are polynomials in n: sum_j coeff_j(n) s^j.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> s_coeffs);
  /// Embeds a polynomial in s with constant-in-n coefficients.
  static BiPoly from_s(const UniPoly& p);

  int degree_s() const { return static_cast<int>(s_coeffs_.size()) - 1; }
  int degree_n() const;
  bool is_zero() const { return s_coeffs_.empty(); }
  /// Coefficient polynomial in n of s^power.
  UniPoly coeff_s(int power) const;
  const std::vector<UniPoly>& s_coeffs() const { return s_coeffs_; }

  BiPoly derivative_s() const;
  BiPoly times_n() const;
  /// Substitutes n, leaving a polynomial in s.
  UniPoly at_n(const Rational& n) const;
  Rational eval(const Rational& n, const Rational& s) const;

  BiPoly& operator+=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& c, const BiPoly& p);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void trim();
  std::vector<UniPoly> s_coeffs_;
};

}  // namespace entbounds
