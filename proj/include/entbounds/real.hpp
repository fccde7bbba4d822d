#pragma once

#include <mpfr.h>

#include <concepts>
#include <string>
#include <string_view>

#include "entbounds/rational.hpp"

namespace entbounds {

/// Working precision for every high-precision evaluation.
struct PrecisionContext {
  long bits = 256;
  double target_rel_err = 1e-30;

  /// Throws std::invalid_argument unless bits >= 64 and target_rel_err > 0.
  void validate() const;

  /// Defaults, with `ENTROPY_BOUNDS_BITS` overriding `bits` when set.
  static PrecisionContext from_env();

  /// Same relative target, `factor` times the mantissa bits.
  PrecisionContext scaled(long factor) const { return {bits * factor, target_rel_err}; }

  /// Decimal digits needed to round-trip a value at this precision.
  int round_trip_digits() const;
};

/// Round-to-nearest binary floating point number with a per-value mantissa width.
/// Binary operations produce the wider of the two operand precisions.
class Real {
 public:
  explicit Real(long bits = 256);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(double value, long bits);
  static Real of(const Rational& value, long bits);
  static Real of(const mpz_class& value, long bits);
  template <std::integral I>
  static Real of(I value, long bits) {
    Real r(bits);
    if constexpr (std::signed_integral<I>) {
      mpfr_set_si(r.v_, static_cast<long>(value), MPFR_RNDN);
    } else {
      mpfr_set_ui(r.v_, static_cast<unsigned long>(value), MPFR_RNDN);
    }
    return r;
  }
  /// Decimal or scientific notation; throws std::invalid_argument on garbage.
  static Real parse(std::string_view text, long bits);

  static Real pi(long bits);

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  Real round_to(long bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Scientific notation with `digits` significant digits, e.g. "6.931e-01".
  std::string str(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend Real log(const Real& x);
  friend Real log1p(const Real& x);
  friend Real exp(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& x, long e);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

/// x log x with the convention 0 log 0 = 0.
Real xlogx(const Real& x);

/// Certified lower/upper pair.
class Interval {
 public:
  /// Throws std::logic_error if lower > upper.
  Interval(Real lower, Real upper);

  const Real& lower() const { return lower_; }
  const Real& upper() const { return upper_; }
  Real width() const { return upper_ - lower_; }
  Real midpoint() const;
  bool contains(const Real& x) const { return lower_ <= x && x <= upper_; }

 private:
  Real lower_;
  Real upper_;
};

}  // namespace entbounds
