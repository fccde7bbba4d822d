#include "entbounds/real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace entbounds {

void PrecisionContext::validate() const {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  if (!(target_rel_err > 0.0)) throw std::invalid_argument("target relative error must be positive");
}

PrecisionContext PrecisionContext::from_env() {
  PrecisionContext ctx;
  if (const char* env = std::getenv("ENTROPY_BOUNDS_BITS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      throw std::invalid_argument("ENTROPY_BOUNDS_BITS is not an integer: " + std::string(env));
    }
    ctx.bits = bits;
  }
  ctx.validate();
  return ctx;
}

int PrecisionContext::round_trip_digits() const {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.3010)) + 2;
}

namespace {

long wider(const Real& a, const Real& b) { return a.bits() > b.bits() ? a.bits() : b.bits(); }

}  // namespace

Real::Real(long bits) {
  mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double value, long bits) {
  Real r(bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& value, long bits) {
  Real r(bits);
  mpfr_set_q(r.v_, value.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& value, long bits) {
  Real r(bits);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, long bits) {
  Real r(bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  return r;
}

Real Real::pi(long bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::round_to(long bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.bits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.bits());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  Real r(x.bits());
  mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.bits());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long e) {
  Real r(x.bits());
  mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real xlogx(const Real& x) {
  if (x.is_zero()) return Real(x.bits());
  return x * log(x);
}

Interval::Interval(Real lower, Real upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (upper_ < lower_) throw std::logic_error("Interval: lower bound exceeds upper bound");
}

Real Interval::midpoint() const { return (lower_ + upper_) / 2; }

}  // namespace entbounds
