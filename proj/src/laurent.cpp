#include "entbounds/laurent.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "entbounds/errors.hpp"

namespace entbounds {

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(const UniPoly& p) {
  for (int i = 0; i <= p.degree(); ++i) add_term(i, p.coeff(i));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Rational LaurentPoly::eval(const Rational& x) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    acc += e >= 0 ? c * pow(x, static_cast<unsigned>(e)) : c / pow(x, static_cast<unsigned>(-e));
  }
  return acc;
}

Real LaurentPoly::eval(const Real& x) const {
  const long bits = x.bits();
  Real pos(bits);
  for (int e = max_exponent(); e >= 0; --e) pos = pos * x + Real::of(coeff(e), bits);
  Real neg(bits);
  if (min_exponent() < 0) {
    const Real inv = 1 / x;
    for (int e = min_exponent(); e <= -1; ++e) neg = neg * inv + Real::of(coeff(e), bits);
    neg = neg * inv;
  }
  return pos + neg;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, x] : p.terms_) out.add_term(e, c * x);
  return out;
}

namespace {

std::string coeff_text(const Rational& mag) {
  return mag.denominator() == 1 ? mag.numerator().get_str() : mag.str();
}

void append_term(std::string& out, const Rational& c, const std::string& body) {
  if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
  else if (c.sign() < 0) out += "-";
  const Rational mag = c.sign() < 0 ? -c : c;
  if (body.empty()) {
    out += coeff_text(mag);
  } else if (mag == Rational(1)) {
    out += body;
  } else {
    out += coeff_text(mag) + "*" + body;
  }
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    std::string body;
    if (e == 1) body = var;
    else if (e != 0) body = var + "^" + std::to_string(e);
    append_term(out, it->second, body);
  }
  return out.empty() ? "0" : out;
}

LogLaurent::LogLaurent(LaurentPoly laurent, Rational log_coeff)
    : laurent_(std::move(laurent)), log_coeff_(std::move(log_coeff)) {}

Real LogLaurent::eval(const Real& x) const {
  if (x <= 0 || x > 1) throw DomainError("LogLaurent evaluated outside (0, 1]");
  Real value = laurent_.eval(x);
  if (!log_coeff_.is_zero()) value += Real::of(log_coeff_, x.bits()) * log(x);
  return value;
}

LogLaurent& LogLaurent::operator+=(const LogLaurent& rhs) {
  laurent_ += rhs.laurent_;
  log_coeff_ += rhs.log_coeff_;
  return *this;
}

LogLaurent& LogLaurent::operator-=(const LogLaurent& rhs) {
  laurent_ -= rhs.laurent_;
  log_coeff_ -= rhs.log_coeff_;
  return *this;
}

LogLaurent operator*(const Rational& c, const LogLaurent& f) {
  return LogLaurent(c * f.laurent_, c * f.log_coeff_);
}

std::string LogLaurent::str(const std::string& var) const {
  std::string out;
  if (!log_coeff_.is_zero()) append_term(out, log_coeff_, "log(" + var + ")");
  if (!laurent_.is_zero()) {
    const std::string rest = laurent_.str(var);
    if (out.empty()) return rest;
    out += rest[0] == '-' ? " - " + rest.substr(1) : " + " + rest;
  }
  return out.empty() ? "0" : out;
}

LaurentPoly laurent_integrate_tail(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e >= -1) {
      throw NonIntegrableTail("term s^" + std::to_string(e) + " is not integrable at infinity");
    }
    out.add_term(e + 1, c / Rational(-(e + 1)));
  }
  return out;
}

LogLaurent loglog_integrate_interval(const LaurentPoly& f) {
  LaurentPoly laurent;
  Rational log_coeff;
  for (const auto& [e, c] : f.terms()) {
    if (e == -1) {
      log_coeff -= c;
      continue;
    }
    const Rational k = c / Rational(e + 1);
    laurent.add_term(0, k);
    laurent.add_term(e + 1, -k);
  }
  return LogLaurent(std::move(laurent), std::move(log_coeff));
}

LogLaurent symmetrize_pq(const LogLaurent& f) {
  // Power sums p^k + q^k with p + q = 1 satisfy P_k = P_{k-1} - t P_{k-2}, t = pq.
  const LaurentPoly& lp = f.laurent();
  int top = 1;
  for (const auto& [e, c] : lp.terms()) top = std::max(top, e < 0 ? -e : e);
  std::vector<UniPoly> power_sum{UniPoly::constant(2), UniPoly::constant(1)};
  for (int k = 2; k <= top; ++k) {
    power_sum.push_back(power_sum[k - 1] - power_sum[k - 2].shifted(1));
  }
  LaurentPoly out;
  for (const auto& [e, c] : lp.terms()) {
    const int k = e < 0 ? -e : e;
    LaurentPoly term(power_sum[static_cast<size_t>(k)]);
    // p^-k + q^-k = (p^k + q^k) / t^k
    if (e < 0) term = term.shifted(-k);
    out += c * term;
  }
  return LogLaurent(std::move(out), f.log_coeff());
}

}  // namespace entbounds
