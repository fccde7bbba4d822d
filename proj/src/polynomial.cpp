#include "entbounds/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace entbounds {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational();
  return coeffs_[static_cast<size_t>(power)];
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real UniPoly::eval(const Real& x) const {
  Real acc(x.bits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Real::of(*it, x.bits());
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.sign() < 0 ? -c : c;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) out += mag.denominator() == 1 ? mag.numerator().get_str() : mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

BiPoly::BiPoly(std::vector<UniPoly> s_coeffs) : s_coeffs_(std::move(s_coeffs)) { trim(); }

BiPoly BiPoly::from_s(const UniPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

void BiPoly::trim() {
  while (!s_coeffs_.empty() && s_coeffs_.back().is_zero()) s_coeffs_.pop_back();
}

int BiPoly::degree_n() const {
  int d = -1;
  for (const auto& c : s_coeffs_) d = std::max(d, c.degree());
  return d;
}

UniPoly BiPoly::coeff_s(int power) const {
  if (power < 0 || power > degree_s()) return {};
  return s_coeffs_[static_cast<size_t>(power)];
}

BiPoly BiPoly::derivative_s() const {
  if (s_coeffs_.size() <= 1) return {};
  std::vector<UniPoly> d(s_coeffs_.size() - 1);
  for (size_t i = 1; i < s_coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * s_coeffs_[i];
  return BiPoly(std::move(d));
}

BiPoly BiPoly::times_n() const {
  std::vector<UniPoly> v = s_coeffs_;
  for (auto& c : v) c = c.shifted(1);
  return BiPoly(std::move(v));
}

UniPoly BiPoly::at_n(const Rational& n) const {
  std::vector<Rational> v;
  v.reserve(s_coeffs_.size());
  for (const auto& c : s_coeffs_) v.push_back(c.eval(n));
  return UniPoly(std::move(v));
}

Rational BiPoly::eval(const Rational& n, const Rational& s) const { return at_n(n).eval(s); }

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.s_coeffs_.size() > s_coeffs_.size()) s_coeffs_.resize(rhs.s_coeffs_.size());
  for (size_t i = 0; i < rhs.s_coeffs_.size(); ++i) s_coeffs_[i] += rhs.s_coeffs_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.s_coeffs_.size() + b.s_coeffs_.size() - 1);
  for (size_t i = 0; i < a.s_coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.s_coeffs_.size(); ++j) v[i + j] += a.s_coeffs_[i] * b.s_coeffs_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly operator*(const Rational& c, const BiPoly& p) {
  std::vector<UniPoly> v = p.s_coeffs_;
  for (auto& x : v) x = c * x;
  return BiPoly(std::move(v));
}

}  // namespace entbounds
