#include "entbounds/serialize.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace entbounds {

Json to_json(const LogLaurent& f) {
  Json terms = Json::object();
  for (const auto& [e, c] : f.laurent().terms()) terms[std::to_string(e)] = c.str();
  return Json{{"terms", terms}, {"log", f.log_coeff().str()}};
}

Json to_json(const PoissonCoeffSet& set) {
  Json a = Json::object();
  Json b = Json::object();
  for (const auto& [k, c] : set.a) a[std::to_string(k)] = c.str();
  for (const auto& [k, c] : set.b) b[std::to_string(k)] = c.str();
  return Json{{"kind", "poisson"}, {"m", set.m}, {"a", a}, {"b", b}};
}

Json to_json(const BinomialCoeffSet& set) {
  Json a = Json::object();
  Json b = Json::object();
  for (const auto& [k, f] : set.a_tilde) a[std::to_string(k)] = to_json(f);
  for (const auto& [k, f] : set.b_tilde) b[std::to_string(k)] = to_json(f);
  return Json{{"kind", "binomial"}, {"m", set.m}, {"a", a}, {"b", b}};
}

LogLaurent log_laurent_from_json(const Json& j) {
  LaurentPoly laurent;
  for (const auto& [e, c] : j.at("terms").items()) {
    laurent.add_term(std::stoi(e), Rational::parse(c.get<std::string>()));
  }
  return LogLaurent(std::move(laurent), Rational::parse(j.at("log").get<std::string>()));
}

PoissonCoeffSet poisson_coeffs_from_json(const Json& j) {
  PoissonCoeffSet set;
  set.m = j.at("m").get<int>();
  for (const auto& [k, c] : j.at("a").items()) set.a[std::stoi(k)] = Rational::parse(c.get<std::string>());
  for (const auto& [k, c] : j.at("b").items()) set.b[std::stoi(k)] = Rational::parse(c.get<std::string>());
  return set;
}

BinomialCoeffSet binomial_coeffs_from_json(const Json& j) {
  BinomialCoeffSet set;
  set.m = j.at("m").get<int>();
  for (const auto& [k, f] : j.at("a").items()) set.a_tilde[std::stoi(k)] = log_laurent_from_json(f);
  for (const auto& [k, f] : j.at("b").items()) set.b_tilde[std::stoi(k)] = log_laurent_from_json(f);
  return set;
}

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return Rational::parse(text);
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      any = true;
    }
  }
  if (!any) return fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(std::string(text.substr(i)), &used);
    } catch (const std::exception&) {
      return fail();
    }
    i += used;
    scale += exponent;
  }
  if (i != text.size()) return fail();
  mpz_class num(digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (negative) num = -num;
  return scale >= 0 ? Rational(num * ten_pow, mpz_class(1)) : Rational(num, ten_pow);
}

std::string format_rational(const Rational& r) {
  mpz_class den = r.denominator();
  long twos = 0;
  long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return r.str();
  const long places = twos > fives ? twos : fives;
  if (places == 0) return r.numerator().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class scaled = r.numerator() * scale / r.denominator();
  const bool negative = sgn(scaled) < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<size_t>(places)) digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  return (negative ? "-" : "") + digits;
}

namespace {

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_row(std::ostream& out, const CsvRow& row) {
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out << ',';
    out << quote(row[i]);
  }
  out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const CsvRow& header, const std::vector<CsvRow>& rows) {
  write_row(out, header);
  for (const auto& row : rows) write_row(out, row);
}

std::vector<CsvRow> parse_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool row_open = false;
  char c = 0;
  while (in.get(c)) {
    row_open = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      row_open = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (row_open) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace entbounds
