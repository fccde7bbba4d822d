#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "entbounds/coefficients.hpp"
#include "entbounds/laurent.hpp"
#include "entbounds/rational.hpp"

namespace entbounds {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; a LogLaurent as
// {"terms": {"<exp>": "num/den", ...}, "log": "num/den"}.
Json to_json(const LogLaurent& f);
Json to_json(const PoissonCoeffSet& set);
Json to_json(const BinomialCoeffSet& set);

LogLaurent log_laurent_from_json(const Json& j);
PoissonCoeffSet poisson_coeffs_from_json(const Json& j);
BinomialCoeffSet binomial_coeffs_from_json(const Json& j);

/// Exact decimal literal ("0.05", "-3", "1.5e-3", "7/3") to a Rational.
Rational parse_decimal(std::string_view text);

/// Terminating decimals print exactly ("0.05"); anything else prints as "num/den".
std::string format_rational(const Rational& r);

using CsvRow = std::vector<std::string>;

/// RFC 4180 style: fields with ',', '"' or newlines are quoted.
void write_csv(std::ostream& out, const CsvRow& header, const std::vector<CsvRow>& rows);
std::vector<CsvRow> parse_csv(std::istream& in);

}  // namespace entbounds
