#pragma once

#include <stdexcept>
#include <string>

namespace entbounds {

/// Input outside the mathematical domain of an operation (e.g. q <= 0, lambda = 0
/// for a large-lambda bound).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A Laurent term s^e with e >= -1 cannot be integrated over [lambda, inf).
class NonIntegrableTail : public std::invalid_argument {
 public:
  explicit NonIntegrableTail(const std::string& what) : std::invalid_argument(what) {}
};

/// Series truncation or cancellation control could not reach the requested accuracy.
class PrecisionInsufficient : public std::runtime_error {
 public:
  explicit PrecisionInsufficient(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entbounds
