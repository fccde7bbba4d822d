#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entbounds/bounds.hpp"
#include "entbounds/coefficients.hpp"
#include "entbounds/rational.hpp"
#include "entbounds/real.hpp"

namespace entbounds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { coeffs, bounds, verify, figure };
enum class OutputFormat { csv, json };

struct RunConfig {
  Command command = Command::coeffs;
  /// coeffs: poisson | binomial | small-lambda; bounds/verify: poisson-entropy |
  /// binomial-entropy | relative-entropy | expected-log-poisson | expected-log-binomial;
  /// figure: gaps | bounds.
  std::string target;
  std::optional<BoundMethod> method;
  /// lambda, p or s values; exact as typed.
  std::vector<Rational> grid;
  /// Trial counts for the binomial targets.
  std::vector<long> n_values;
  std::vector<int> orders;
  bool auto_order = false;
  int kmax = 0;
  PrecisionContext ctx;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
};

/// Test seam: lets a caller substitute the Poisson coefficient source.
struct CliHooks {
  std::function<PoissonCoeffSet(int m)> poisson_coeffs;
};

/// Parses `args` (without the program name) and runs the command.
/// Returns 0 on success, 1 when verification finds a bound that misses its
/// oracle, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace entbounds::cli
