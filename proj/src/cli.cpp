#include "entbounds/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entbounds/errors.hpp"
#include "entbounds/oracle.hpp"
#include "entbounds/serialize.hpp"

namespace entbounds::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr size_t kMaxGridPoints = 100'000;

struct Table {
  CsvRow header;
  std::vector<CsvRow> rows;
};

void emit(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    write_csv(out, table.header, table.rows);
    return;
  }
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (size_t i = 0; i < table.header.size() && i < row.size(); ++i) obj[table.header[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Rational parse_number(const std::string& text) {
  try {
    return parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Rational> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw UsageError("--grid expects a:b:step, got '" + spec + "'");
  const Rational lo = parse_number(parts[0]);
  const Rational hi = parse_number(parts[1]);
  const Rational step = parse_number(parts[2]);
  if (step.sign() <= 0) throw UsageError("--grid step must be positive");
  if (hi < lo) throw UsageError("--grid range is empty: " + spec);
  std::vector<Rational> grid;
  for (Rational x = lo; x <= hi; x += step) {
    if (grid.size() >= kMaxGridPoints) throw UsageError("--grid has too many points");
    grid.push_back(x);
  }
  return grid;
}

std::vector<Rational> parse_points(const std::string& spec) {
  std::vector<Rational> points;
  for (const auto& item : split(spec, ',')) points.push_back(parse_number(item));
  if (points.empty()) throw UsageError("--points is empty");
  return points;
}

long parse_long(const std::string& text, const std::string& what) {
  size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + " expects integers, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError(what + " expects integers, got '" + text + "'");
  return value;
}

enum class Family { poisson, binomial };

struct TargetInfo {
  std::string name;
  Family family;
  std::string param;
  std::vector<BoundMethod> methods;  // first is the default
};

const TargetInfo& target_info(const std::string& name) {
  static const std::vector<TargetInfo> targets{
      {"poisson-entropy", Family::poisson, "lambda",
       {BoundMethod::large_lambda, BoundMethod::small_lambda, BoundMethod::cover_thomas}},
      {"binomial-entropy", Family::binomial, "p", {BoundMethod::binomial_corollary, BoundMethod::binomial_stirling}},
      {"relative-entropy", Family::binomial, "p", {BoundMethod::relative_entropy}},
      {"expected-log-poisson", Family::poisson, "s", {BoundMethod::expected_log_poisson}},
      {"expected-log-binomial", Family::binomial, "s", {BoundMethod::expected_log_binomial}},
  };
  for (const auto& t : targets)
    if (t.name == name) return t;
  throw UsageError("unknown target '" + name + "'");
}

std::vector<Rational> default_grid(const TargetInfo& target, BoundMethod method) {
  if (target.family == Family::binomial) return parse_points("0.05,0.2,0.5,0.8,0.95");
  if (method == BoundMethod::small_lambda) return parse_grid("0.1:1:0.1");
  return parse_points("0.1,0.5,1,2,5,10,20,50,100");
}

bool order_free(BoundMethod method) {
  return method == BoundMethod::cover_thomas || method == BoundMethod::binomial_stirling;
}

struct Point {
  long n = 0;
  Rational x;
};

CsvRow param_cells(const TargetInfo& target, const Point& pt) {
  if (target.family == Family::binomial) return {std::to_string(pt.n), format_rational(pt.x)};
  return {format_rational(pt.x)};
}

CsvRow param_header(const TargetInfo& target) {
  if (target.family == Family::binomial) return {"n", target.param};
  return {target.param};
}

std::vector<Point> expand_points(const RunConfig& cfg, const TargetInfo& target) {
  std::vector<Point> pts;
  if (target.family == Family::poisson) {
    for (const auto& x : cfg.grid) pts.push_back({0, x});
    return pts;
  }
  for (long n : cfg.n_values)
    for (const auto& x : cfg.grid) pts.push_back({n, x});
  return pts;
}

Real infinity(long bits, int sign) {
  Real r(bits);
  mpfr_set_inf(r.raw(), sign);
  return r;
}

class Evaluator {
 public:
  Evaluator(const RunConfig& cfg, const CliHooks& hooks) : cfg_(cfg), hooks_(hooks) {}

  BoundReport bound(BoundMethod method, const Point& pt, int m) const {
    const PrecisionContext& ctx = cfg_.ctx;
    const Real x = Real::of(pt.x, ctx.bits);
    switch (method) {
      case BoundMethod::small_lambda:
        return entropy_poisson_small(x, m, ctx);
      case BoundMethod::large_lambda:
        return hooks_.poisson_coeffs ? entropy_poisson_large(x, hooks_.poisson_coeffs(m), ctx)
                                     : entropy_poisson_large(x, m, ctx);
      case BoundMethod::cover_thomas: {
        Real upper = entropy_poisson_ct(x, ctx);
        return BoundReport::make(Interval(infinity(ctx.bits, -1), upper), 0, method);
      }
      case BoundMethod::relative_entropy:
        return relative_entropy_bounds(pt.n, x, m, ctx);
      case BoundMethod::binomial_corollary:
        return entropy_binomial_bounds(pt.n, x, m, ctx);
      case BoundMethod::binomial_stirling:
        return entropy_binomial_stirling_m1(pt.n, x, ctx);
      case BoundMethod::expected_log_poisson:
        return expected_log_poisson_bounds(x, m, ctx);
      case BoundMethod::expected_log_binomial:
        return expected_log_binomial_bounds(pt.n, x, m, ctx);
    }
    throw std::logic_error("unhandled bound method");
  }

  BoundReport best(BoundMethod method, const Point& pt) const {
    if (order_free(method)) return bound(method, pt, 1);
    return best_interval([&](int m) { return bound(method, pt, m); });
  }

  Real oracle(const std::string& target, const Point& pt) const {
    const PrecisionContext& ctx = cfg_.ctx;
    const Real x = Real::of(pt.x, ctx.bits);
    if (target == "poisson-entropy") return poisson_entropy_oracle(x, ctx).value;
    if (target == "binomial-entropy") return binomial_entropy_oracle(pt.n, x, ctx);
    if (target == "relative-entropy") return relative_entropy_oracle(pt.n, x, ctx);
    if (target == "expected-log-poisson") return expected_log_poisson(x, ctx).value;
    if (target == "expected-log-binomial") return expected_log_binomial(pt.n, x, ctx);
    throw UsageError("no oracle for target '" + target + "'");
  }

 private:
  const RunConfig& cfg_;
  const CliHooks& hooks_;
};

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const int digits = cfg.ctx.round_trip_digits();
  if (cfg.target == "small-lambda") {
    if (cfg.kmax < 2) throw UsageError("--kmax must be at least 2");
    Table table{{"k", "c"}, {}};
    Json c = Json::object();
    for (int k = 2; k <= cfg.kmax; ++k) {
      const std::string value = c_coeff(k, cfg.ctx).str(digits);
      c[std::to_string(k)] = value;
      table.rows.push_back({std::to_string(k), value});
    }
    if (cfg.format == OutputFormat::json) {
      out << Json{{"kind", "small-lambda"}, {"bits", cfg.ctx.bits}, {"c", c}}.dump(2) << '\n';
    } else {
      emit(table, cfg.format, out);
    }
    return kExitOk;
  }

  if (cfg.auto_order || cfg.orders.size() != 1) throw UsageError("coeffs needs a single --m");
  const int m = cfg.orders.front();
  if (m < 1) throw UsageError("--m must be at least 1");
  if (cfg.target == "poisson") {
    const PoissonCoeffSet set = poisson_coeffs(m);
    if (cfg.format == OutputFormat::json) {
      out << to_json(set).dump(2) << '\n';
      return kExitOk;
    }
    Table table{{"set", "k", "value"}, {}};
    for (const auto& [k, c] : set.a) table.rows.push_back({"a", std::to_string(k), c.str()});
    for (const auto& [k, c] : set.b) table.rows.push_back({"b", std::to_string(k), c.str()});
    emit(table, cfg.format, out);
    return kExitOk;
  }
  if (cfg.target == "binomial") {
    const BinomialCoeffSet set = binomial_coeffs(m);
    if (cfg.format == OutputFormat::json) {
      out << to_json(set).dump(2) << '\n';
      return kExitOk;
    }
    Table table{{"set", "k", "exponent", "value"}, {}};
    auto add = [&](const std::string& name, const std::map<int, LogLaurent>& coeffs) {
      for (const auto& [k, f] : coeffs) {
        if (!f.log_coeff().is_zero()) table.rows.push_back({name, std::to_string(k), "log", f.log_coeff().str()});
        for (const auto& [e, c] : f.laurent().terms())
          table.rows.push_back({name, std::to_string(k), std::to_string(e), c.str()});
      }
    };
    add("a", set.a_tilde);
    add("b", set.b_tilde);
    emit(table, cfg.format, out);
    return kExitOk;
  }
  throw UsageError("unknown coefficient kind '" + cfg.target + "'");
}

BoundMethod resolve_method(const RunConfig& cfg, const TargetInfo& target) {
  if (!cfg.method) return target.methods.front();
  if (std::find(target.methods.begin(), target.methods.end(), *cfg.method) == target.methods.end()) {
    throw UsageError("method '" + std::string(method_name(*cfg.method)) + "' does not apply to " + target.name);
  }
  return *cfg.method;
}

int cmd_bounds(const RunConfig& cfg, const CliHooks& hooks, std::ostream& out) {
  const TargetInfo& target = target_info(cfg.target);
  const BoundMethod method = resolve_method(cfg, target);
  const Evaluator eval(cfg, hooks);
  const int digits = cfg.ctx.round_trip_digits();

  Table table{param_header(target), {}};
  for (const char* col : {"m", "method", "lower", "upper", "gap", "status"}) table.header.push_back(col);

  const std::vector<int> orders = cfg.auto_order || order_free(method) ? std::vector<int>{0} : cfg.orders;
  size_t failures = 0;
  for (const Point& pt : expand_points(cfg, target)) {
    for (int m : orders) {
      CsvRow row = param_cells(target, pt);
      try {
        const BoundReport r = m == 0 ? eval.best(method, pt) : eval.bound(method, pt, m);
        for (std::string cell : {std::to_string(r.m), std::string(method_name(r.method)),
                                 r.interval.lower().str(digits), r.interval.upper().str(digits), r.gap.str(digits),
                                 std::string("ok")}) {
          row.push_back(std::move(cell));
        }
      } catch (const DomainError& e) {
        ++failures;
        for (std::string cell : {std::to_string(m), std::string(method_name(method)), std::string(), std::string(),
                                 std::string(), "domain-error: " + std::string(e.what())}) {
          row.push_back(std::move(cell));
        }
      }
      table.rows.push_back(std::move(row));
    }
  }
  emit(table, cfg.format, out);
  return failures == table.rows.size() ? kExitUsage : kExitOk;
}

std::vector<int> verify_orders(const RunConfig& cfg, BoundMethod method) {
  if (order_free(method)) return {method == BoundMethod::cover_thomas ? 0 : 1};
  if (!cfg.orders.empty() && !cfg.auto_order) return cfg.orders;
  const int top = method == BoundMethod::small_lambda ? 8 : 5;
  std::vector<int> orders;
  for (int m = 1; m <= top; ++m) orders.push_back(m);
  return orders;
}

int cmd_verify(const RunConfig& cfg, const CliHooks& hooks, std::ostream& out) {
  const TargetInfo& target = target_info(cfg.target);
  const BoundMethod method = resolve_method(cfg, target);
  const Evaluator eval(cfg, hooks);
  const int digits = cfg.ctx.round_trip_digits();

  Table table{param_header(target), {}};
  for (const char* col : {"m", "method", "oracle", "lower", "upper", "contained", "margin", "status"}) {
    table.header.push_back(col);
  }

  size_t violations = 0;
  size_t skipped = 0;
  for (const Point& pt : expand_points(cfg, target)) {
    std::optional<Real> oracle;
    std::string oracle_error;
    try {
      oracle = eval.oracle(cfg.target, pt);
    } catch (const DomainError& e) {
      oracle_error = e.what();
    }
    for (int m : verify_orders(cfg, method)) {
      CsvRow row = param_cells(target, pt);
      row.push_back(std::to_string(m));
      row.push_back(std::string(method_name(method)));
      try {
        if (!oracle) throw DomainError(oracle_error);
        const BoundReport r = eval.bound(method, pt, m);
        const bool contained = r.interval.contains(*oracle);
        const Real margin = min(*oracle - r.interval.lower(), r.interval.upper() - *oracle);
        if (!contained) ++violations;
        for (std::string cell : {oracle->str(digits), r.interval.lower().str(digits), r.interval.upper().str(digits),
                                 std::string(contained ? "true" : "false"), margin.str(digits),
                                 std::string(contained ? "ok" : "violation")}) {
          row.push_back(std::move(cell));
        }
      } catch (const DomainError& e) {
        ++skipped;
        for (std::string cell : {std::string(), std::string(), std::string(), std::string(), std::string(),
                                 "domain-error: " + std::string(e.what())}) {
          row.push_back(std::move(cell));
        }
      }
      table.rows.push_back(std::move(row));
    }
  }
  emit(table, cfg.format, out);
  if (violations > 0) return kExitVerificationFailed;
  return skipped == table.rows.size() ? kExitUsage : kExitOk;
}

int cmd_figure(const RunConfig& cfg, const CliHooks& hooks, std::ostream& out) {
  const bool gaps = cfg.target == "gaps";
  if (!gaps && cfg.target != "bounds") throw UsageError("figure expects 'gaps' or 'bounds'");
  for (const auto& x : cfg.grid)
    if (x.sign() <= 0) throw UsageError("figure range must be strictly positive");
  if (cfg.auto_order) throw UsageError("figure needs explicit orders");
  const int digits = cfg.ctx.round_trip_digits();
  const Evaluator eval(cfg, hooks);

  Table table{{"lambda"}, {}};
  for (int m : cfg.orders) {
    if (m < 1) throw UsageError("--m must be at least 1");
    if (gaps) {
      table.header.push_back("gap_m" + std::to_string(m));
    } else {
      table.header.push_back("lower_m" + std::to_string(m));
      table.header.push_back("upper_m" + std::to_string(m));
    }
  }
  for (const auto& x : cfg.grid) {
    CsvRow row{format_rational(x)};
    for (int m : cfg.orders) {
      const BoundReport r = eval.bound(BoundMethod::large_lambda, {0, x}, m);
      if (gaps) {
        row.push_back(r.gap.str(digits));
      } else {
        row.push_back(r.interval.lower().str(digits));
        row.push_back(r.interval.upper().str(digits));
      }
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, OutputFormat::csv, out);
  return kExitOk;
}

int dispatch(const RunConfig& cfg, const CliHooks& hooks, std::ostream& out) {
  switch (cfg.command) {
    case Command::coeffs:
      return cmd_coeffs(cfg, out);
    case Command::bounds:
      return cmd_bounds(cfg, hooks, out);
    case Command::verify:
      return cmd_verify(cfg, hooks, out);
    case Command::figure:
      return cmd_figure(cfg, hooks, out);
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Certified bounds on Poisson and binomial entropies", "entropy_bounds"};
  app.require_subcommand(1);

  std::string target;
  std::string m_opt;
  std::string grid_opt;
  std::string points_opt;
  std::string n_opt = "5,10,30,100,300";
  std::string method_opt;
  std::string format_opt;
  std::string out_opt;
  long bits = 0;
  double rel_err = 0.0;
  int kmax = 10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--bits", bits, "Working precision in bits (>= 64)");
    sub->add_option("--rel-err", rel_err, "Target relative error of oracle series");
    sub->add_option("--format", format_opt, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_opt, "Write output to PATH instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    auto* grid = sub->add_option("--grid", grid_opt, "Parameter range a:b:step");
    sub->add_option("--points", points_opt, "Comma-separated parameter values")->excludes(grid);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Export exact expansion coefficients");
  coeffs->add_option("kind", target, "poisson | binomial | small-lambda")
      ->required()
      ->check(CLI::IsMember({"poisson", "binomial", "small-lambda"}));
  coeffs->add_option("--m", m_opt, "Order m");
  coeffs->add_option("--kmax", kmax, "Largest k for c(k)");
  add_common(coeffs);

  std::vector<CLI::App*> evaluators;
  for (const char* name : {"bounds", "verify"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "bounds" ? "Evaluate bounds over a grid" : "Check bounds against oracles");
    sub->add_option("target", target,
                    "poisson-entropy | binomial-entropy | relative-entropy | expected-log-poisson | "
                    "expected-log-binomial")
        ->required();
    sub->add_option("--method", method_opt, "Bound family (e.g. large-lambda, small-lambda, cover-thomas)");
    sub->add_option("--n", n_opt, "Comma-separated n values for binomial targets");
    sub->add_option("--m", m_opt, "Order m, comma-separated list, or 'auto'");
    add_grid(sub);
    add_common(sub);
    evaluators.push_back(sub);
  }

  auto* figure = app.add_subcommand("figure", "Emit bound/gap curves of the large-lambda bounds as CSV");
  figure->add_option("fig", target, "gaps | bounds")->required()->check(CLI::IsMember({"gaps", "bounds"}));
  figure->add_option("--m", m_opt, "Comma-separated orders");
  add_grid(figure);
  add_common(figure);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.target = target;
    if (coeffs->parsed()) cfg.command = Command::coeffs;
    else if (evaluators[0]->parsed()) cfg.command = Command::bounds;
    else if (evaluators[1]->parsed()) cfg.command = Command::verify;
    else cfg.command = Command::figure;

    cfg.ctx = PrecisionContext::from_env();
    if (bits != 0) cfg.ctx.bits = bits;
    if (rel_err != 0.0) cfg.ctx.target_rel_err = rel_err;
    cfg.ctx.validate();

    cfg.format = format_opt.empty() ? (cfg.command == Command::coeffs ? OutputFormat::json : OutputFormat::csv)
                                    : (format_opt == "json" ? OutputFormat::json : OutputFormat::csv);
    if (!out_opt.empty()) cfg.output_path = out_opt;
    cfg.kmax = kmax;

    if (!method_opt.empty()) {
      cfg.method = parse_method(method_opt);
      if (!cfg.method) throw UsageError("unknown method '" + method_opt + "'");
    }

    if (m_opt == "auto") {
      cfg.auto_order = true;
    } else if (!m_opt.empty()) {
      for (const auto& item : split(m_opt, ',')) {
        const long m = parse_long(item, "--m");
        if (m < 1 || m > 64) throw UsageError("--m values must lie in [1, 64]");
        cfg.orders.push_back(static_cast<int>(m));
      }
    } else if (cfg.command == Command::coeffs) {
      cfg.orders = {1};
    } else if (cfg.command == Command::figure) {
      cfg.orders = {1, 2, 3};
    } else {
      cfg.auto_order = cfg.command == Command::bounds;
    }

    if (cfg.command != Command::coeffs) {
      for (const auto& item : split(n_opt, ',')) {
        const long n = parse_long(item, "--n");
        if (n < 1) throw UsageError("--n values must be positive");
        cfg.n_values.push_back(n);
      }
      if (!grid_opt.empty()) cfg.grid = parse_grid(grid_opt);
      else if (!points_opt.empty()) cfg.grid = parse_points(points_opt);
      else if (cfg.command == Command::figure) cfg.grid = parse_grid("10:20:1");
      else {
        const TargetInfo& info = target_info(cfg.target);
        cfg.grid = default_grid(info, resolve_method(cfg, info));
      }
    }

    std::ostringstream buffer;
    const int code = dispatch(cfg, hooks, buffer);
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + *cfg.output_path + "'");
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PrecisionInsufficient& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace entbounds::cli
