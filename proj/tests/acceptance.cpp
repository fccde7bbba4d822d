// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "entbounds/bounds.hpp"
#include "entbounds/coefficients.hpp"
#include "entbounds/moments.hpp"
#include "entbounds/oracle.hpp"

using namespace entbounds;

namespace {

constexpr long kBits = 256;
const PrecisionContext kCtx{kBits, 1e-30};

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Detail {
 public:
  template <typename T>
  Detail& operator<<(const T& v) {
    os_ << v;
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

Real num(const Rational& r) { return Real::of(r, kBits); }
Real num(long v) { return Real::of(v, kBits); }
Real dec(const char* text) { return Real::parse(text, kBits); }

double absd(const Real& x) { return std::fabs(x.to_double()); }

LogLaurent ll(std::map<int, Rational> terms, Rational log_coeff) { return LogLaurent(LaurentPoly(terms), log_coeff); }

Outcome table_one() {
  const std::map<int, std::map<int, const char*>> a{
      {1, {{1, "1"}, {2, "1/6"}}},
      {2, {{2, "3/2"}, {3, "5/3"}, {4, "1/20"}}},
      {3, {{3, "5"}, {4, "35/2"}, {5, "17/5"}, {6, "1/42"}}},
      {4, {{4, "105/4"}, {5, "210"}, {6, "2275/18"}, {7, "167/21"}, {8, "1/72"}}},
  };
  const std::map<int, std::map<int, const char*>> b{
      {1, {{1, "1/6"}}},
      {2, {{1, "-1/12"}, {2, "5/24"}, {3, "1/60"}}},
      {3, {{1, "-1/12"}, {2, "-1/24"}, {3, "103/180"}, {4, "13/40"}, {5, "1/210"}}},
      {4, {{1, "-1/12"}, {2, "-1/24"}, {3, "-19/360"}, {4, "201/80"}, {5, "12367/2520"}, {6, "571/1008"}, {7, "1/504"}}},
  };
  int matched = 0, total = 0;
  Outcome out;
  Detail d;
  auto compare = [&](const char* name, int m, const std::map<int, Rational>& got, const std::map<int, const char*>& want) {
    if (got.size() != want.size()) {
      out.pass = false;
      d << name << "(" << m << ",*) has " << got.size() << " entries; ";
    }
    for (const auto& [k, text] : want) {
      ++total;
      const auto it = got.find(k);
      if (it != got.end() && it->second.str() == Rational::parse(text).str()) {
        ++matched;
      } else {
        out.pass = false;
        d << name << "(" << m << "," << k << ") mismatch; ";
      }
    }
  };
  for (int m = 1; m <= 4; ++m) {
    const PoissonCoeffSet set = poisson_coeffs(m);
    compare("a", m, set.a, a.at(m));
    compare("b", m, set.b, b.at(m));
  }
  d << matched << "/" << total << " entries equal";
  out.detail = d.str();
  return out;
}

Outcome binomial_closed_forms() {
  const BinomialCoeffSet one = binomial_coeffs(1);
  const BinomialCoeffSet two = binomial_coeffs(2);
  // Published forms, written in q; b~(2,1) = p^2/(12 q) is expanded with p = 1 - q.
  struct Case {
    const char* name;
    LogLaurent got;
    LogLaurent want;
    std::function<Real(const Real& q)> direct;
  };
  const std::vector<Case> cases{
      {"b~(1,1)", one.b_tilde.at(1), ll({{1, Rational(1, 3)}, {-1, Rational(-1, 6)}, {0, Rational(-1, 6)}}, Rational(-1, 2)),
       [](const Real& q) { return -log(q) / 2 + q / 3 - 1 / (6 * q) - num(Rational(1, 6)); }},
      {"a~(1,1)", one.a_tilde.at(1), ll({{1, -1}, {-1, 1}}, 2), [](const Real& q) { return 2 * log(q) - q + 1 / q; }},
      {"a~(1,2)", one.a_tilde.at(2), ll({{1, 2}, {-1, Rational(-7, 3)}, {-2, Rational(1, 6)}, {0, Rational(1, 6)}}, -4),
       [](const Real& q) {
         return -4 * log(q) + 2 * q - 7 / (3 * q) + 1 / (6 * q * q) + num(Rational(1, 6));
       }},
      {"b~(2,1)", two.b_tilde.at(1), ll({{-1, Rational(1, 12)}, {0, Rational(-1, 6)}, {1, Rational(1, 12)}}, 0),
       [](const Real& q) { return (1 - q) * (1 - q) / (12 * q); }},
      {"b~(2,2)", two.b_tilde.at(2),
       ll({{1, Rational(-1, 2)}, {-1, Rational(17, 12)}, {-2, Rational(-5, 24)}, {0, Rational(-17, 24)}}, Rational(3, 2)),
       [](const Real& q) {
         return 3 * log(q) / 2 - q / 2 + 17 / (12 * q) - 5 / (24 * q * q) - num(Rational(17, 24));
       }},
      {"b~(2,3)", two.b_tilde.at(3),
       ll({{1, Rational(6, 5)}, {-1, Rational(-5, 2)}, {-2, Rational(3, 8)}, {-3, Rational(-1, 60)}, {0, Rational(113, 120)}},
          -3),
       [](const Real& q) {
         return -3 * log(q) + 6 * q / 5 - 5 / (2 * q) + 3 / (8 * q * q) - 1 / (60 * q * q * q) + num(Rational(113, 120));
       }},
      {"a~(2,2)", two.a_tilde.at(2), ll({{1, 3}, {-1, -9}, {-2, Rational(3, 2)}, {0, Rational(9, 2)}}, -9),
       [](const Real& q) { return -9 * log(q) + 3 * q - 9 / q + 3 / (2 * q * q) + num(Rational(9, 2)); }},
      {"a~(2,3)", two.a_tilde.at(3),
       ll({{1, -26}, {-1, 83}, {-2, -18}, {-3, Rational(5, 3)}, {0, Rational(-122, 3)}}, 78),
       [](const Real& q) {
         return 78 * log(q) - 26 * q + 83 / q - 18 / (q * q) + 5 / (3 * q * q * q) - num(Rational(122, 3));
       }},
      {"a~(2,4)", two.a_tilde.at(4),
       ll({{1, 24}, {-1, -78}, {-2, 18}, {-3, Rational(-31, 15)}, {-4, Rational(1, 20)}, {0, Rational(2281, 60)}}, -72),
       [](const Real& q) {
         return -72 * log(q) + 24 * q - 78 / q + 18 / (q * q) - 31 / (15 * q * q * q) + 1 / (20 * q * q * q * q) +
                num(Rational(2281, 60));
       }},
  };
  Outcome out;
  Detail d;
  double worst = 0.0;
  for (const Case& c : cases) {
    if (!(c.got == c.want)) {
      out.pass = false;
      d << c.name << " differs symbolically (" << c.got.str() << "); ";
    }
    for (const char* qtext : {"0.1", "0.5", "0.9"}) {
      const Real q = dec(qtext);
      const double err = absd(c.got.eval(q) - c.direct(q));
      worst = std::max(worst, err);
      if (!(err <= 1e-25)) {
        out.pass = false;
        d << c.name << " at q=" << qtext << " off by " << err << "; ";
      }
    }
  }
  d << cases.size() << " expressions equal symbolically; max numeric error " << worst;
  out.detail = d.str();
  return out;
}

Outcome expansion_prefix() {
  Outcome out;
  Detail d;
  if (poisson_coeffs(3).b.at(1) != Rational(-1, 12) || poisson_coeffs(3).b.at(2) != Rational(-1, 24)) {
    out.pass = false;
    d << "b(3,1) or b(3,2) wrong; ";
  }
  int checks = 0;
  for (int m = 2; m <= 6; ++m)
    for (int mp = m + 1; mp <= 6; ++mp)
      for (int k = 1; k <= m - 1; ++k) {
        ++checks;
        if (poisson_coeffs(mp).b.at(k) != poisson_coeffs(m).b.at(k)) {
          out.pass = false;
          d << "b(" << mp << "," << k << ") != b(" << m << "," << k << "); ";
        }
      }
  d << "b(3,1)=" << poisson_coeffs(3).b.at(1).str() << " b(3,2)=" << poisson_coeffs(3).b.at(2).str() << "; " << checks
    << " prefix comparisons";
  out.detail = d.str();
  return out;
}

Outcome figure_gaps() {
  struct Point {
    int m;
    long lambda;
    double published;
  };
  const std::vector<Point> points{{1, 10, 0.1}, {1, 20, 0.05}, {2, 10, 0.017}, {2, 20, 0.004}, {3, 10, 0.0068}, {3, 20, 0.00074}};
  Outcome out;
  Detail d;
  d << std::setprecision(4);
  for (const Point& p : points) {
    const double gap = entropy_poisson_large(num(p.lambda), p.m, kCtx).gap.to_double();
    const double rel = std::fabs(gap - p.published) / p.published;
    d << "r" << p.m << "(" << p.lambda << ")=" << gap << " ";
    if (!(rel <= 0.10)) out.pass = false;
  }
  out.detail = d.str();
  return out;
}

Outcome sandwich() {
  int checks = 0, violations = 0;
  Detail d;
  auto check = [&](const BoundReport& r, const Real& oracle, const std::string& where) {
    ++checks;
    if (!r.interval.contains(oracle)) {
      ++violations;
      d << "violation at " << where << "; ";
    }
  };
  for (const char* text : {"0.1", "0.5", "1", "2", "5", "10", "20", "50", "100"}) {
    const Real lambda = dec(text);
    const Real h = poisson_entropy_oracle(lambda, kCtx).value;
    for (int m = 1; m <= 5; ++m) check(entropy_poisson_large(lambda, m, kCtx), h, std::string("large ") + text);
  }
  for (int i = 1; i <= 10; ++i) {
    const Real lambda = num(Rational(i, 10));
    const Real h = poisson_entropy_oracle(lambda, kCtx).value;
    for (int m = 1; m <= 8; ++m) check(entropy_poisson_small(lambda, m, kCtx), h, "small " + std::to_string(i) + "/10");
  }
  for (long n : {5L, 10L, 30L, 100L, 300L}) {
    for (const char* text : {"0.05", "0.2", "0.5", "0.8", "0.95"}) {
      const Real p = dec(text);
      const Real dnp = relative_entropy_oracle(n, p, kCtx);
      const Real h = binomial_entropy_oracle(n, p, kCtx);
      const std::string where = "n=" + std::to_string(n) + " p=" + text;
      for (int m = 1; m <= 5; ++m) {
        check(relative_entropy_bounds(n, p, m, kCtx), dnp, "D " + where);
        check(entropy_binomial_bounds(n, p, m, kCtx), h, "H " + where);
      }
      check(entropy_binomial_stirling_m1(n, p, kCtx), h, "closed-form H " + where);
    }
  }
  d << checks << " checks, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome exact_formula() {
  double worst = 0.0;
  int checks = 0;
  for (long n = 1; n <= 30; ++n) {
    for (int i = 1; i <= 9; ++i) {
      const Real p = num(Rational(i, 10));
      const Real exact = relative_entropy_exact(n, p, kCtx);
      const Real oracle = relative_entropy_oracle(n, p, kCtx);
      worst = std::max(worst, absd((exact - oracle) / oracle));
      ++checks;
    }
  }
  Detail d;
  d << checks << " points, max relative error " << worst;
  return {worst <= 1e-25, d.str()};
}

Outcome rate_law() {
  Outcome out;
  Detail d;
  d << std::setprecision(8);
  double previous = INFINITY;
  double fitted = 0.0;
  for (long n : {100L, 1000L, 10000L}) {
    const Real nn = num(n);
    const Real scaled = nn * nn * relative_entropy_oracle(n, 1 / nn, kCtx);
    const double dev = absd(scaled - num(Rational(1, 4)));
    fitted = std::max(fitted, dev * static_cast<double>(n));
    d << "n=" << n << ": n^2 D=" << scaled.to_double() << " ";
    if (!(dev < previous) || !(dev <= 5.0 / static_cast<double>(n))) out.pass = false;
    previous = dev;
  }
  d << "fitted C=" << fitted;
  out.detail = d.str();
  return out;
}

Outcome poisson_limit() {
  const Real lambda = num(5);
  const BoundReport poisson = entropy_poisson_large(lambda, 1, kCtx);
  Outcome out;
  Detail d;
  d << std::setprecision(3);
  double previous = INFINITY;
  for (long n : {1000L, 10000L, 100000L}) {
    const BoundReport r = entropy_binomial_stirling_m1(n, lambda / num(n), kCtx);
    const double err = std::max(absd(r.interval.lower() - poisson.interval.lower()),
                                absd(r.interval.upper() - poisson.interval.upper()));
    d << "n=" << n << ": " << err << " ";
    if (!(err < previous)) out.pass = false;
    previous = err;
  }
  if (!(previous <= 1e-3)) out.pass = false;
  out.detail = d.str() + "(max endpoint distance)";
  return out;
}

Outcome entropy_identity() {
  double worst = 0.0;
  for (long n : {5L, 10L, 30L, 100L, 300L}) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    const Real nn = num(n);
    const Real log_fact = log(Real::of(f, kBits));
    for (const char* text : {"0.05", "0.2", "0.5", "0.8", "0.95"}) {
      const Real p = dec(text);
      const Real rhs = log_fact - nn * log(nn) + nn - relative_entropy_oracle(n, p, kCtx) -
                       relative_entropy_oracle(n, 1 - p, kCtx);
      worst = std::max(worst, absd(binomial_entropy_oracle(n, p, kCtx) - rhs));
    }
  }
  Detail d;
  d << "25 points, max error " << worst;
  return {worst <= 1e-25, d.str()};
}

Outcome lemma_checks() {
  Outcome out;
  Detail d;
  d << std::setprecision(3);
  const Real h = dec("0.0001");
  for (long l : {2L, 10L}) {
    const Real lambda = num(l);
    const Real fd =
        (poisson_entropy_oracle(lambda + h, kCtx).value - poisson_entropy_oracle(lambda - h, kCtx).value) / (2 * h);
    const double err = absd(fd - (expected_log_poisson(lambda, kCtx).value - log(lambda)));
    d << "dH/dlambda at " << l << " off by " << err << "; ";
    if (!(err <= 1e-6)) out.pass = false;
  }
  const long n = 10;
  const double q = 0.6;
  auto integrand = [&](double s) { return expected_log_binomial(n, Real::of(s, kBits), kCtx).to_double(); };
  const double integral = n * boost::math::quadrature::gauss<double, 64>::integrate(integrand, q, 1.0);
  const double err = std::fabs(integral - relative_entropy_oracle(n, dec("0.4"), kCtx).to_double());
  d << "D(10,0.4) quadrature off by " << err;
  if (!(err <= 1e-8)) out.pass = false;
  out.detail = d.str();
  return out;
}

Outcome moment_validation() {
  int checks = 0, failures = 0;
  double worst = 0.0;
  const std::vector<Rational> s_values{Rational(1, 2), Rational(2), Rational(7, 3), Rational(10)};
  for (int k = 0; k <= 12; ++k) {
    for (const Rational& s : s_values) {
      ++checks;
      const Real exact = num(poisson_central_moment(k).poly.eval(s));
      const double err = absd(moment_oracle_poisson(k, s, kCtx) - exact) / std::max(1.0, absd(exact));
      worst = std::max(worst, err);
      if (!(err <= kCtx.target_rel_err)) ++failures;
    }
  }
  const std::vector<Rational> p_values{Rational(1, 2), Rational(1, 3), Rational(1, 10), Rational(7, 8)};
  for (int k = 0; k <= 12; ++k) {
    for (long n = 1; n <= 20; ++n) {
      for (const Rational& s : p_values) {
        ++checks;
        if (binomial_central_moment(k).poly.eval(Rational(n), s) != moment_oracle_binomial(k, n, s)) ++failures;
      }
    }
  }
  Detail d;
  d << checks << " checks, " << failures << " failures, worst Poisson relative error " << worst;
  return {failures == 0, d.str()};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 means no limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "large-lambda coefficient table, m = 1..4", 1.0, table_one},
      {2, "relative-entropy coefficient closed forms", 0.0, binomial_closed_forms},
      {3, "expansion prefix stability", 0.0, expansion_prefix},
      {4, "gap values r_m(10), r_m(20)", 1.0, figure_gaps},
      {5, "sandwich soundness against oracles", 30.0, sandwich},
      {6, "exact relative-entropy formula vs oracle", 0.0, exact_formula},
      {7, "rate law n^2 D(n, 1/n) -> 1/4", 0.0, rate_law},
      {8, "closed-form binomial bounds -> Poisson bounds at lambda = 5", 0.0, poisson_limit},
      {9, "entropy decomposition identity", 0.0, entropy_identity},
      {10, "derivative and integral identities", 0.0, lemma_checks},
      {11, "central moment validation", 10.0, moment_validation},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    std::string timing = std::to_string(elapsed).substr(0, 6) + " s";
    if (c.time_limit_s > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(c.time_limit_s)) + " s)";
      if (elapsed >= c.time_limit_s) pass = false;
    }
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  [" << timing
              << "]  " << outcome.detail << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
