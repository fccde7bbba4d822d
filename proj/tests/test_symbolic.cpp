#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "entbounds/errors.hpp"
#include "entbounds/laurent.hpp"
#include "entbounds/polynomial.hpp"
#include "entbounds/serialize.hpp"
#include "test_support.hpp"

using namespace entbounds;
using testing::Q;
using testing::R;

TEST_SUITE("rational") {
  TEST_CASE("normalized on construction") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).str() == "5/1");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(binomial(10, 3) == 120);
  }

  TEST_CASE("string round trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
    std::uniform_int_distribution<long> den(1, 1'000'000'000L);
    for (int i = 0; i < 500; ++i) {
      const Rational r(num(rng), den(rng));
      CHECK(Rational::parse(r.str()) == r);
    }
    const Rational big = pow(Rational(12345678901L, 98765), 9);
    CHECK(Rational::parse(big.str()) == big);
  }

  TEST_CASE("decimal parsing and formatting") {
    CHECK(parse_decimal("0.05") == Rational(1, 20));
    CHECK(parse_decimal("-1.5e-3") == Rational(-3, 2000));
    CHECK(parse_decimal("7/3") == Rational(7, 3));
    CHECK(format_rational(Rational(1, 20)) == "0.05");
    CHECK(format_rational(Rational(7, 3)) == "7/3");
    CHECK(format_rational(Rational(-12)) == "-12");
    CHECK_THROWS(parse_decimal("1.2.3"));
  }
}

TEST_SUITE("polynomials") {
  TEST_CASE("UniPoly trimming and evaluation") {
    const UniPoly p({Rational(0), Rational(1), Rational(3), Rational(0)});
    CHECK(p.degree() == 2);
    CHECK(UniPoly().degree() == -1);
    CHECK(p.eval(Rational(1)) == Rational(4));
    CHECK(p.derivative() == UniPoly({Rational(1), Rational(6)}));
    CHECK(testing::close(p.eval(R("0.5")), R("1.25"), 1e-70));
  }

  TEST_CASE("BiPoly substitution") {
    // n*s - n*s^2
    const BiPoly b({UniPoly(), UniPoly({Rational(0), Rational(1)}), UniPoly({Rational(0), Rational(-1)})});
    CHECK(b.eval(Rational(4), Rational(1, 2)) == Rational(1));
    CHECK(b.at_n(Rational(2)) == UniPoly({Rational(0), Rational(2), Rational(-2)}));
    CHECK(b.degree_n() == 1);
    CHECK(b.derivative_s().eval(Rational(3), Rational(0)) == Rational(3));
  }
}

TEST_SUITE("integration") {
  TEST_CASE("tail integral examples") {
    CHECK(laurent_integrate_tail(LaurentPoly::monomial(1, -2)) == LaurentPoly::monomial(1, -1));
    // (3s^2 + s) / (3 s^4)
    const LaurentPoly f = Rational(1, 3) * LaurentPoly(UniPoly({0, 1, 3})).shifted(-4);
    const LaurentPoly g = laurent_integrate_tail(f);
    CHECK(g.coeff(-1) == Rational(1));
    CHECK(g.coeff(-2) == Rational(1, 6));
    CHECK(g.terms().size() == 2);
    CHECK_THROWS_AS(laurent_integrate_tail(LaurentPoly::monomial(1, -1)), NonIntegrableTail);
    CHECK_THROWS_AS(laurent_integrate_tail(LaurentPoly::monomial(1, 0)), NonIntegrableTail);
  }

  TEST_CASE("interval integral examples") {
    const LogLaurent inv = loglog_integrate_interval(LaurentPoly::monomial(1, -1));
    CHECK(inv.log_coeff() == Rational(-1));
    CHECK(inv.laurent().is_zero());
    const LogLaurent one = loglog_integrate_interval(LaurentPoly::monomial(1, 0));
    CHECK(one == LogLaurent(LaurentPoly({{0, Rational(1)}, {1, Rational(-1)}}), Rational(0)));
  }

  TEST_CASE("both integrals are linear") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
      LaurentPoly f, g;
      for (int e = -6; e <= -2; ++e) {
        f.add_term(e, Rational(c(rng), 1 + std::abs(c(rng))));
        g.add_term(e, Rational(c(rng), 1 + std::abs(c(rng))));
      }
      const Rational a(c(rng), 7), b(c(rng), 5);
      CHECK(laurent_integrate_tail(a * f + b * g) ==
            a * laurent_integrate_tail(f) + b * laurent_integrate_tail(g));
      LaurentPoly h = f.shifted(4);
      CHECK(loglog_integrate_interval(a * h + b * g) ==
            a * loglog_integrate_interval(h) + b * loglog_integrate_interval(g));
    }
  }

  TEST_CASE("tail integral agrees with quadrature") {
    // On [l0, inf) substitute s = l0/u, so the integral becomes l0 * int_0^1 f(l0/u) / u^2 du,
    // a polynomial integrand on a finite interval.
    using boost::math::quadrature::gauss_kronrod;
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
      LaurentPoly f;
      for (int e = -7; e <= -2; ++e) f.add_term(e, Rational(c(rng), 3));
      const Rational l0(1 + trial % 5, 1 + trial % 3);
      const double l0d = Real::of(l0, 64).to_double();
      auto integrand = [&](double u) {
        if (u == 0.0) return 0.0;
        const double s = l0d / u;
        double acc = 0.0;
        for (const auto& [e, k] : f.terms()) acc += Real::of(k, 64).to_double() * std::pow(s, e);
        return acc * l0d / (u * u);
      };
      const double quad = gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 8, 1e-14);
      const double exact = Real::of(laurent_integrate_tail(f).eval(l0), 64).to_double();
      CHECK(quad == doctest::Approx(exact).epsilon(1e-11));
    }
  }
}

TEST_SUITE("log-laurent") {
  TEST_CASE("evaluation") {
    const LogLaurent inv(LaurentPoly::monomial(1, -1), Rational(0));
    CHECK(testing::close(inv.eval(R("0.5")), R("2"), 1e-70));
    const LogLaurent f(LaurentPoly({{-1, Rational(1)}, {1, Rational(-1)}}), Rational(2));
    const Real expected = R("1.5") - 2 * log(Real::of(2, testing::kBits));
    CHECK(testing::close(f.eval(R("0.5")), expected, 1e-70));
    CHECK_THROWS_AS(f.eval(R("0")), DomainError);
    CHECK_THROWS_AS(f.eval(R("1.5")), DomainError);
  }

  TEST_CASE("log term vanishes at q = 1") {
    const LogLaurent f(LaurentPoly({{-3, Rational(5, 7)}, {0, Rational(-2)}, {2, Rational(1, 9)}}), Rational(13, 4));
    CHECK(testing::close(f.eval(R("1")), Real::of(f.laurent().eval(Rational(1)), testing::kBits), 1e-74));
    CHECK((f - LogLaurent(f.laurent(), Rational(0))).eval(R("1")).is_zero());
  }

  TEST_CASE("symmetrization in pq") {
    // f(q) = log q + 1/q gives f(q) + f(p) = log(pq) + 1/(pq)
    const LogLaurent f(LaurentPoly::monomial(1, -1), Rational(1));
    const LogLaurent g = symmetrize_pq(f);
    CHECK(g == LogLaurent(LaurentPoly::monomial(1, -1), Rational(1)));
    // f(q) = q^2 gives q^2 + p^2 = 1 - 2pq
    const LogLaurent h = symmetrize_pq(LogLaurent(LaurentPoly::monomial(1, 2), Rational(0)));
    CHECK(h == LogLaurent(LaurentPoly({{0, Rational(1)}, {1, Rational(-2)}}), Rational(0)));
  }

  TEST_CASE("json round trip") {
    const LogLaurent f(LaurentPoly({{-2, Rational(1, 6)}, {0, Rational(1, 6)}, {1, Rational(2)}}), Rational(-4));
    const Json j = to_json(f);
    CHECK(j["log"] == "-4/1");
    CHECK(j["terms"]["-2"] == "1/6");
    CHECK(log_laurent_from_json(Json::parse(j.dump())) == f);
  }
}

TEST_SUITE("precision") {
  TEST_CASE("context validation") {
    PrecisionContext ctx;
    CHECK(ctx.bits == 256);
    CHECK(ctx.round_trip_digits() == 80);
    ctx.bits = 32;
    CHECK_THROWS(ctx.validate());
  }

  TEST_CASE("interval invariant") {
    CHECK_THROWS_AS(Interval(R("2"), R("1")), std::logic_error);
    const Interval iv(R("1"), R("3"));
    CHECK(iv.midpoint() == 2);
    CHECK(iv.contains(R("3")));
    CHECK_FALSE(iv.contains(R("3.0001")));
  }

  TEST_CASE("decimal strings round trip at full precision") {
    const Real x = log(R("10"));
    CHECK(Real::parse(x.str(PrecisionContext{}.round_trip_digits()), testing::kBits) == x);
  }
}
