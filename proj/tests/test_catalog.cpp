#include "doctest.h"
#include "sheffer/catalog.hpp"
#include "support.hpp"

using sheffer::Poly;
using sheffer::Rational;
using sheffer::RationalSeries;

namespace {

// n! L_n^{(lambda)}(x) = n! sum_k (-1)^k C(n + lambda, n - k) x^k / k!
Poly laguerre_closed(std::size_t n, const Rational& lambda) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational binom(1);
    for (std::size_t i = 1; i <= n - k; ++i) binom *= (lambda + Rational(long(k + i))) / Rational(long(i));
    c[k] = sheffer::factorial(n) / sheffer::factorial(k) * binom * Rational(k % 2 ? -1 : 1);
  }
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("family list") {
  std::vector<std::string> names;
  for (const auto& f : sheffer::list_families()) names.push_back(f.name);
  CHECK(names == std::vector<std::string>{"monomial", "laguerre", "miller-lee", "hermite", "bernoulli", "euler",
                                          "exp-shift", "log-assoc"});
  CHECK(sheffer::list_families()[1].params == std::vector<std::string>{"lambda"});
  CHECK(sheffer::list_families()[2].params == std::vector<std::string>{"m"});
  CHECK_FALSE(sheffer::list_families()[0].extension);
  CHECK(sheffer::list_families()[3].extension);
}

TEST_CASE("make_pair examples") {
  const auto lag = sheffer::make_pair("laguerre", {{"lambda", 0}}, 4);
  CHECK(lag.l().series() == RationalSeries(4, {1, 1, 1, 1, 1}));
  CHECK(lag.h().series() == RationalSeries(4, {0, -1, -1, -1, -1}));
  const auto ml = sheffer::make_pair("miller-lee", {{"m", 1}}, 4);
  CHECK(ml.l().series() == RationalSeries(4, {1, -2, 1}));
  const auto bern = sheffer::make_pair("bernoulli", {}, 3);
  CHECK(bern.l().series() == RationalSeries(3, {1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  CHECK(sheffer::make_pair("log-assoc", {}, 3).is_associated());
}

TEST_CASE("make_pair validation") {
  CHECK_THROWS_AS(sheffer::make_pair("chebyshev", {}, 3), sheffer::UnknownFamily);
  CHECK_THROWS_AS(sheffer::make_pair("laguerre", {}, 3), sheffer::InvalidArgument);
  CHECK_THROWS_AS(sheffer::make_pair("laguerre", {{"lambda", 1}, {"m", 2}}, 3), sheffer::InvalidArgument);
  CHECK_THROWS_AS(sheffer::make_pair("monomial", {{"m", 2}}, 3), sheffer::InvalidArgument);
  CHECK_THROWS_AS(sheffer::make_pair("monomial", {}, 0), sheffer::InvalidArgument);
  // l(0) = 0 when m + 1 = 0 is still invertible: (1 - y)^0 = 1
  CHECK(sheffer::make_pair("miller-lee", {{"m", -1}}, 3).is_associated());

  for (const auto& f : sheffer::list_families()) {
    sheffer::ParamMap params;
    for (const auto& p : f.params) params[p] = Rational(3, 2);
    for (std::size_t order = 1; order <= 32; ++order) {
      const auto pair = sheffer::make_pair(f.name, params, order);
      CHECK(pair.order() == order);
      CHECK_FALSE(pair.l().series()[0].is_zero());
      CHECK(pair.h().series()[0].is_zero());
      CHECK_FALSE(pair.h().series()[1].is_zero());
    }
  }
}

TEST_CASE("binomial_series") {
  CHECK(sheffer::binomial_series(2, 3) == RationalSeries(3, {1, -2, 1}));
  CHECK(sheffer::binomial_series(-1, 3) == RationalSeries(3, {1, 1, 1, 1}));
  CHECK(sheffer::binomial_series(Rational(1, 2), 2) == RationalSeries(2, {1, Rational(-1, 2), Rational(-1, 8)}));
}

TEST_CASE("laguerre sheffer sequence is n! L_n^lambda") {
  for (const Rational& lambda : {Rational(0), Rational(1), Rational(5, 2), Rational(-1, 3)}) {
    const auto p = sheffer::make_pair("laguerre", {{"lambda", lambda}}, 10);
    const auto s = sheffer::sheffer_sequence(p, 10).polys;
    for (std::size_t n = 0; n <= 10; ++n) CHECK(s[n] == laguerre_closed(n, lambda));
  }
}

TEST_CASE("hermite three-term recurrences") {
  const auto p = sheffer::make_pair("hermite", {}, 12);
  const auto he = sheffer::sheffer_sequence(p, 12).polys;
  const auto sa = sheffer::sheffer_appell_sequence(p, 12).polys;
  CHECK(he[0] == Poly(1));
  CHECK(he[1] == Poly::x());
  for (std::size_t n = 1; n < 12; ++n) {
    const Rational nn(static_cast<long>(n));
    CHECK(he[n + 1] == Poly::x() * he[n] - nn * he[n - 1]);
    // e^{xy - y^2}: variance-2 Hermite
    CHECK(sa[n + 1] == Poly::x() * sa[n] - Rational(2) * nn * sa[n - 1]);
  }
}

TEST_CASE("bernoulli and euler values at zero") {
  const auto b = sheffer::sheffer_sequence(sheffer::make_pair("bernoulli", {}, 8), 8).polys;
  const std::vector<Rational> bn = {1, Rational(-1, 2), Rational(1, 6), 0, Rational(-1, 30), 0, Rational(1, 42),
                                    0, Rational(-1, 30)};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(b[n].eval(0) == bn[n]);
  const auto e = sheffer::sheffer_sequence(sheffer::make_pair("euler", {}, 7), 7).polys;
  const std::vector<Rational> en = {1, Rational(-1, 2), 0, Rational(1, 4), 0, Rational(-1, 2), 0, Rational(17, 8)};
  for (std::size_t n = 0; n <= 7; ++n) CHECK(e[n].eval(0) == en[n]);
  // B_n(x + 1) - B_n(x) = n x^{n-1}
  for (std::size_t n = 1; n <= 8; ++n)
    for (long x = -2; x <= 2; ++x) CHECK(b[n].eval(x + 1) - b[n].eval(x) == Rational(long(n)) * sheffer::pow(x, int(n - 1)));
}

TEST_CASE("exp-shift and log-assoc") {
  // e^{(x - 1) y}
  const auto s = sheffer::sheffer_sequence(sheffer::make_pair("exp-shift", {}, 5), 5).polys;
  for (std::size_t n = 0; n <= 5; ++n) {
    Poly expect(1);
    for (std::size_t i = 0; i < n; ++i) expect = expect * Poly(std::vector<Rational>{-1, 1});
    CHECK(s[n] == expect);
  }
  // falling factorials x (x - 1) ... (x - n + 1)
  const auto f = sheffer::sheffer_sequence(sheffer::make_pair("log-assoc", {}, 6), 6).polys;
  for (std::size_t n = 0; n <= 6; ++n) {
    Poly expect(1);
    for (std::size_t i = 0; i < n; ++i) expect = expect * Poly(std::vector<Rational>{-long(i), 1});
    CHECK(f[n] == expect);
  }
}
