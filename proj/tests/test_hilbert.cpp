#include "doctest.h"
#include "quotser/hilbert.hpp"
#include "quotser/jet_series.hpp"
#include "quotser/polynomial.hpp"

#include <map>
#include <stdexcept>

using namespace quotser;

namespace {

QSeries expand(const std::vector<long>& num, const std::vector<long>& den, unsigned order) {
  return RationalFunction(UniPolynomial::from_longs(num), UniPolynomial::from_longs(den))
      .expand("q", order);
}

}  // namespace

TEST_CASE("change of variables inverts itself") {
  const QtChangeOfVars cv = qt_change_of_vars({2}, 8);
  // q(t(q)) is the identity series in q.
  const Series<Jet> back = cv.q_of_t.compose(cv.t_of_q);
  CHECK(back == Series<Jet>::identity("q", 8, Jet(cv.q_of_t[0].spec())));
  // t(q) starts as -q plus higher order.
  CHECK(cv.t_of_q[0].is_zero());
  CHECK(cv.t_of_q[1].constant_part() == Rational(-1));
}

TEST_CASE("jacobian series matches its product form") {
  // With one insertion, D - t D' for D = (1-t)(1-x t) equals 1 - x t^2.
  const QtChangeOfVars cv = qt_change_of_vars({2}, 6);
  const JetSpecPtr js = cv.a_of_t[0].spec();
  Series<Jet> expect = Series<Jet>::constant("t", 6, Jet::constant(js, Rational(1)));
  expect[2] -= Jet::variable(js, 0);
  CHECK(cv.a_of_t == expect);

  // No insertions: a is identically 1.
  const QtChangeOfVars cv0 = qt_change_of_vars({}, 6);
  CHECK(cv0.a_of_t ==
        Series<Jet>::constant("t", 6, Jet::constant(cv0.a_of_t[0].spec(), Rational(1))));
}

TEST_CASE("rank one series for simple intersection numbers") {
  // M2 = 1, rest zero: W = (1-t)^{-1} at t(q), and 1 - t(q) = 1/(1-q).
  SurfaceNumerics s;
  s.M2 = 1;
  const Series<Jet> w = hilbert_w_series(s, 6);
  CHECK(jet_component(w, {}) == expand({1, -1}, {1}, 6));

  // MK = 1, rest zero: W = (1+t)^{-1} = (1-q)/(1-2q).
  SurfaceNumerics s2;
  s2.MK = 1;
  CHECK(jet_component(hilbert_w_series(s2, 6), {}) == expand({1, -1}, {1, -2}, 6));

  // All zero: W = 1.
  SurfaceNumerics s3;
  CHECK(jet_component(hilbert_w_series(s3, 6), {}) == expand({1}, {1}, 6));
}

TEST_CASE("descendent component extraction agrees with the jet series") {
  SurfaceNumerics s;
  s.M2 = 2;
  s.MK = -1;
  s.K2 = 1;
  s.alphaM = {3};
  s.jet_caps = {2};
  const Series<Jet> w = hilbert_w_series(s, 8);
  for (unsigned e = 0; e <= 2; ++e)
    CHECK(hilbert_descendent_series(s, {e}, 8) == jet_component(w, {e}));
  CHECK_THROWS_AS(hilbert_descendent_series(s, {3}, 8), std::invalid_argument);

  SurfaceNumerics bad;
  bad.alphaM = {1};
  CHECK_THROWS_AS(hilbert_w_series(bad, 4), std::invalid_argument);
}

TEST_CASE("universal factor extraction satisfies its defining relations") {
  SurfaceNumerics base;
  base.M2 = 1;
  base.MK = 2;
  base.K2 = -1;
  base.jet_caps = {1};
  std::map<std::vector<long>, Series<Jet>> runs;
  for (long d : {0L, 1L, 3L}) {
    SurfaceNumerics s = base;
    s.alphaM = {d};
    runs.insert({{d}, hilbert_w_series(s, 8)});
  }
  const UniversalFactors uf = universal_series_extract(runs);
  const JetSpecPtr js = runs.at({0})[0].spec();
  const Series<Jet> one = Series<Jet>::constant("q", 8, Jet::constant(js, Rational(1)));
  CHECK(uf.a * runs.at({0}) == one);
  REQUIRE(uf.c.size() == 1);
  REQUIRE(uf.c[0].has_value());
  CHECK(*uf.c[0] * runs.at({0}) == runs.at({1}));
  // The degree-3 run is A^{-1} C^3 by multiplicativity of the universal form.
  CHECK(uf.a.invert() * uf.c[0]->int_power(3) == runs.at({3}));

  std::map<std::vector<long>, Series<Jet>> no_zero;
  no_zero.insert({{1}, runs.at({1})});
  CHECK_THROWS_AS(universal_series_extract(no_zero), std::invalid_argument);
}

TEST_CASE("product geometry coefficient identity") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Rational expect = Rational(4 * static_cast<long>(n) - 10) *
                            Rational(n % 2 == 0 ? 1 : -1);
    CHECK(p1xp1_coefficient(n) == expect);
  }
  CHECK_THROWS_AS(p1xp1_coefficient(0), std::invalid_argument);
}

TEST_CASE("product geometry series assembles to its rational form") {
  const QSeries s = p1xp1_z_series(11);
  CHECK(s[0] == Rational(0));
  for (unsigned n = 1; n <= 11; ++n) CHECK(s[n] == Rational(10 - 4 * static_cast<long>(n)));
  CHECK(s == expand({0, 6, -10}, {1, -2, 1}, 11));
}
