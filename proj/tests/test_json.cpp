#include "doctest.h"
#include "quotser/jet.hpp"
#include "quotser/polynomial.hpp"
#include "quotser/series_json.hpp"

#include <stdexcept>

using namespace quotser;

TEST_CASE("plain series serialises with fixed key order") {
  QSeries s("q", 2, Rational(0));
  s[0] = Rational(1);
  s[1] = Rational(-1, 2);
  CHECK(series_to_json(s).dump() ==
        "{\"variable\":\"q\",\"order\":2,\"coefficients\":[\"1\",\"-1/2\",\"0\"]}");
}

TEST_CASE("plain series round trips") {
  QSeries s("q", 4, Rational(0));
  s[2] = Rational(7, 3);
  s[4] = Rational(-22);
  CHECK(series_from_json(series_to_json(s)) == s);
}

TEST_CASE("malformed series JSON is rejected") {
  CHECK_THROWS_AS(series_from_json(ordered_json::array()), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(ordered_json{{"variable", "q"}}), std::invalid_argument);
  ordered_json bad = {{"variable", "q"}, {"order", 2}, {"coefficients", {"1", "2"}}};
  CHECK_THROWS_AS(series_from_json(bad), std::invalid_argument);
  ordered_json neg = {{"variable", "q"}, {"order", -1}, {"coefficients", ordered_json::array()}};
  CHECK_THROWS_AS(series_from_json(neg), std::invalid_argument);
}

TEST_CASE("jet series serialises sparse coefficient objects") {
  const JetSpecPtr js = make_jet_spec({1});
  Series<Jet> s("q", 1, Jet(js));
  s[0] = Jet::constant(js, Rational(1));
  s[1] = Jet::variable(js, 0) * Rational(-3);
  CHECK(series_to_json(s).dump() ==
        "{\"variable\":\"q\",\"order\":1,\"jet_caps\":[1],"
        "\"coefficients\":[{\"0\":\"1\"},{\"1\":\"-3\"}]}");
}

TEST_CASE("jet series without variables uses the plain schema") {
  const JetSpecPtr js = make_jet_spec({});
  Series<Jet> s("q", 1, Jet(js));
  s[0] = Jet::constant(js, Rational(5));
  CHECK(series_to_json(s).dump() ==
        "{\"variable\":\"q\",\"order\":1,\"coefficients\":[\"5\",\"0\"]}");
}

TEST_CASE("rational function serialisation") {
  const RationalFunction f(UniPolynomial::from_longs({1, -2}),
                           UniPolynomial::from_longs({1, -2, 1}));
  CHECK(ratfunc_to_json(f).dump() ==
        "{\"numerator\":[\"1\",\"-2\"],\"denominator\":[\"1\",\"-2\",\"1\"]}");
  CHECK(ratfunc_to_json(RationalFunction()).dump() ==
        "{\"numerator\":[\"0\"],\"denominator\":[\"1\"]}");
}

TEST_CASE("latex display factors rational denominators") {
  const RationalFunction f(UniPolynomial::from_longs({0, 6, -10}),
                           UniPolynomial::from_longs({1, -2, 1}));
  CHECK(latex_rational_function(f, "q") == "\\frac{q(6 - 10q)}{(1 - q)^{2}}");

  const RationalFunction g(UniPolynomial::from_longs({1, -2}),
                           UniPolynomial::from_longs({1, -2, 1}));
  CHECK(latex_rational_function(g, "q") == "\\frac{(1 - 2q)}{(1 - q)^{2}}");

  // Irrational roots stay unfactored.
  const RationalFunction h(UniPolynomial::from_longs({1}),
                           UniPolynomial::from_longs({1, -6, 1}));
  CHECK(latex_rational_function(h, "q") == "\\frac{1}{1 - 6q + q^{2}}");

  CHECK(latex_rational_function(RationalFunction(), "q") == "0");
  CHECK(latex_rational_function(
            RationalFunction(UniPolynomial::constant(Rational(5, 3)),
                             UniPolynomial::constant(Rational(1))),
            "q") == "\\frac{5}{3}");
}
