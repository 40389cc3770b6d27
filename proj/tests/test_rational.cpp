#include "doctest.h"
#include "quotser/rational.hpp"

#include <sstream>
#include <stdexcept>

using namespace quotser;

TEST_CASE("rational normalisation and ordering") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator_str() == "2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-1, 3) < Rational(1, 4));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 3).is_integer());
  CHECK(Rational(-2, 5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));

  Rational acc(5, 7);
  acc.add_mul(Rational(2, 3), Rational(3, 14));
  CHECK(acc == Rational(5, 7) + Rational(1, 7));
  acc.sub_mul(Rational(1, 7), Rational(2));
  CHECK(acc == Rational(4, 7));
}

TEST_CASE("rational inverse, powers, and division errors") {
  CHECK(Rational(3, 4).inverse() == Rational(4, 3));
  CHECK(Rational(-2).inverse() == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational string round trip") {
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-5") == Rational(-5));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(-3).str() == "-3");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);

  std::ostringstream os;
  os << Rational(-7, 2);
  CHECK(os.str() == "-7/2");
}

TEST_CASE("rational survives word-size overflow") {
  Rational p(1);
  for (int i = 0; i < 40; ++i) p *= Rational(10);
  Rational q = p + Rational(1, 3);
  CHECK((q - p) * Rational(3) == Rational(1));
  CHECK(p.pow(2).numerator_str().size() == 81);
}

TEST_CASE("binomial with negative top argument") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(5, 0) == Rational(1));
  CHECK(binomial(5, 6) == Rational(0));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(-1, 3) == Rational(-1));
  CHECK(binomial(-2, 2) == Rational(3));
  CHECK(binomial(-3, 1) == Rational(-3));
  CHECK(binomial(4, -1) == Rational(0));
}
