#include "doctest.h"
#include "quotser/linalg.hpp"
#include "quotser/polynomial.hpp"

#include <stdexcept>

using namespace quotser;

TEST_CASE("polynomial construction trims and evaluates") {
  const UniPolynomial p = UniPolynomial::from_longs({1, -3, 2, 0, 0});
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == Rational(1));
  CHECK(p.coefficient(5) == Rational(0));
  CHECK(p.evaluate(Rational(2)) == Rational(3));
  CHECK(p.evaluate(Rational(1, 2)) == Rational(0));

  CHECK(UniPolynomial().is_zero());
  CHECK(UniPolynomial().degree() == -1);
  CHECK(UniPolynomial::from_longs({0, 0}).is_zero());
  CHECK(UniPolynomial::constant(Rational(4)).degree() == 0);
}

TEST_CASE("polynomial ring operations") {
  const UniPolynomial a = UniPolynomial::from_longs({1, 1});
  const UniPolynomial b = UniPolynomial::from_longs({-1, 1});
  CHECK(a * b == UniPolynomial::from_longs({-1, 0, 1}));
  CHECK(a + b == UniPolynomial::from_longs({0, 2}));
  CHECK(a - a == UniPolynomial());
  CHECK(a.scaled(Rational(1, 2)) ==
        UniPolynomial(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  CHECK((-a) == UniPolynomial::from_longs({-1, -1}));

  const UniPolynomial c = UniPolynomial::from_longs({2, 0, 6});
  CHECK(c.derivative() == UniPolynomial::from_longs({0, 12}));
  CHECK(c.monic() ==
        UniPolynomial(std::vector<Rational>{Rational(1, 3), Rational(0), Rational(1)}));
}

TEST_CASE("euclidean division and gcd") {
  const UniPolynomial a = UniPolynomial::from_longs({-1, 0, 0, 0, 1});
  const UniPolynomial b = UniPolynomial::from_longs({-1, 1});
  auto [q, r] = UniPolynomial::divmod(a, b);
  CHECK(q == UniPolynomial::from_longs({1, 1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(q * b + r == a);

  auto [q2, r2] = UniPolynomial::divmod(b, a);
  CHECK(q2.is_zero());
  CHECK(r2 == b);
  CHECK_THROWS_AS(UniPolynomial::divmod(a, UniPolynomial()), std::domain_error);

  // gcd(x^4-1, x^2-1) = x^2-1, returned monic.
  const UniPolynomial d = poly_gcd(a, UniPolynomial::from_longs({-1, 0, 1}));
  CHECK(d == UniPolynomial::from_longs({-1, 0, 1}));
  CHECK(poly_gcd(a, UniPolynomial()) == a.monic());
  CHECK(poly_gcd(UniPolynomial(), UniPolynomial()).is_zero());
  CHECK(poly_gcd(UniPolynomial::from_longs({1, 1}), UniPolynomial::from_longs({2, 1})) ==
        UniPolynomial::from_longs({1}));
}

TEST_CASE("rational function reduction and expansion") {
  // (q^2-1)/(q-1) reduces to (q+1)/1 up to normalisation.
  const RationalFunction f(UniPolynomial::from_longs({-1, 0, 1}),
                           UniPolynomial::from_longs({-1, 1}));
  CHECK(f.numerator() == UniPolynomial::from_longs({1, 1}));
  CHECK(f.denominator() == UniPolynomial::from_longs({1}));

  // 1/(1-q)^2 has Taylor coefficients k+1.
  const RationalFunction g(UniPolynomial::from_longs({1}),
                           UniPolynomial::from_longs({1, -2, 1}));
  const QSeries s = g.expand("q", 6);
  for (unsigned k = 0; k <= 6; ++k) CHECK(s[k] == Rational(static_cast<long>(k) + 1));

  CHECK_THROWS_AS(RationalFunction(UniPolynomial::from_longs({1}),
                                   UniPolynomial::from_longs({0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(RationalFunction(UniPolynomial::from_longs({1}), UniPolynomial()),
                  std::invalid_argument);
}

TEST_CASE("denominator constant term is normalised to 1") {
  const RationalFunction f(UniPolynomial::from_longs({6}), UniPolynomial::from_longs({2, 4}));
  CHECK(f.denominator().coefficient(0) == Rational(1));
  CHECK(f.numerator() == UniPolynomial::from_longs({3}));
  CHECK(f.denominator() == UniPolynomial::from_longs({1, 2}));
}

TEST_CASE("exact linear solve and kernel") {
  Matrix m = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  const auto x = solve_linear(m, {Rational(5), Rational(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));

  Matrix inconsistent = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(!solve_linear(inconsistent, {Rational(0), Rational(1)}).has_value());

  Matrix rank1 = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  const auto basis = kernel_basis(rank1, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] * Rational(1) + basis[0][1] * Rational(2) == Rational(0));
}
