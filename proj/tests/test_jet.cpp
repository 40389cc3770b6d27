#include "doctest.h"
#include "quotser/jet.hpp"
#include "quotser/multiseries.hpp"
#include "quotser/series.hpp"

#include <stdexcept>

using namespace quotser;

TEST_CASE("jet spec enumerates the exponent box") {
  const JetSpecPtr spec = make_jet_spec({2, 1});
  CHECK(spec->vars() == 2);
  CHECK(spec->size() == 6);
  CHECK(spec->index_of({0, 0}) == 0);
  CHECK(spec->total_degree(spec->index_of({2, 1})) == 3);
  CHECK(spec->monomial_name(0) == "1");
  CHECK(spec->exponent_key(spec->index_of({2, 1})) == "2,1");

  // degree_order lists indices by ascending total degree.
  unsigned last = 0;
  for (std::size_t idx : spec->degree_order()) {
    CHECK(spec->total_degree(idx) >= last);
    last = spec->total_degree(idx);
  }

  // Sums leaving the box are flagged, not rounded.
  const std::size_t x1sq = spec->index_of({2, 0});
  CHECK(spec->sum_index(x1sq, x1sq) == JetSpec::kNoIndex);
  CHECK(spec->sum_index(0, x1sq) == x1sq);
}

TEST_CASE("jet arithmetic reduces mod the cap ideal") {
  const JetSpecPtr spec = make_jet_spec({2});
  const Jet x = Jet::variable(spec, 0);
  const Jet one = Jet::constant(spec, Rational(1));

  Jet p = one + x;              // 1 + x
  Jet sq = p * p;               // 1 + 2x + x^2
  CHECK(sq.coeff({0}) == Rational(1));
  CHECK(sq.coeff({1}) == Rational(2));
  CHECK(sq.coeff({2}) == Rational(1));
  Jet cube = sq * p;            // x^3 truncates away
  CHECK(cube.coeff({2}) == Rational(3));

  // (1+x)^{-1} = 1 - x + x^2 in the quotient ring.
  const Jet inv = p.inverse();
  CHECK(inv.coeff({0}) == Rational(1));
  CHECK(inv.coeff({1}) == Rational(-1));
  CHECK(inv.coeff({2}) == Rational(1));
  CHECK(p * inv == one);
  CHECK(p.int_power(-2) * p.int_power(2) == one);

  CHECK(!x.is_unit());
  CHECK_THROWS_AS(x.inverse(), std::domain_error);
}

TEST_CASE("jet truncation onto a smaller box") {
  const JetSpecPtr big = make_jet_spec({2, 2});
  const JetSpecPtr small = make_jet_spec({1, 1});
  Jet j(big);
  j[big->index_of({2, 2})] = Rational(7);
  j[big->index_of({1, 0})] = Rational(3);
  const Jet t = j.truncated(small);
  CHECK(t.coeff({1, 0}) == Rational(3));
  CHECK(t.coeff({0, 1}) == Rational(0));
  CHECK(t.spec()->size() == 4);
}

TEST_CASE("series over the jet ring") {
  const JetSpecPtr spec = make_jet_spec({1});
  const Jet one = Jet::constant(spec, Rational(1));
  const Jet x = Jet::variable(spec, 0);

  // s = 1 + (1+x) q; s^{-1} alternates with jet-weight k at q^k.
  Series<Jet> s = Series<Jet>::linear("q", 4, one, one + x);
  const Series<Jet> inv = s.invert();
  for (unsigned k = 0; k <= 4; ++k) {
    const Rational expect(k % 2 == 0 ? 1 : -1);
    CHECK(inv[k].coeff({0}) == expect);
    CHECK(inv[k].coeff({1}) == expect * Rational(static_cast<long>(k)));
  }
  CHECK((s * inv) == Series<Jet>::constant("q", 4, one));
}

TEST_CASE("multivariate truncation is a ring map") {
  const JetSpecPtr jspec = make_jet_spec({});
  const Jet one = Jet::constant(jspec, Rational(1));
  const std::vector<unsigned> caps = {3, 3};

  const MultiSeries h0 = MultiSeries::variable(caps, 4, jspec, 0);
  const MultiSeries h1 = MultiSeries::variable(caps, 4, jspec, 1);
  const MultiSeries u = MultiSeries::constant(caps, 4, one) + h0 + h1;

  // (1 + h0 + h1)(1 + h0 + h1)^{-1} = 1 within the truncation.
  CHECK(u * u.invert() == MultiSeries::constant(caps, 4, one));

  // Per-variable caps clip independently of the total cap.
  const MultiSeries p = h0.int_power(3) * h0;
  CHECK(p.terms().empty());
  const MultiSeries q = h0 * h0 * h1;
  CHECK(q.coeff({2, 1}) == one);

  // total_cap clips sums of exponents.
  const MultiSeries r = h0.int_power(2) * h1.int_power(2) * h0;
  CHECK(r.terms().empty());
}

TEST_CASE("multiseries coefficients accumulate exactly") {
  const JetSpecPtr jspec = make_jet_spec({1});
  const Jet one = Jet::constant(jspec, Rational(1));
  const Jet x = Jet::variable(jspec, 0);
  const std::vector<unsigned> caps = {2};

  MultiSeries a = MultiSeries::constant(caps, 2, one);
  a.set_coeff({1}, x);
  const MultiSeries sq = a * a;
  CHECK(sq.coeff({0}) == one);
  CHECK(sq.coeff({1}) == x * Rational(2));
  CHECK(sq.coeff({2}) == Jet(jspec));  // x^2 dies in the jet box
}
