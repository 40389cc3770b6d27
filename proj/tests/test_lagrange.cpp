#include "doctest.h"
#include "quotser/jet_series.hpp"
#include "quotser/lagrange.hpp"
#include "quotser/polynomial.hpp"

#include <vector>

using namespace quotser;

namespace {

QSeries expand(const std::vector<long>& num, const std::vector<long>& den, unsigned order) {
  return RationalFunction(UniPolynomial::from_longs(num), UniPolynomial::from_longs(den))
      .expand("q", order);
}

// Coefficients of prod_j (g + a_j) as jets, lowest degree first.
std::vector<Jet> monic_from_shifts(const JetSpecPtr& js, const std::vector<Rational>& a) {
  std::vector<Jet> c = {Jet::constant(js, Rational(1))};
  for (const Rational& s : a) {
    std::vector<Jet> next(c.size() + 1, Jet(js));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] += c[k] * s;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

TEST_CASE("root branches satisfy their defining equation") {
  const QuotProblem p(2, {Rational(2), Rational(4)}, {1}, {2}, 8);
  const auto roots = solve_all_roots(p);
  REQUIRE(roots.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(roots[i][0].constant_part() == -p.weights[i]);
    // X(g_i) = (-1)^N q, here +q.
    const Series<Jet> img = root_map(p, roots[i]);
    const JetSpecPtr js = p.jet_spec();
    Series<Jet> q_id = Series<Jet>::identity("q", 8, Jet(js));
    CHECK(img == q_id);
  }
  // The Jacobian factor is 1 + O(q).
  CHECK(k_factor(p, roots)[0] == Jet::constant(p.jet_spec(), Rational(1)));
}

TEST_CASE("factorization multiplies back to the branch polynomial") {
  const QuotProblem p(2, {Rational(2), Rational(4)}, {1}, {2}, 6);
  const EFFactorization ef = ef_recursion(p);
  const std::size_t l = p.insertions();
  REQUIRE(ef.e.size() == 2);
  REQUIRE(ef.f.size() == l + 1);

  const JetSpecPtr js = p.jet_spec();
  const unsigned ord = p.order;

  // e holds the non-leading coefficients of a monic degree-N factor.
  std::vector<Series<Jet>> e = ef.e;
  e.push_back(Series<Jet>::constant("q", ord, Jet::constant(js, Rational(1))));

  // P(g) = prod_j (g+w_j) - q prod_j (g+w_j-1) prod_m (1-x_m g).
  const std::vector<Jet> lead = monic_from_shifts(js, p.weights);
  std::vector<Rational> shifted;
  for (const Rational& w : p.weights) shifted.push_back(w - Rational(1));
  std::vector<Jet> tail = monic_from_shifts(js, shifted);
  for (std::size_t m = 0; m < l; ++m) {
    std::vector<Jet> next(tail.size() + 1, Jet(js));
    const Jet xm = Jet::variable(js, m);
    for (std::size_t k = 0; k < tail.size(); ++k) {
      next[k] += tail[k];
      next[k + 1] -= tail[k] * xm;
    }
    tail = std::move(next);
  }

  for (std::size_t k = 0; k <= 2 + l; ++k) {
    Series<Jet> prod("q", ord, Jet(js));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (k < i || k - i >= ef.f.size()) continue;
      prod += e[i] * ef.f[k - i];
    }
    Series<Jet> pk("q", ord, Jet(js));
    if (k < lead.size()) pk[0] += lead[k];
    if (ord >= 1 && k < tail.size()) pk[1] -= tail[k];
    CHECK(prod == pk);
  }
}

TEST_CASE("zero-weight factorization matches the explicit coefficients") {
  for (int n = 1; n <= 3; ++n) {
    const auto e = ef_specialized_check(n, 10);
    REQUIRE(e.size() == static_cast<std::size_t>(n));
    // e_0 = (-1)^{N+1} q/(1-q).
    const Rational lead(n % 2 == 0 ? -1 : 1);
    CHECK(e[0][0] == Rational(0));
    for (unsigned k = 1; k <= 10; ++k) CHECK(e[0][k] == lead);
  }
}

TEST_CASE("decoupled form agrees with the localization sum at fixed weights") {
  const QuotProblem p(2, {Rational(2), Rational(4)}, {1}, {2}, 8);
  CHECK(w_closed_form_at(p) == quot_oracle_series_at(p));
  const QuotProblem p2(2, {Rational(3), Rational(9)}, {}, {}, 8);
  CHECK(w_closed_form_at(p2) == quot_oracle_series_at(p2));
}

TEST_CASE("closed form reproduces the rank 2 rational function") {
  const QuotProblem p(2, {}, {}, {}, 10);
  const QSeries w = jet_component(w_closed_form(p), {});
  CHECK(w == expand({1, -8, 16}, {1, -8, 14, -8, 1}, 10));
}

TEST_CASE("closed form at rank 1 and rank 3") {
  const QuotProblem p1(1, {}, {}, {}, 8);
  CHECK(jet_component(w_closed_form(p1), {}) == expand({1, -2}, {1, -2, 1}, 8));

  const QuotProblem p3(3, {}, {}, {}, 5);
  const QSeries w3 = jet_component(w_closed_form(p3), {});
  const std::vector<long> expect = {1, 0, -3, -240, -5370, -83088};
  for (unsigned k = 0; k <= 5; ++k) CHECK(w3[k] == Rational(expect[k]));
}

TEST_CASE("both pipelines agree in the weight-free limit") {
  const QuotProblem p(2, {}, {0}, {1}, 6);
  CHECK(w_closed_form(p) == quot_oracle_series(p));
  const QSeries x1 = jet_component(w_closed_form(p), {1});
  const std::vector<long> expect = {0, 0, -2, 0, 154, 1704, 13812};
  for (unsigned k = 0; k <= 6; ++k) CHECK(x1[k] == Rational(expect[k]));
}
