#include "doctest.h"
#include "quotser/series.hpp"
#include "quotser/symfunc.hpp"

#include <stdexcept>

using namespace quotser;

namespace {

// [x^{n+c}] (1-x)^{n+a} (1+x)^b by direct series arithmetic.
Rational sigma_by_series(const SigmaParams& p, long n) {
  const long target = n + p.c;
  if (target < 0) return Rational(0);
  const unsigned order = static_cast<unsigned>(target);
  const QSeries minus = QSeries::linear("x", order, Rational(1), Rational(-1));
  const QSeries plus = QSeries::linear("x", order, Rational(1), Rational(1));
  return (minus.int_power(n + p.a) * plus.int_power(p.b))[order];
}

}  // namespace

TEST_CASE("sigma agrees with its generating function") {
  for (long a : {-1L, 0L, 2L})
    for (long b : {-3L, -1L, 0L, 2L})
      for (long c : {-2L, 0L, 1L})
        for (long n = 3; n <= 12; ++n) {
          const SigmaParams p{a, b, c};
          CHECK(sigma_binomial(p, n) == sigma_by_series(p, n));
        }
  CHECK_THROWS_AS(sigma_binomial(SigmaParams{-5, 0, 0}, 2), std::invalid_argument);
  CHECK(sigma_binomial(SigmaParams{0, 0, -4}, 2) == Rational(0));
}

TEST_CASE("star form fit without a power part") {
  // b >= 0 keeps (1+x)^b polynomial, so no 2^n term can appear.
  const SigmaParams p{2, 3, 1};
  const SigmaFitResult r = sigma_star_fit(p, 90);
  REQUIRE(r.form.has_value());
  CHECK(r.form->p2.is_zero());
  CHECK(r.verified >= 50);
  for (long n = 0; n <= 20; ++n)
    CHECK(star_form_value(*r.form, n) == sigma_binomial(p, n));
}

TEST_CASE("star form fit with a power part") {
  // (1+x)^{-1} alone gives sigma(n) = (-1)^n 2^n: p1 = 0, p2 = 1.
  const SigmaParams p{0, -1, 0};
  const SigmaFitResult r = sigma_star_fit(p, 80);
  REQUIRE(r.form.has_value());
  CHECK(r.form->p1.is_zero());
  CHECK(r.form->p2 == UniPolynomial::from_longs({1}));

  // A mixed case stays exact on held-out evaluations.
  const SigmaParams mixed{1, -2, -1};
  const SigmaFitResult rm = sigma_star_fit(mixed, 80);
  REQUIRE(rm.form.has_value());
  CHECK(!rm.form->p2.is_zero());
  for (long n = rm.form->n0; n <= 25; ++n)
    CHECK(star_form_value(*rm.form, n) == sigma_binomial(mixed, n));
}

TEST_CASE("vandermonde collapse is consistent") {
  // The function cross-checks the triple sum against the collapsed single
  // sum internally and throws on any disagreement.
  CHECK(sigma_vandermonde(4, 1, 0, 0, 0, 0, 0, 0, 3) ==
        sigma_vandermonde(4, 1, 0, 0, 0, 0, 0, 0, 3));
  CHECK_NOTHROW(sigma_vandermonde(5, 2, 1, 1, 0, 1, 2, -1, 4));
  CHECK_NOTHROW(sigma_vandermonde(3, 0, 0, 1, 2, -1, 1, 0, 6));
}

TEST_CASE("power sums over reciprocal factors") {
  const std::vector<Rational> roots = {Rational(1, 2), Rational(1, 3)};
  CHECK(power_sum(roots, 0, 1) == Rational(2));
  CHECK(power_sum(roots, 1, 1) == Rational(2, 3) + Rational(3, 4));
  CHECK(power_sum(roots, 1, -1) == Rational(2) + Rational(3, 2));
  CHECK(power_sum(roots, 2, 1) == Rational(4, 9) + Rational(9, 16));
  CHECK(power_sum(roots, -1, 1) == Rational(3, 2) + Rational(4, 3));
  CHECK_THROWS_AS(power_sum(roots, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_sum({Rational(1)}, 1, -1), std::domain_error);

  // power_sums packs P_1..P_dmax, the layout complete_from_power_sums eats.
  const auto all = power_sums(roots, 3, 1);
  REQUIRE(all.size() == 3);
  for (long d = 1; d <= 3; ++d) CHECK(all[d - 1] == power_sum(roots, d, 1));
}

TEST_CASE("complete homogeneous from power sums") {
  // Single variable x = 2: exp(sum t^d 2^d / d) = 1/(1-2t), so H_j = 2^j.
  const auto h = complete_from_power_sums({Rational(2), Rational(4), Rational(8)}, 3);
  REQUIRE(h.size() == 4);
  CHECK(h[0] == Rational(1));
  CHECK(h[1] == Rational(2));
  CHECK(h[2] == Rational(4));
  CHECK(h[3] == Rational(8));

  // Two variables {1, 2}: H_2 = 1 + 2 + 4 = 7.
  const auto h2 = complete_from_power_sums({Rational(3), Rational(5)}, 2);
  CHECK(h2[2] == Rational(7));
  CHECK_THROWS_AS(complete_from_power_sums({Rational(1)}, 3), std::invalid_argument);
}

TEST_CASE("chern characters from chern classes") {
  // rank 2, c1 = 3, c2 = 2: ch2 = (c1^2 - 2 c2)/2 = 5/2.
  const auto ch = chern_char_from_classes({Rational(3), Rational(2)}, 2, 3);
  REQUIRE(ch.size() == 4);
  CHECK(ch[0] == Rational(2));
  CHECK(ch[1] == Rational(3));
  CHECK(ch[2] == Rational(5, 2));
  // ch3 = (c1^3 - 3 c1 c2)/6 = (27 - 18)/6 = 3/2.
  CHECK(ch[3] == Rational(3, 2));
}
