#pragma once

#include <optional>
#include <vector>

#include "quotser/polynomial.hpp"
#include "quotser/rational.hpp"

namespace quotser {

// Parameters of the alternating binomial sum
//   sigma(n) = sum_{v+w=n+c} (-1)^v C(n+a, v) C(b, w)
//            = [x^{n+c}] (1-x)^{n+a} (1+x)^b.
struct SigmaParams {
  long a = 0;
  long b = 0;
  long c = 0;
};

// Direct finite-sum evaluation; needs n+a >= 0, and is 0 when n+c < 0.
Rational sigma_binomial(const SigmaParams& p, long n);

// sigma(n) = (-1)^n (p1(n) + 2^n p2(n)) for all n >= n0; the 2^n part can
// only appear when b < 0 (it comes from the pole of (1+x)^b at x = -1).
struct StarForm {
  UniPolynomial p1;
  UniPolynomial p2;
  long n0 = 0;
};
Rational star_form_value(const StarForm& f, long n);

struct SigmaFitResult {
  std::optional<StarForm> form;
  unsigned degree_bound = 0;
  bool widened = false;
  unsigned verified = 0;  // held-out values checked
};

// Fit p1, p2 by an exact linear solve on consecutive samples from
// n0 = max(0, -a, -c), then verify on every remaining n up to n_max (at
// least 50 of them).  One widening retry raises the degree bound to
// |a|+|b|+|c|+3, which dominates the true degrees, so a fit within bounds
// always exists.
SigmaFitResult sigma_star_fit(const SigmaParams& p, long n_max);

// The triple alternating sum
//   sum (-1)^{(v-i)+L} C(A-m, L) C(n+r1-i, v-i) C(r2-j, w-j)
// over v >= i, w >= j, L >= 0 with v+w+L = i+j+k+n+r3, and its collapse by
// the Vandermonde identity to a single sum with the combined binomial
// C((A-m)+(n+r1-i), v'-i).  Both are evaluated and must agree.
Rational sigma_vandermonde(long big_a, long m, long i, long j, long k, long r1, long r2,
                           long r3, long n);

// sum_i (1 + sign*x_i)^{-d}; sign must be +1 or -1.
Rational power_sum(const std::vector<Rational>& roots, long d, int sign);
std::vector<Rational> power_sums(const std::vector<Rational>& roots, long d_max, int sign);

// Recover H_0..H_jmax from sum_j t^j H_j = exp(sum_d t^d P_d / d);
// p holds P_1..P_jmax.
std::vector<Rational> complete_from_power_sums(const std::vector<Rational>& p,
                                               unsigned j_max);

// Chern characters ch_0..ch_kmax from Chern classes c_1..c_K and the rank,
// via Newton's identities on the Chern roots.
std::vector<Rational> chern_char_from_classes(const std::vector<Rational>& c, long rank,
                                              unsigned k_max);

}  // namespace quotser
