#pragma once

#include <vector>

#include "quotser/jet.hpp"
#include "quotser/multiseries.hpp"
#include "quotser/series.hpp"

namespace quotser {

// One equivariant computation on the projective line: the rank N of the
// trivial bundle, a torus weight for each of its N summands, and one
// insertion per descendent variable x_m (a degree d_m and the truncation cap
// for powers of x_m).  Weights must be pairwise distinct with no difference
// equal to +-1, so that no localization denominator and no constant term
// needed by the closed form can vanish.  The weights are auxiliary: the
// descendent series is their common scaling limit, and the weight vector
// only fixes the ray along which that limit is taken.
struct QuotProblem {
  QuotProblem(int n, std::vector<Rational> weights, std::vector<long> degrees,
              std::vector<unsigned> jet_caps, unsigned order);

  static std::vector<Rational> default_weights(int n);  // 2, 4, 8, ...

  int N;
  std::vector<Rational> weights;
  std::vector<long> degrees;
  std::vector<unsigned> jet_caps;
  unsigned order;

  std::size_t insertions() const { return degrees.size(); }
  JetSpecPtr jet_spec() const { return make_jet_spec(jet_caps); }
};

// All compositions of n into `parts` non-negative parts, first part largest
// first; deterministic order.
std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned parts);

// Vertex factor attached to summand i (0-based), as a series in the local
// variable h:
//   prod_j (1 - h + w_i - w_j) * prod_{j != i} (h + w_j - w_i)^{-1}
//   * prod_m (1 + x_m (w_i - h))
Series<Jet> phi_series(const QuotProblem& p, int i, unsigned cap);

// Edge/obstruction factor in all N localization variables:
//   prod_{i<j} (h_i - h_j + w_j - w_i)^2
//   * prod_{i,j} (1 + h_i + w_j - w_i) (1 + h_i - h_j + w_j - w_i)^{-1}
//   * prod_{j != i} (h_i + w_j - w_i)^{-1}
//   * prod_{i,m} (1 + x_m (w_i - h_i))^{-1-d_m} (1 + x_m w_i)^{d_m+1}
MultiSeries psi_series(const QuotProblem& p, const std::vector<unsigned>& caps);
MultiSeries psi_series(const QuotProblem& p, const std::vector<unsigned>& caps,
                       unsigned total_cap);

// Contribution of one torus-fixed locus, indexed by the composition
// n_1+..+n_N = n: the sign (-1)^(nN + N(N-1)/2) times the coefficient of
// h_1^{n_1}..h_N^{n_N} in phi_1^{n_1}..phi_N^{n_N} * psi.
Jet fixed_locus_contribution(const QuotProblem& p, const std::vector<unsigned>& composition);

// Sum over all fixed loci, n = 0..order, evaluated at the problem's own
// weight vector.  Each coefficient is a rational function of the weights;
// the reported descendent series is its weight-free value, so this raw
// evaluation is a diagnostic and cross-check, not the final answer.
Series<Jet> quot_oracle_series_at(const QuotProblem& p);

// The descendent series: the value of the localization sum with the weights
// sent to zero along the ray spanned by p.weights.  Coefficient n of the
// raw sum, as a function of an overall scale t on the weights, is a rational
// function
//
//   f(t) = P(t) / prod_{i<j} (1 - (w_j - w_i)^2 t^2)^{max(n,1)-1},
//
// regular at t = 0, with deg P at most deg of the denominator plus the total
// insertion degree.  Finitely many exact samples at admissible scales pin P
// down; extra samples re-verify the reconstruction before f(0) is read off.
// The result does not depend on the ray; the closed-form pipeline must
// reproduce it coefficient by coefficient.
Series<Jet> quot_oracle_series(const QuotProblem& p);

}  // namespace quotser
