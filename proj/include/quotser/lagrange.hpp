#pragma once

#include <vector>

#include "quotser/quot.hpp"
#include "quotser/series.hpp"

namespace quotser {

// Closed-form pipeline: the localization sum collapses, by multivariate
// Lagrange inversion, to an evaluation at the N branches g_1..g_N of
//
//   X(g) = prod_j (g+w_j)/(1-g-w_j) * prod_m (1-x_m g)^{-1} = (-1)^N q,
//
// the branch g_i being the one with g_i(0) = -w_i.  Equivalently each g_i is
// a root of the polynomial
//
//   P(g) = prod_j (g+w_j) - q prod_j (g+w_j-1) prod_m (1-x_m g).

// The branch through -w_i, solved by Newton iteration in the q-adic metric;
// P'(-w_i) = prod_{j != i} (w_j - w_i) is nonzero by weight admissibility,
// so the iteration is well defined and doubles its precision each step.
Series<Jet> solve_root_series(const QuotProblem& p, int i);
std::vector<Series<Jet>> solve_all_roots(const QuotProblem& p);

// X evaluated on a series; solve_root_series(p, i) must send this to
// (-1)^N q exactly (a test invariant).
Series<Jet> root_map(const QuotProblem& p, const Series<Jet>& g);

// Jacobian of the inversion: K = prod_i K_i with
//   K_i = 1 + h_i [ sum_{j != i} (g_i+w_j)^{-1} + sum_j (1-g_i-w_j)^{-1}
//                   + sum_m x_m (1-x_m g_i)^{-1} ],   h_i = g_i + w_i.
// Every K_i has constant term 1.
Series<Jet> k_factor(const QuotProblem& p, const std::vector<Series<Jet>>& roots);

// The decoupled evaluation at the problem's own weight vector:
//   W(w) = (-1)^{N(N-1)/2} * Psi|_{h_i = g_i + w_i} / K.
// Needs the branches separated, so it only exists at admissible nonzero
// weights; agrees with quot_oracle_series_at there.  Diagnostic companion
// of w_closed_form, which reports the weight-free value.
Series<Jet> w_closed_form_at(const QuotProblem& p);

// The descendent series in closed form, evaluated directly at zero weights.
// There the branches merge and can no longer be told apart, but the
// evaluation is symmetric in them, so it collapses to resultant-style
// expressions in the coefficients of the monic branch polynomial E:
//
//   W = (-1)^{N(N-1)/2} disc(E) ((-1)^N E(-1))^N E(1) prod_m S_m^{-d_m}
//       / ( prod_i E(1+g_i) * ((-1)^N e_0)^{N-1} * prod_i T(g_i) )
//
// with S_m = sum_k e_{N-k} x_m^k the value of prod_i (1 - x_m g_i) and
// T the numerator of g d/dg log X at zero weights.  The root products are
// determinants at the companion matrix of E; disc(E) is the determinant of
// the power-sum moment matrix.  Must agree with quot_oracle_series
// coefficient by coefficient.
Series<Jet> w_closed_form(const QuotProblem& p);

// Coefficients of the monic degree-N factor (e) and the complementary
// degree-l factor (f) in P = (g^N + e_{N-1} g^{N-1} + .. + e_0)(f_l g^l +
// .. + f_0), solved order by order in q from f_0(0) = 1.
struct EFFactorization {
  std::vector<Series<Jet>> e;  // size N
  std::vector<Series<Jet>> f;  // size l+1
};
EFFactorization ef_recursion(const QuotProblem& p);

// Specialized check at literal zero weights and no insertions, where the
// factorization is explicit: e_i = [g^i] (g^N - q (g-1)^N)/(1-q) and
// f_0 = 1 - q.  Runs the recursion at w = 0 (valid there, unlike the root
// solve), compares against the explicit coefficients, and returns them.
std::vector<QSeries> ef_specialized_check(int n, unsigned order);

}  // namespace quotser
