#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quotser/jet.hpp"
#include "quotser/series.hpp"

namespace quotser {

// Intersection numbers that determine a rank-1 descendent series on a
// surface: M2 = M.M, MK = M.K_X, K2 = K_X.K_X, and alphaM_m = c_1(alpha_m).M
// for each insertion; jet_caps truncates the descendent variables.
struct SurfaceNumerics {
  long M2 = 0;
  long MK = 0;
  long K2 = 0;
  std::vector<long> alphaM;
  std::vector<unsigned> jet_caps;

  std::size_t insertions() const { return alphaM.size(); }
};

// The substitution -q = t / ((1-t)(1-x_1 t)..(1-x_l t)) and its companions:
// t as a series in q (the reversion), and the Jacobian-type series
// a = -(q/t)^{-2} dq/dt, which also equals D - t D' for
// D = (1-t) prod (1-x_m t); all three exact to the requested order.
struct QtChangeOfVars {
  Series<Jet> q_of_t;
  Series<Jet> t_of_q;
  Series<Jet> a_of_t;
};
QtChangeOfVars qt_change_of_vars(const std::vector<unsigned>& jet_caps, unsigned order);

// Closed form of the descendent series as a q-series with jet coefficients:
//   W = prod_m (1 - x_m t)^{-alphaM_m} (1-t)^{-M2} (1+t)^{-MK} a^{K2}
// evaluated at t = t(q).
Series<Jet> hilbert_w_series(const SurfaceNumerics& s, unsigned order);

// One descendent-monomial component of W, as a plain rational series.
QSeries hilbert_descendent_series(const SurfaceNumerics& s,
                                  const std::vector<unsigned>& monomial, unsigned order);

// Split genus-0 universal series out of oracle runs: with W(d) the series at
// insertion degrees d, A = W(0)^{-1} and C_m = W(unit_m)/W(0), computed via
// series log/exp.  Only the unit vectors present among the runs produce a
// C_m entry.
struct UniversalFactors {
  Series<Jet> a;
  std::vector<std::optional<Series<Jet>>> c;
};
UniversalFactors universal_series_extract(const std::map<std::vector<long>, Series<Jet>>& runs);

// The product-geometry check value: the coefficient of h z^n in
//   (1+2h)/(1-h) * (1+z)^{n+1} * ((1-z+2h)/(1+z-h))^{n-1},
// computed by exact series arithmetic; equals (-1)^n (4n-10).
Rational p1xp1_coefficient(unsigned n);

// The assembled series sum_n q^n (-1)^{n-1} * p1xp1_coefficient(n), whose
// coefficients are 10-4n; its rational form is q(6-10q)/(1-q)^2.
QSeries p1xp1_z_series(unsigned nmax);

}  // namespace quotser
