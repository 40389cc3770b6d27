#pragma once

#include <vector>

#include "quotser/jet.hpp"
#include "quotser/series.hpp"

namespace quotser {

// One descendent-monomial component of a jet-coefficient series, as a plain
// rational series.
inline QSeries jet_component(const Series<Jet>& s, const std::vector<unsigned>& exponents) {
  QSeries out(s.variable(), s.order(), Rational(0));
  for (unsigned k = 0; k <= s.order(); ++k) out[k] = s[k].coeff(exponents);
  return out;
}

}  // namespace quotser
