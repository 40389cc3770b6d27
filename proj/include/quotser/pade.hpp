#pragma once

#include <optional>

#include "quotser/polynomial.hpp"
#include "quotser/series.hpp"

namespace quotser {

// Reconstruct the unique smallest-degree rational function whose Taylor
// expansion matches every retained coefficient of s, scanning candidate
// degree pairs by ascending total degree.  All retained coefficients enter
// the linear system, so a returned function is verified against the whole
// truncation, not just the coefficients needed to pin it down.
//
// Returns nullopt when nothing within (max_num, max_den) matches.  Throws
// std::invalid_argument when s is too short to leave at least three
// verification coefficients beyond the degrees requested.
std::optional<RationalFunction> pade_reconstruct(const QSeries& s, unsigned max_num,
                                                 unsigned max_den);

}  // namespace quotser
