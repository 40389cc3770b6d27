#pragma once

#include <string>

#include "json.hpp"
#include "quotser/jet.hpp"
#include "quotser/polynomial.hpp"
#include "quotser/series.hpp"

namespace quotser {

using ordered_json = nlohmann::ordered_json;

// {"variable": "q", "order": N, "coefficients": ["1", "-3/2", ...]}
ordered_json series_to_json(const QSeries& s);

// Same schema when there are no descendent variables; otherwise adds
// "jet_caps" and each coefficient becomes an object keyed by comma-joined
// exponent tuples ("0,2"), zero monomials omitted, keys in a fixed order.
ordered_json series_to_json(const Series<Jet>& s);

// Parse the plain-rational schema back (the jet schema is output-only).
QSeries series_from_json(const ordered_json& j);

// {"numerator": [...], "denominator": [...]} with coefficient strings.
ordered_json ratfunc_to_json(const RationalFunction& f);

// Display form with the denominator split into (1 - c q)^k factors when its
// rational roots can be found; purely cosmetic, never used for computation.
std::string latex_rational_function(const RationalFunction& f, const std::string& variable);

}  // namespace quotser
