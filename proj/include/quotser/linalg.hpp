#pragma once

#include <optional>
#include <vector>

#include "quotser/rational.hpp"

namespace quotser {

// Dense matrix over the rationals, just big enough for the small exact
// solves in this library (Pade systems, polynomial fits).
using Matrix = std::vector<std::vector<Rational>>;

// Reduce in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

// Solve A x = b exactly; empty when the system is inconsistent.  If the
// solution space is positive-dimensional the free variables are set to 0.
std::optional<std::vector<Rational>> solve_linear(Matrix a, const std::vector<Rational>& b);

// Basis of the null space of A (columns = unknowns).
std::vector<std::vector<Rational>> kernel_basis(Matrix a, std::size_t cols);

}  // namespace quotser
