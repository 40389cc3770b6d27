#include "quotser/linalg.hpp"

#include <stdexcept>

namespace quotser {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j].sub_mul(f, m[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<std::vector<Rational>> solve_linear(Matrix a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  if (a.empty()) return std::vector<Rational>{};
  const std::size_t cols = a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  // A pivot in the augmented column means the system is inconsistent.
  for (std::size_t c : pivots)
    if (c == cols) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(Matrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("kernel_basis: shape mismatch");
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quotser
