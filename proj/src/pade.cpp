#include "quotser/pade.hpp"

#include <stdexcept>

#include "quotser/linalg.hpp"

namespace quotser {

namespace {

// Try degrees exactly (num_deg, den_deg).  The homogeneous system
// [q^k](s * d) = 0 for k = num_deg+1 .. order pins down d up to scale; any
// kernel vector with d(0) != 0 gives a candidate that already matches every
// retained coefficient.
std::optional<RationalFunction> try_degrees(const QSeries& s, unsigned num_deg,
                                            unsigned den_deg) {
  const unsigned order = s.order();
  const std::size_t rows = order - num_deg;
  Matrix m(rows, std::vector<Rational>(den_deg + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    const unsigned k = num_deg + 1 + static_cast<unsigned>(r);
    for (unsigned j = 0; j <= den_deg && j <= k; ++j) m[r][j] = s[k - j];
  }
  for (const std::vector<Rational>& d : kernel_basis(std::move(m), den_deg + 1)) {
    if (d[0].is_zero()) continue;
    std::vector<Rational> p(num_deg + 1);
    for (unsigned k = 0; k <= num_deg; ++k)
      for (unsigned j = 0; j <= den_deg && j <= k; ++j) p[k].add_mul(d[j], s[k - j]);
    return RationalFunction(UniPolynomial(std::move(p)), UniPolynomial(d));
  }
  return std::nullopt;
}

}  // namespace

std::optional<RationalFunction> pade_reconstruct(const QSeries& s, unsigned max_num,
                                                 unsigned max_den) {
  if (s.order() < max_num + max_den + 3)
    throw std::invalid_argument(
        "pade reconstruction needs series order >= max_num + max_den + 3");
  for (unsigned total = 0; total <= max_num + max_den; ++total) {
    for (unsigned nd = total > max_den ? total - max_den : 0;
         nd <= total && nd <= max_num; ++nd) {
      if (auto r = try_degrees(s, nd, total - nd)) return r;
    }
  }
  return std::nullopt;
}

}  // namespace quotser
