#include "quotser/lagrange.hpp"

#include <stdexcept>
#include <utility>

namespace quotser {

namespace {

using JSeries = Series<Jet>;

JSeries plus_const(JSeries s, const Jet& c) {
  s[0] += c;
  return s;
}

// Coefficients in g of prod_j (g + w_j), as jet constants.
std::vector<Jet> numerator_poly(const QuotProblem& p, const JetSpecPtr& js) {
  std::vector<Jet> a{Jet::constant(js, Rational(1))};
  for (int j = 0; j < p.N; ++j) {
    std::vector<Jet> next(a.size() + 1, Jet(js));
    for (std::size_t k = 0; k < a.size(); ++k) {
      next[k + 1] += a[k];
      next[k] += a[k] * p.weights[j];
    }
    a = std::move(next);
  }
  return a;
}

// Coefficients in g of prod_j (g + w_j - 1) * prod_m (1 - x_m g).
std::vector<Jet> q_side_poly(const QuotProblem& p, const JetSpecPtr& js) {
  std::vector<Jet> b{Jet::constant(js, Rational(1))};
  for (int j = 0; j < p.N; ++j) {
    std::vector<Jet> next(b.size() + 1, Jet(js));
    for (std::size_t k = 0; k < b.size(); ++k) {
      next[k + 1] += b[k];
      next[k] += b[k] * (p.weights[j] - Rational(1));
    }
    b = std::move(next);
  }
  for (std::size_t m = 0; m < p.insertions(); ++m) {
    const Jet xm = Jet::variable(js, m);
    std::vector<Jet> next(b.size() + 1, Jet(js));
    for (std::size_t k = 0; k < b.size(); ++k) {
      next[k] += b[k];
      next[k + 1] -= b[k] * xm;
    }
    b = std::move(next);
  }
  return b;
}

std::vector<Jet> poly_derivative(const std::vector<Jet>& c) {
  std::vector<Jet> d;
  for (std::size_t k = 1; k < c.size(); ++k)
    d.push_back(c[k] * Rational(static_cast<long>(k)));
  return d;
}

JSeries eval_poly(const std::vector<Jet>& c, const JSeries& g) {
  JSeries r = JSeries::constant(g.variable(), g.order(), c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    r *= g;
    r[0] += c[k];
  }
  return r;
}

// P(g) = A(g) - q B(g) evaluated on a q-series.
JSeries eval_root_poly(const std::vector<Jet>& a, const std::vector<Jet>& b, const JSeries& g) {
  return eval_poly(a, g) - eval_poly(b, g).shifted_up(1);
}

}  // namespace

Series<Jet> solve_root_series(const QuotProblem& p, int i) {
  if (i < 0 || i >= p.N) throw std::invalid_argument("root index out of range");
  const JetSpecPtr js = p.jet_spec();
  const std::vector<Jet> a = numerator_poly(p, js);
  const std::vector<Jet> b = q_side_poly(p, js);
  const std::vector<Jet> da = poly_derivative(a);
  const std::vector<Jet> db = poly_derivative(b);
  JSeries g = JSeries::constant("q", p.order, Jet::constant(js, -p.weights[i]));
  for (unsigned correct = 1; correct < p.order + 1; correct *= 2) {
    JSeries residual = eval_root_poly(a, b, g);
    JSeries slope = eval_root_poly(da, db, g);
    g -= residual * slope.invert();
  }
  if (!eval_root_poly(a, b, g).is_zero())
    throw std::logic_error("root iteration failed to converge");
  return g;
}

std::vector<Series<Jet>> solve_all_roots(const QuotProblem& p) {
  std::vector<JSeries> roots;
  roots.reserve(p.N);
  for (int i = 0; i < p.N; ++i) roots.push_back(solve_root_series(p, i));
  return roots;
}

Series<Jet> root_map(const QuotProblem& p, const Series<Jet>& g) {
  const JetSpecPtr js = p.jet_spec();
  JSeries r = JSeries::constant(g.variable(), g.order(), Jet::constant(js, Rational(1)));
  for (int j = 0; j < p.N; ++j) {
    r *= plus_const(g, Jet::constant(js, p.weights[j]));
    r *= plus_const(-g, Jet::constant(js, Rational(1) - p.weights[j])).invert();
  }
  for (std::size_t m = 0; m < p.insertions(); ++m) {
    const Jet xm = Jet::variable(js, m);
    r *= plus_const(-g.scaled(xm), Jet::constant(js, Rational(1))).invert();
  }
  return r;
}

Series<Jet> k_factor(const QuotProblem& p, const std::vector<Series<Jet>>& roots) {
  if (roots.size() != static_cast<std::size_t>(p.N))
    throw std::invalid_argument("expected one root series per summand");
  const JetSpecPtr js = p.jet_spec();
  const Jet one = Jet::constant(js, Rational(1));
  JSeries k = JSeries::constant("q", p.order, one);
  for (int i = 0; i < p.N; ++i) {
    const JSeries& g = roots[i];
    JSeries sum("q", p.order, Jet(js));
    for (int j = 0; j < p.N; ++j) {
      if (j != i) sum += plus_const(g, Jet::constant(js, p.weights[j])).invert();
      sum += plus_const(-g, Jet::constant(js, Rational(1) - p.weights[j])).invert();
    }
    for (std::size_t m = 0; m < p.insertions(); ++m) {
      const Jet xm = Jet::variable(js, m);
      sum += plus_const(-g.scaled(xm), one).invert().scaled(xm);
    }
    const JSeries h = plus_const(g, Jet::constant(js, p.weights[i]));
    k *= plus_const(h * sum, one);
  }
  return k;
}

Series<Jet> w_closed_form_at(const QuotProblem& p) {
  const JetSpecPtr js = p.jet_spec();
  const Jet one = Jet::constant(js, Rational(1));
  const std::vector<JSeries> g = solve_all_roots(p);
  JSeries psi = JSeries::constant("q", p.order, one);
  for (int i = 0; i < p.N; ++i)
    for (int j = i + 1; j < p.N; ++j) {
      const JSeries d = g[i] - g[j];
      psi *= d;
      psi *= d;
    }
  for (int i = 0; i < p.N; ++i)
    for (int j = 0; j < p.N; ++j) {
      psi *= plus_const(g[i], Jet::constant(js, Rational(1) + p.weights[j]));
      if (i != j) {
        psi *= plus_const(g[i] - g[j], one).invert();
        psi *= plus_const(g[i], Jet::constant(js, p.weights[j])).invert();
      }
    }
  for (int i = 0; i < p.N; ++i)
    for (std::size_t m = 0; m < p.insertions(); ++m) {
      const Jet xm = Jet::variable(js, m);
      psi *= plus_const(-g[i].scaled(xm), one).int_power(-1 - p.degrees[m]);
      psi = psi.scaled((one + xm * p.weights[i]).int_power(p.degrees[m] + 1));
    }
  JSeries w = psi * k_factor(p, g).invert();
  const bool negative = ((static_cast<unsigned long>(p.N) * (p.N - 1) / 2) % 2) != 0;
  return negative ? -w : w;
}

namespace {

// The factorization recursion, also usable at degenerate weights (only the
// root solve needs distinct weights).
EFFactorization ef_recursion_impl(int n, const std::vector<Rational>& weights,
                                  const std::vector<long>& degrees,
                                  const std::vector<unsigned>& jet_caps, unsigned order) {
  const JetSpecPtr js = make_jet_spec(jet_caps);
  const std::size_t l = degrees.size();
  // Coefficients of P in g, each linear in q: P_j = A_j - q B_j.
  QuotProblem scratch(n, std::vector<Rational>(), degrees, jet_caps, order);
  scratch.weights = weights;  // bypass admissibility; the recursion allows any weights
  const std::vector<Jet> a = numerator_poly(scratch, js);
  const std::vector<Jet> b = q_side_poly(scratch, js);
  auto p_coeff = [&](std::size_t j, unsigned qpow) -> Jet {
    if (qpow == 0) return j < a.size() ? a[j] : Jet(js);
    if (qpow == 1) return j < b.size() ? -b[j] : Jet(js);
    return Jet(js);
  };

  std::vector<std::vector<Jet>> e(n, std::vector<Jet>(order + 1, Jet(js)));
  std::vector<std::vector<Jet>> f(l + 1, std::vector<Jet>(order + 1, Jet(js)));
  for (unsigned qp = 0; qp <= order; ++qp) {
    // Top equations [g^{m+N}]: f_m + sum_k f_{m+k} e_{N-k}, solved downward
    // in m so the needed f's at this q-order already exist.
    for (std::size_t m = l + 1; m-- > 0;) {
      Jet acc = p_coeff(m + n, qp);
      const std::size_t kmax = std::min<std::size_t>(n, l - m);
      for (std::size_t k = 1; k <= kmax; ++k)
        for (unsigned r = 1; r <= qp; ++r) acc.sub_mul(f[m + k][r], e[n - k][qp - r]);
      f[m][qp] = std::move(acc);
    }
    // Low equations [g^i]: e_i f_0 + sum_k e_{i-k} f_k, solved upward in i.
    for (int i = 0; i < n; ++i) {
      Jet acc = p_coeff(i, qp);
      for (unsigned r = 0; r < qp; ++r) acc.sub_mul(e[i][r], f[0][qp - r]);
      const std::size_t kmax = std::min<std::size_t>(i, l);
      for (std::size_t k = 1; k <= kmax; ++k)
        for (unsigned r = 0; r <= qp; ++r) acc.sub_mul(e[i - k][r], f[k][qp - r]);
      e[i][qp] = acc * f[0][0].inverse();
    }
  }

  EFFactorization out;
  for (int i = 0; i < n; ++i) {
    JSeries s("q", order, Jet(js));
    for (unsigned qp = 0; qp <= order; ++qp) s[qp] = e[i][qp];
    out.e.push_back(std::move(s));
  }
  for (std::size_t m = 0; m <= l; ++m) {
    JSeries s("q", order, Jet(js));
    for (unsigned qp = 0; qp <= order; ++qp) s[qp] = f[m][qp];
    out.f.push_back(std::move(s));
  }
  return out;
}

}  // namespace

EFFactorization ef_recursion(const QuotProblem& p) {
  return ef_recursion_impl(p.N, p.weights, p.degrees, p.jet_caps, p.order);
}

namespace {

// Square matrices over the jet-coefficient q-series ring, just large enough
// for companion matrices (at most N x N).
using SeriesMatrix = std::vector<std::vector<JSeries>>;

JSeries det(const SeriesMatrix& m, const JSeries& zero) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  JSeries acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    SeriesMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<JSeries> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const JSeries cof = m[0][j] * det(minor, zero);
    if (j % 2 == 0) acc += cof; else acc -= cof;
  }
  return acc;
}

// prod_i B(g_i) over the roots of the monic polynomial with coefficient
// series e (e.back() = 1): the determinant of B at the companion matrix, a
// polynomial identity in the coefficients, so valid over this ring.
JSeries product_over_roots(const std::vector<JSeries>& e, const std::vector<JSeries>& b,
                           const JSeries& zero, const JSeries& one) {
  const std::size_t n = e.size() - 1;
  SeriesMatrix companion(n, std::vector<JSeries>(n, zero));
  for (std::size_t r = 0; r + 1 < n; ++r) companion[r + 1][r] = one;
  for (std::size_t r = 0; r < n; ++r) companion[r][n - 1] = -e[r];
  SeriesMatrix acc(n, std::vector<JSeries>(n, zero));
  SeriesMatrix power(n, std::vector<JSeries>(n, zero));
  for (std::size_t r = 0; r < n; ++r) power[r][r] = one;
  for (std::size_t d = 0; d < b.size(); ++d) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) acc[r][c] += power[r][c] * b[d];
    if (d + 1 == b.size()) break;
    SeriesMatrix next(n, std::vector<JSeries>(n, zero));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k) next[r][c] += power[r][k] * companion[k][c];
    power = std::move(next);
  }
  return det(acc, zero);
}

// Power sums of the roots from Newton's identities.
std::vector<JSeries> root_power_sums(const std::vector<JSeries>& e, std::size_t upto,
                                     const JSeries& zero, const Jet& jet_one) {
  const std::size_t n = e.size() - 1;
  std::vector<JSeries> p(upto + 1, zero);
  p[0] = zero;
  p[0][0] = jet_one * Rational(static_cast<long>(n));
  for (std::size_t k = 1; k <= upto; ++k) {
    JSeries acc = zero;
    for (std::size_t j = 1; j < k && j <= n; ++j) acc += e[n - j] * p[k - j];
    if (k <= n) acc += e[n - k].scaled(Rational(static_cast<long>(k)));
    p[k] = -acc;
  }
  return p;
}

}  // namespace

Series<Jet> w_closed_form(const QuotProblem& p) {
  const JetSpecPtr js = p.jet_spec();
  const std::size_t n = static_cast<std::size_t>(p.N);
  const std::size_t l = p.insertions();
  // Work a few orders deep to absorb the q^{N-1} shared by disc(E) and
  // e_0^{N-1}; the final series is exact to p.order.
  const unsigned work = p.order + static_cast<unsigned>(n);
  const Jet jet_one = Jet::constant(js, Rational(1));
  const JSeries zero("q", work, Jet(js));
  const JSeries one = JSeries::constant("q", work, jet_one);

  EFFactorization ef = ef_recursion_impl(p.N, std::vector<Rational>(n, Rational(0)),
                                         p.degrees, p.jet_caps, work);
  std::vector<JSeries> e = std::move(ef.e);
  e.push_back(one);  // monic top coefficient

  // disc(E) as the moment determinant det [p_{i+j}].
  const std::vector<JSeries> psum = root_power_sums(e, 2 * n - 2, zero, jet_one);
  SeriesMatrix moments(n, std::vector<JSeries>(n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) moments[i][j] = psum[i + j];
  const JSeries disc = det(moments, zero);

  // E at the constants -1 and 1.
  auto eval_const = [&](long at) {
    JSeries acc = zero;
    Rational power(1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      acc += e[k].scaled(power);
      power *= Rational(at);
    }
    return acc;
  };
  const JSeries e_at_m1 = eval_const(-1);
  const JSeries e_at_1 = eval_const(1);

  // prod_i E(1+g_i): coefficients of E(1+y) by the binomial expansion.
  std::vector<JSeries> shifted(e.size(), zero);
  for (std::size_t d = 0; d < e.size(); ++d)
    for (std::size_t j = d; j < e.size(); ++j)
      shifted[d] += e[j].scaled(binomial(static_cast<long>(j), static_cast<long>(d)));
  const JSeries prod_shift = product_over_roots(e, shifted, zero, one);

  // T(y) = N prod_m (1-x_m y) + sum_m x_m y (1-y) prod_{m' != m} (1-x_m' y),
  // the numerator of g dlog X at zero weights; coefficients are jets.
  std::vector<Jet> t_poly(l + 2, Jet(js));
  {
    std::vector<Jet> all{jet_one};  // prod over all m of (1 - x_m y)
    for (std::size_t m = 0; m < l; ++m) {
      std::vector<Jet> next(all.size() + 1, Jet(js));
      for (std::size_t k = 0; k < all.size(); ++k) {
        next[k] += all[k];
        next[k + 1] -= all[k] * Jet::variable(js, m);
      }
      all = std::move(next);
    }
    for (std::size_t k = 0; k < all.size(); ++k)
      t_poly[k] += all[k] * Rational(static_cast<long>(n));
    for (std::size_t m = 0; m < l; ++m) {
      std::vector<Jet> others{jet_one};
      for (std::size_t m2 = 0; m2 < l; ++m2) {
        if (m2 == m) continue;
        std::vector<Jet> next(others.size() + 1, Jet(js));
        for (std::size_t k = 0; k < others.size(); ++k) {
          next[k] += others[k];
          next[k + 1] -= others[k] * Jet::variable(js, m2);
        }
        others = std::move(next);
      }
      // x_m y (1 - y) * others
      const Jet xm = Jet::variable(js, m);
      for (std::size_t k = 0; k < others.size(); ++k) {
        t_poly[k + 1] += others[k] * xm;
        t_poly[k + 2] -= others[k] * xm;
      }
    }
  }
  std::vector<JSeries> t_series;
  for (std::size_t k = 0; k < t_poly.size(); ++k)
    t_series.push_back(JSeries::constant("q", work, t_poly[k]));
  while (t_series.size() > 1 && t_series.back().is_zero()) t_series.pop_back();
  const JSeries prod_t = product_over_roots(e, t_series, zero, one);

  // S_m = sum_k e_{N-k} x_m^k and the insertion factor prod_m S_m^{-d_m}.
  JSeries insertion = one;
  for (std::size_t m = 0; m < l; ++m) {
    JSeries s_m = zero;
    Jet xpow = jet_one;
    for (std::size_t k = 0; k <= n; ++k) {
      s_m += e[n - k].scaled(xpow);
      xpow *= Jet::variable(js, m);
    }
    insertion *= s_m.int_power(-p.degrees[m]);
  }

  const Rational sign_n(p.N % 2 == 0 ? 1 : -1);
  JSeries numer_units = e_at_m1.scaled(sign_n).int_power(static_cast<long>(n)) * e_at_1 *
                        insertion;
  JSeries denom_units = prod_shift * prod_t;
  const JSeries e0_pow = e[0].scaled(sign_n).int_power(static_cast<long>(n) - 1);

  const unsigned shift = static_cast<unsigned>(n) - 1;
  JSeries w = disc.shifted_down(shift) * e0_pow.shifted_down(shift).invert();
  const unsigned left = w.order();
  w *= numer_units.truncated(left) * denom_units.truncated(left).invert();
  const bool negative = ((n * (n - 1) / 2) % 2) != 0;
  if (negative) w = -w;
  return w.truncated(p.order);
}

std::vector<QSeries> ef_specialized_check(int n, unsigned order) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  // Explicit coefficients: e_i = (-1)^{N-i+1} C(N,i) q/(1-q) for i < N.
  QSeries geom("q", order, Rational(0));
  for (unsigned k = 1; k <= order; ++k) geom[k] = Rational(1);
  std::vector<QSeries> explicit_e;
  for (int i = 0; i < n; ++i) {
    Rational c = binomial(n, i);
    if ((n - i + 1) % 2 != 0) c = -c;
    explicit_e.push_back(geom.scaled(c));
  }

  EFFactorization rec = ef_recursion_impl(n, std::vector<Rational>(n, Rational(0)), {}, {},
                                          order);
  QSeries f0("q", order, Rational(0));
  for (unsigned k = 0; k <= order; ++k) f0[k] = rec.f[0][k].constant_part();
  QSeries expected_f0 = QSeries::linear("q", order, Rational(1), Rational(-1));
  if (!(f0 == expected_f0))
    throw std::logic_error("zero-weight factorization: f_0 differs from 1 - q");
  for (int i = 0; i < n; ++i) {
    QSeries ei("q", order, Rational(0));
    for (unsigned k = 0; k <= order; ++k) ei[k] = rec.e[i][k].constant_part();
    if (!(ei == explicit_e[i]))
      throw std::logic_error("zero-weight factorization: e coefficients disagree");
  }
  return explicit_e;
}

}  // namespace quotser
