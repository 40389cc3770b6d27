#include "quotser/hilbert.hpp"

#include <stdexcept>

namespace quotser {

namespace {

using JSeries = Series<Jet>;

void check_insertions(const SurfaceNumerics& s) {
  if (s.alphaM.size() != s.jet_caps.size())
    throw std::invalid_argument("expected one jet cap per insertion");
}

}  // namespace

QtChangeOfVars qt_change_of_vars(const std::vector<unsigned>& jet_caps, unsigned order) {
  const JetSpecPtr js = make_jet_spec(jet_caps);
  const Jet one = Jet::constant(js, Rational(1));
  // Work two orders high so q/t and dq/dt stay exact through `order`.
  const unsigned hi = order + 2;
  JSeries den = JSeries::linear("t", hi, one, -one);
  for (std::size_t m = 0; m < jet_caps.size(); ++m)
    den *= JSeries::linear("t", hi, one, -Jet::variable(js, m));
  const JSeries q_of_t = -(JSeries::identity("t", hi, one) * den.invert());
  const JSeries q_over_t = q_of_t.shifted_down(1);       // order hi-1
  const JSeries dq = q_of_t.derivative();                // order hi-1
  const JSeries a = -(q_over_t.int_power(-2) * dq);
  QtChangeOfVars out{q_of_t.truncated(order), q_of_t.truncated(order).revert("q"),
                     a.truncated(order)};
  return out;
}

Series<Jet> hilbert_w_series(const SurfaceNumerics& s, unsigned order) {
  check_insertions(s);
  const JetSpecPtr js = make_jet_spec(s.jet_caps);
  const Jet one = Jet::constant(js, Rational(1));
  const QtChangeOfVars cov = qt_change_of_vars(s.jet_caps, order);
  JSeries w_t = JSeries::constant("t", order, one);
  for (std::size_t m = 0; m < s.alphaM.size(); ++m)
    w_t *= JSeries::linear("t", order, one, -Jet::variable(js, m)).int_power(-s.alphaM[m]);
  w_t *= JSeries::linear("t", order, one, -one).int_power(-s.M2);
  w_t *= JSeries::linear("t", order, one, one).int_power(-s.MK);
  w_t *= cov.a_of_t.int_power(s.K2);
  return w_t.compose(cov.t_of_q);
}

QSeries hilbert_descendent_series(const SurfaceNumerics& s,
                                  const std::vector<unsigned>& monomial, unsigned order) {
  check_insertions(s);
  const JSeries w = hilbert_w_series(s, order);
  const JetSpecPtr& js = w[0].spec();
  const std::size_t idx = js->index_of(monomial);
  QSeries out("q", order, Rational(0));
  for (unsigned k = 0; k <= order; ++k) out[k] = w[k][idx];
  return out;
}

UniversalFactors universal_series_extract(
    const std::map<std::vector<long>, Series<Jet>>& runs) {
  if (runs.empty()) throw std::invalid_argument("no series to extract from");
  const std::size_t l = runs.begin()->first.size();
  for (const auto& [d, series] : runs)
    if (d.size() != l) throw std::invalid_argument("degree vectors of mixed lengths");
  const std::vector<long> zero(l, 0);
  auto it0 = runs.find(zero);
  if (it0 == runs.end())
    throw std::invalid_argument("extraction requires the zero-degree series");
  const JSeries log_w0 = it0->second.log_series();
  UniversalFactors out{(-log_w0).exp_series(), {}};
  out.c.resize(l);
  for (std::size_t m = 0; m < l; ++m) {
    std::vector<long> unit(l, 0);
    unit[m] = 1;
    auto it = runs.find(unit);
    if (it == runs.end()) continue;
    out.c[m] = (it->second.log_series() - log_w0).exp_series();
  }
  return out;
}

Rational p1xp1_coefficient(unsigned n) {
  if (n < 1) throw std::invalid_argument("the product-geometry value needs n >= 1");
  const JetSpecPtr js = make_jet_spec({1});
  const Jet one = Jet::constant(js, Rational(1));
  const Jet h = Jet::variable(js, 0);
  // (1+2h)/(1-h), a pure jet factor.
  const Jet front = (one + h * Rational(2)) * (one - h).inverse();
  JSeries z = JSeries::linear("z", n, one, one);                       // 1 + z
  JSeries num = JSeries::linear("z", n, one + h * Rational(2), -one);  // 1 - z + 2h
  JSeries den = JSeries::linear("z", n, one - h, one);                 // 1 + z - h
  JSeries total = z.int_power(static_cast<long>(n) + 1) *
                  (num * den.invert()).int_power(static_cast<long>(n) - 1);
  total = total.scaled(front);
  return total[n].coeff({1});
}

QSeries p1xp1_z_series(unsigned nmax) {
  QSeries z("q", nmax, Rational(0));
  for (unsigned n = 1; n <= nmax; ++n) {
    const Rational c = p1xp1_coefficient(n);
    z[n] = (n % 2 == 0) ? -c : c;  // (-1)^{n-1} prefactor
  }
  return z;
}

}  // namespace quotser
