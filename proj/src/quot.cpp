#include "quotser/quot.hpp"

#include <numeric>
#include <stdexcept>

namespace quotser {

QuotProblem::QuotProblem(int n, std::vector<Rational> w, std::vector<long> d,
                         std::vector<unsigned> caps, unsigned ord)
    : N(n), weights(std::move(w)), degrees(std::move(d)), jet_caps(std::move(caps)), order(ord) {
  if (N < 1) throw std::invalid_argument("rank must be at least 1");
  if (weights.empty()) weights = default_weights(N);
  if (weights.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("expected one weight per summand");
  if (degrees.size() != jet_caps.size())
    throw std::invalid_argument("expected one jet cap per insertion degree");
  const Rational one(1);
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      const Rational diff = weights[j] - weights[i];
      if (diff.is_zero() || diff == one || diff == -one)
        throw std::invalid_argument(
            "weights must be pairwise distinct with no difference equal to +-1");
    }
}

std::vector<Rational> QuotProblem::default_weights(int n) {
  std::vector<Rational> w;
  Rational p(1);
  for (int i = 0; i < n; ++i) {
    p *= Rational(2);
    w.push_back(p);
  }
  return w;
}

std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned parts) {
  if (parts == 0) throw std::invalid_argument("compositions need at least one part");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(parts, 0);
  // Recursively place the first part, largest value first.
  auto rec = [&](auto&& self, unsigned rest, unsigned idx) -> void {
    if (idx + 1 == parts) {
      cur[idx] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned v = rest + 1; v-- > 0;) {
      cur[idx] = v;
      self(self, rest - v, idx + 1);
    }
  };
  rec(rec, n, 0);
  return out;
}

namespace {

Series<Jet> h_linear(unsigned cap, const Jet& c0, const Jet& c1) {
  return Series<Jet>::linear("h", cap, c0, c1);
}

}  // namespace

Series<Jet> phi_series(const QuotProblem& p, int i, unsigned cap) {
  if (i < 0 || i >= p.N) throw std::invalid_argument("phi index out of range");
  const JetSpecPtr js = p.jet_spec();
  const Jet one = Jet::constant(js, Rational(1));
  Series<Jet> phi = Series<Jet>::constant("h", cap, one);
  for (int j = 0; j < p.N; ++j) {
    // (1 - h + w_i - w_j)
    phi *= h_linear(cap, Jet::constant(js, Rational(1) + p.weights[i] - p.weights[j]), -one);
    if (j != i) {
      // (h + w_j - w_i)^{-1}; constant term w_j - w_i is nonzero by the
      // weight admissibility condition.
      phi *= h_linear(cap, Jet::constant(js, p.weights[j] - p.weights[i]), one).invert();
    }
  }
  for (std::size_t m = 0; m < p.insertions(); ++m) {
    Jet xm = Jet::variable(js, m);
    // (1 + x_m (w_i - h)) = (1 + w_i x_m) - x_m h
    phi *= h_linear(cap, one + xm * p.weights[i], -xm);
  }
  return phi;
}

namespace {

MultiSeries ms_linear(const std::vector<unsigned>& caps, unsigned total_cap, const Jet& c0,
                      const std::vector<std::pair<std::size_t, Jet>>& terms) {
  MultiSeries s = MultiSeries::constant(caps, total_cap, c0);
  for (const auto& [var, coeff] : terms) {
    MultiSeries::Key e(caps.size(), 0);
    e[var] = 1;
    if (caps[var] >= 1 && total_cap >= 1) s.set_coeff(e, coeff);
  }
  return s;
}

}  // namespace

MultiSeries psi_series(const QuotProblem& p, const std::vector<unsigned>& caps) {
  return psi_series(p, caps, std::accumulate(caps.begin(), caps.end(), 0u));
}

MultiSeries psi_series(const QuotProblem& p, const std::vector<unsigned>& caps,
                       unsigned total_cap) {
  if (caps.size() != static_cast<std::size_t>(p.N))
    throw std::invalid_argument("expected one cap per localization variable");
  const JetSpecPtr js = p.jet_spec();
  const std::size_t n = caps.size();
  const Jet one = Jet::constant(js, Rational(1));
  MultiSeries psi = MultiSeries::constant(caps, total_cap, one);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // (h_i - h_j + w_j - w_i)^2
      MultiSeries f = ms_linear(caps, total_cap,
                                Jet::constant(js, p.weights[j] - p.weights[i]),
                                {{i, one}, {j, -one}});
      psi *= f;
      psi *= f;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (1 + h_i + w_j - w_i)
      psi *= ms_linear(caps, total_cap,
                       Jet::constant(js, Rational(1) + p.weights[j] - p.weights[i]),
                       {{i, one}});
      // (1 + h_i - h_j + w_j - w_i)^{-1}; the i = j factor is exactly 1.
      if (i != j)
        psi *= ms_linear(caps, total_cap,
                         Jet::constant(js, Rational(1) + p.weights[j] - p.weights[i]),
                         {{i, one}, {j, -one}})
                   .invert();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // (h_i + w_j - w_i)^{-1}
      psi *= ms_linear(caps, total_cap,
                       Jet::constant(js, p.weights[j] - p.weights[i]), {{i, one}})
                 .invert();
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < p.insertions(); ++m) {
      Jet xm = Jet::variable(js, m);
      // (1 + x_m (w_i - h_i))^{-1-d_m} (1 + x_m w_i)^{d_m+1}
      MultiSeries base =
          ms_linear(caps, total_cap, one + xm * p.weights[i], {{i, -xm}});
      psi *= base.int_power(-1 - p.degrees[m]);
      psi = psi.scaled((one + xm * p.weights[i]).int_power(p.degrees[m] + 1));
    }
  return psi;
}

namespace {

// Shared state for extracting fixed-locus contributions: psi once, plus
// phi_i powers up to the largest part each variable can take.
class LocalizationTables {
 public:
  LocalizationTables(const QuotProblem& p, const std::vector<unsigned>& h_caps,
                     unsigned total_cap)
      : prob_(p), jspec_(p.jet_spec()), psi_(psi_series(p, h_caps, total_cap)) {
    phi_pow_.resize(p.N);
    for (int i = 0; i < p.N; ++i) {
      const unsigned cap = h_caps[i];
      Series<Jet> phi = phi_series(p, i, cap);
      phi_pow_[i].reserve(cap + 1);
      phi_pow_[i].push_back(Series<Jet>::constant("h", cap, Jet::constant(jspec_, Rational(1))));
      for (unsigned pw = 1; pw <= cap; ++pw)
        phi_pow_[i].push_back(phi_pow_[i].back() * phi);
    }
  }

  // Coefficient of h^composition in phi_1^{n_1}..phi_N^{n_N} * psi,
  // multiplied by the localization sign.
  Jet contribution(const std::vector<unsigned>& comp) const {
    const unsigned n = std::accumulate(comp.begin(), comp.end(), 0u);
    Jet acc(jspec_);
    for (const auto& [b, psi_b] : psi_.terms()) {
      bool ok = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        if (b[i] > comp[i]) { ok = false; break; }
      if (!ok) continue;
      Jet term = phi_pow_[0][comp[0]][comp[0] - b[0]];
      for (std::size_t i = 1; i < comp.size(); ++i)
        term *= phi_pow_[i][comp[i]][comp[i] - b[i]];
      acc.add_mul(psi_b, term);
    }
    const bool negative = ((static_cast<unsigned long>(n) * prob_.N +
                            static_cast<unsigned long>(prob_.N) * (prob_.N - 1) / 2) %
                           2) != 0;
    return negative ? -acc : acc;
  }

 private:
  const QuotProblem& prob_;
  JetSpecPtr jspec_;
  MultiSeries psi_;
  std::vector<std::vector<Series<Jet>>> phi_pow_;
};

}  // namespace

Jet fixed_locus_contribution(const QuotProblem& p, const std::vector<unsigned>& composition) {
  if (composition.size() != static_cast<std::size_t>(p.N))
    throw std::invalid_argument("composition length must equal the rank");
  const unsigned n = std::accumulate(composition.begin(), composition.end(), 0u);
  LocalizationTables tables(p, composition, n);
  return tables.contribution(composition);
}

Series<Jet> quot_oracle_series_at(const QuotProblem& p) {
  const JetSpecPtr js = p.jet_spec();
  // One psi for the whole series: per-variable caps and the total cap both
  // equal the q-order, so every composition's extraction stays exact.
  LocalizationTables tables(p, std::vector<unsigned>(p.N, p.order), p.order);
  Series<Jet> w("q", p.order, Jet(js));
  for (unsigned n = 0; n <= p.order; ++n) {
    Jet c(js);
    for (const std::vector<unsigned>& comp : compositions(n, p.N))
      c += tables.contribution(comp);
    w[n] = std::move(c);
  }
  return w;
}

namespace {

// Oracle runs with the weight vector scaled by 1/2, 1/3, ...; scales whose
// weight differences hit +-1 are skipped, so every run is admissible.  The
// pool grows on demand and is shared by all coefficients of one limit.
class RayOracleSamples {
 public:
  explicit RayOracleSamples(const QuotProblem& p) : prob_(p) {
    for (std::size_t i = 0; i < p.weights.size(); ++i)
      for (std::size_t j = i + 1; j < p.weights.size(); ++j)
        gaps_.push_back(p.weights[j] - p.weights[i]);
  }

  const std::vector<Rational>& gaps() const { return gaps_; }
  std::size_t size() const { return runs_.size(); }

  void ensure(std::size_t count) {
    const Rational one(1);
    while (runs_.size() < count) {
      ++denom_;
      const Rational t(1, denom_);
      bool admissible = true;
      for (const Rational& d : gaps_) {
        const Rational scaled = d * t;
        if (scaled == one || scaled == -one) { admissible = false; break; }
      }
      if (!admissible) continue;
      QuotProblem scaled = prob_;
      for (Rational& w : scaled.weights) w *= t;
      runs_.emplace_back(t, quot_oracle_series_at(scaled));
    }
  }

  const Rational& scale(std::size_t v) const { return runs_[v].first; }
  const Rational& value(std::size_t v, unsigned n, std::size_t idx) const {
    return runs_[v].second[n][idx];
  }

 private:
  const QuotProblem& prob_;
  std::vector<Rational> gaps_;
  long denom_ = 1;
  std::vector<std::pair<Rational, Series<Jet>>> runs_;
};

// Value at z of the polynomial of degree < m through (t_v, y_v), v < m.
Rational lagrange_at(const std::vector<Rational>& t, const std::vector<Rational>& y,
                     std::size_t m, const Rational& z) {
  Rational acc;
  for (std::size_t v = 0; v < m; ++v) {
    Rational basis(1);
    for (std::size_t u = 0; u < m; ++u) {
      if (u == v) continue;
      basis *= (z - t[u]) / (t[v] - t[u]);
    }
    acc += y[v] * basis;
  }
  return acc;
}

// One scalar limit: clear the known denominator, interpolate the numerator,
// confirm the model on held-out scales, and read off the value at scale 0.
// A failed confirmation raises the modelled exponent and degree and retries.
Rational scale_limit(RayOracleSamples& samples, unsigned n, std::size_t idx, unsigned xdeg) {
  const std::size_t pairs = samples.gaps().size();
  const unsigned base = n == 0 ? 0 : n - 1;
  const std::size_t guards = 3;
  for (unsigned extra = 0; extra <= 8; ++extra) {
    const unsigned expo = base + extra;
    const std::size_t points = 2 * pairs * expo + xdeg + extra + 1;
    samples.ensure(points + guards);
    std::vector<Rational> ts(points + guards), ys(points + guards);
    for (std::size_t v = 0; v < points + guards; ++v) {
      ts[v] = samples.scale(v);
      Rational clear(1);
      const Rational t2 = ts[v] * ts[v];
      for (const Rational& d : samples.gaps())
        clear *= (Rational(1) - d * d * t2).pow(expo);
      ys[v] = samples.value(v, n, idx) * clear;
    }
    bool confirmed = true;
    for (std::size_t g = 0; g < guards && confirmed; ++g)
      confirmed = lagrange_at(ts, ys, points, ts[points + g]) == ys[points + g];
    if (confirmed) return lagrange_at(ts, ys, points, Rational(0));
  }
  throw std::logic_error("weight-scale limit did not stabilize");
}

}  // namespace

Series<Jet> quot_oracle_series(const QuotProblem& p) {
  const JetSpecPtr js = p.jet_spec();
  RayOracleSamples samples(p);
  Series<Jet> w("q", p.order, Jet(js));
  for (unsigned n = 0; n <= p.order; ++n) {
    Jet c(js);
    for (std::size_t idx = 0; idx < js->size(); ++idx)
      c[idx] = scale_limit(samples, n, idx, js->total_degree(idx));
    w[n] = std::move(c);
  }
  return w;
}

}  // namespace quotser
