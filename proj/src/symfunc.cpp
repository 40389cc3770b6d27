#include "quotser/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "quotser/linalg.hpp"
#include "quotser/series.hpp"

namespace quotser {

Rational sigma_binomial(const SigmaParams& p, long n) {
  if (n + p.a < 0)
    throw std::invalid_argument("sigma needs n + a >= 0");
  const long top = n + p.c;
  if (top < 0) return Rational(0);
  Rational acc;
  for (long w = 0; w <= top; ++w) {
    if (p.b >= 0 && w > p.b) break;  // remaining terms vanish
    const Rational cb = binomial(p.b, w);
    if (cb.is_zero()) continue;
    const long v = top - w;
    Rational term = binomial(n + p.a, v) * cb;
    if (v % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

Rational star_form_value(const StarForm& f, long n) {
  const Rational arg(n);
  Rational v = f.p1.evaluate(arg) + Rational(2).pow(n) * f.p2.evaluate(arg);
  return (n % 2 != 0) ? -v : v;
}

namespace {

std::optional<StarForm> fit_window(const SigmaParams& p, long n0, unsigned bound) {
  const std::size_t unknowns = 2 * (bound + 1);
  Matrix m(unknowns, std::vector<Rational>(unknowns, Rational(0)));
  std::vector<Rational> rhs(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) {
    const long n = n0 + static_cast<long>(r);
    const Rational sign = (n % 2 != 0) ? Rational(-1) : Rational(1);
    const Rational two_n = Rational(2).pow(n);
    Rational npow(1);
    for (unsigned k = 0; k <= bound; ++k) {
      m[r][k] = sign * npow;
      m[r][bound + 1 + k] = sign * two_n * npow;
      npow *= Rational(n);
    }
    rhs[r] = sigma_binomial(p, n);
  }
  auto x = solve_linear(std::move(m), rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> p1(x->begin(), x->begin() + bound + 1);
  std::vector<Rational> p2(x->begin() + bound + 1, x->end());
  return StarForm{UniPolynomial(std::move(p1)), UniPolynomial(std::move(p2)), n0};
}

unsigned verify_form(const SigmaParams& p, const StarForm& f, long from, long n_max) {
  unsigned count = 0;
  for (long n = from; n <= n_max; ++n) {
    if (star_form_value(f, n) != sigma_binomial(p, n)) return count;
    ++count;
  }
  return count;
}

}  // namespace

SigmaFitResult sigma_star_fit(const SigmaParams& p, long n_max) {
  const long n0 = std::max({0l, -p.a, -p.c});
  const unsigned first_bound =
      static_cast<unsigned>(std::max({std::labs(p.a), std::labs(p.b), std::labs(p.c)})) + 2;
  const unsigned wide_bound =
      static_cast<unsigned>(std::labs(p.a) + std::labs(p.b) + std::labs(p.c)) + 3;
  for (const unsigned bound : {first_bound, std::max(wide_bound, first_bound + 1)}) {
    const long fit_end = n0 + 2 * static_cast<long>(bound + 1) - 1;
    if (n_max < fit_end + 50)
      throw std::invalid_argument(
          "sigma fit needs n_max to leave at least 50 values beyond the sample window");
    SigmaFitResult res;
    res.degree_bound = bound;
    res.widened = bound != first_bound;
    std::optional<StarForm> form = fit_window(p, n0, bound);
    if (!form) continue;
    const long total = n_max - fit_end;
    const unsigned ok = verify_form(p, *form, fit_end + 1, n_max);
    if (ok == static_cast<unsigned>(total)) {
      res.form = std::move(form);
      res.verified = ok;
      return res;
    }
    if (res.widened) return res;  // wide bound also failed: report no fit
  }
  return SigmaFitResult{std::nullopt, std::max(wide_bound, first_bound + 1), true, 0};
}

Rational sigma_vandermonde(long big_a, long m, long i, long j, long k, long r1, long r2,
                           long r3, long n) {
  if (n + r1 - i < 0)
    throw std::invalid_argument("the n-dependent binomial argument must be non-negative");
  const long t = n + k + r3;  // shifted total v' + w' + L after v -> v-i, w -> w-j
  Rational triple;
  if (t >= 0) {
    for (long l = 0; l <= t; ++l) {
      const Rational cl = binomial(big_a - m, l);
      if (cl.is_zero()) continue;
      for (long vs = 0; vs + l <= t; ++vs) {
        const Rational cv = binomial(n + r1 - i, vs);
        if (cv.is_zero()) continue;
        const long ws = t - l - vs;
        Rational term = cl * cv * binomial(r2 - j, ws);
        if ((vs + l) % 2 != 0) term = -term;
        triple += term;
      }
    }
  }
  Rational collapsed;
  for (long vs = 0; vs <= std::max(t, -1l); ++vs) {
    Rational term = binomial(big_a - m + n + r1 - i, vs) * binomial(r2 - j, t - vs);
    if (vs % 2 != 0) term = -term;
    collapsed += term;
  }
  if (triple != collapsed)
    throw std::logic_error("Vandermonde collapse disagrees with the triple sum");
  return collapsed;
}

Rational power_sum(const std::vector<Rational>& roots, long d, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Rational acc;
  for (const Rational& x : roots) {
    Rational base = Rational(1) + (sign == 1 ? x : -x);
    if (base.is_zero()) throw std::domain_error("power sum hits a zero denominator");
    acc += base.pow(-d);
  }
  return acc;
}

std::vector<Rational> power_sums(const std::vector<Rational>& roots, long d_max, int sign) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(0l, d_max)));
  for (long d = 1; d <= d_max; ++d) out.push_back(power_sum(roots, d, sign));
  return out;
}

std::vector<Rational> complete_from_power_sums(const std::vector<Rational>& p,
                                               unsigned j_max) {
  if (p.size() < j_max)
    throw std::invalid_argument("need power sums P_1..P_jmax");
  QSeries u("t", j_max, Rational(0));
  for (unsigned d = 1; d <= j_max; ++d) u[d] = p[d - 1] / Rational(static_cast<long>(d));
  const QSeries h = u.exp_series();
  return h.coefficients();
}

std::vector<Rational> chern_char_from_classes(const std::vector<Rational>& c, long rank,
                                              unsigned k_max) {
  std::vector<Rational> ch(k_max + 1);
  ch[0] = Rational(rank);
  std::vector<Rational> p(k_max + 1);  // Newton power sums of the Chern roots
  Rational factorial(1);
  for (unsigned k = 1; k <= k_max; ++k) {
    auto cc = [&](unsigned idx) {
      return idx >= 1 && idx <= c.size() ? c[idx - 1] : Rational(0);
    };
    Rational pk = cc(k) * Rational(static_cast<long>(k));  // (-1)^{k-1} k c_k
    if (k % 2 == 0) pk = -pk;
    for (unsigned i = 1; i < k; ++i) {
      Rational term = cc(i) * p[k - i];
      if (i % 2 == 0) term = -term;
      pk += term;
    }
    p[k] = pk;
    factorial *= Rational(static_cast<long>(k));
    ch[k] = pk / factorial;
  }
  return ch;
}

}  // namespace quotser
