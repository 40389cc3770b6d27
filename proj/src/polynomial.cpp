#include "quotser/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quotser {

UniPolynomial::UniPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPolynomial UniPolynomial::constant(const Rational& c) {
  return UniPolynomial(std::vector<Rational>{c});
}

UniPolynomial UniPolynomial::from_longs(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return UniPolynomial(std::move(c));
}

void UniPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPolynomial::evaluate(const Rational& x) const {
  Rational r;
  for (std::size_t k = c_.size(); k-- > 0;) {
    r *= x;
    r += c_[k];
  }
  return r;
}

UniPolynomial UniPolynomial::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const Rational& x : c_) c.push_back(-x);
  return UniPolynomial(std::move(c));
}

UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return UniPolynomial(std::move(c));
}

UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return UniPolynomial(std::move(c));
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UniPolynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_mul(a.c_[i], b.c_[j]);
  return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::scaled(const Rational& s) const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const Rational& x : c_) c.push_back(x * s);
  return UniPolynomial(std::move(c));
}

std::pair<UniPolynomial, UniPolynomial> UniPolynomial::divmod(const UniPolynomial& a,
                                                              const UniPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  if (a.degree() < b.degree()) return {UniPolynomial(), a};
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  const Rational lead_inv = b.leading().inverse();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = r[k + b.degree()] * lead_inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (long j = 0; j <= b.degree(); ++j) r[k + j].sub_mul(f, b.c_[j]);
  }
  return {UniPolynomial(std::move(q)), UniPolynomial(std::move(r))};
}

UniPolynomial UniPolynomial::derivative() const {
  if (c_.size() <= 1) return UniPolynomial();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t k = 0; k + 1 < c_.size(); ++k)
    c[k] = c_[k + 1] * Rational(static_cast<long>(k) + 1);
  return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::string UniPolynomial::str(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool any = false;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (any) os << " + ";
    if (k == 0 || !c_[k].is_one()) {
      os << c_[k].str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << variable;
    if (k >= 2) os << '^' << k;
    any = true;
  }
  return os.str();
}

UniPolynomial poly_gcd(UniPolynomial a, UniPolynomial b) {
  while (!b.is_zero()) {
    UniPolynomial r = UniPolynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction()
    : num_(), den_(UniPolynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(UniPolynomial numerator, UniPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPolynomial::constant(Rational(1));
    return;
  }
  UniPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UniPolynomial::divmod(num_, g).first;
    den_ = UniPolynomial::divmod(den_, g).first;
  }
  const Rational d0 = den_.coefficient(0);
  if (d0.is_zero())
    throw std::invalid_argument("rational function with a pole at 0 cannot represent a series");
  num_ = num_.scaled(d0.inverse());
  den_ = den_.scaled(d0.inverse());
}

QSeries RationalFunction::expand(const std::string& variable, unsigned order) const {
  QSeries n(variable, order, Rational(0));
  QSeries d(variable, order, Rational(0));
  for (unsigned k = 0; k <= order; ++k) {
    n[k] = num_.coefficient(k);
    d[k] = den_.coefficient(k);
  }
  return n * d.invert();
}

std::string RationalFunction::str(const std::string& variable) const {
  return "(" + num_.str(variable) + ") / (" + den_.str(variable) + ")";
}

}  // namespace quotser
