#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quotser/rational.hpp"

namespace quotser {

// Truncated power series over an exact commutative ring R, stored densely as
// coefficients 0..order.  Truncation at a fixed order is a ring homomorphism,
// so every operation below is exact on the coefficients it returns.
//
// R must provide ring_zero(like), ring_one(like), ring_is_unit(x),
// ring_inverse(x), +, -, *, ==, and add_mul/sub_mul accumulation.  Rational
// and Jet both qualify.
template <class R>
class Series {
 public:
  Series(std::string variable, unsigned order, const R& zero)
      : var_(std::move(variable)), c_(order + 1, zero) {}

  static Series constant(std::string variable, unsigned order, const R& value) {
    Series s(std::move(variable), order, ring_zero(value));
    s.c_[0] = value;
    return s;
  }

  // value + coeff * var, the building block for product formulas.
  static Series linear(std::string variable, unsigned order, const R& value, const R& coeff) {
    Series s = constant(std::move(variable), order, value);
    if (order >= 1) s.c_[1] = coeff;
    return s;
  }

  static Series identity(std::string variable, unsigned order, const R& like) {
    return linear(std::move(variable), order, ring_zero(like), ring_one(like));
  }

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const std::string& variable() const { return var_; }

  const R& operator[](unsigned k) const { return c_.at(k); }
  R& operator[](unsigned k) { return c_.at(k); }
  const std::vector<R>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const R& x : c_)
      if (!(x == ring_zero(x))) return false;
    return true;
  }

  Series truncated(unsigned new_order) const {
    if (new_order >= order()) {
      Series s = *this;
      s.c_.resize(new_order + 1, ring_zero(c_[0]));
      return s;
    }
    Series s(var_, new_order, ring_zero(c_[0]));
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
  }

  Series with_variable(std::string variable) const {
    Series s = *this;
    s.var_ = std::move(variable);
    return s;
  }

  Series operator-() const {
    Series s = *this;
    const R zero = ring_zero(c_[0]);
    for (R& x : s.c_) x = zero - x;
    return s;
  }

  Series& operator+=(const Series& o) {
    check_same(o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_same(o);
    for (unsigned k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { a += b; return a; }
  friend Series operator-(Series a, const Series& b) { a -= b; return a; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_same(b);
    Series r(a.var_, a.order(), ring_zero(a.c_[0]));
    for (unsigned k = 0; k <= r.order(); ++k)
      for (unsigned j = 0; j <= k; ++j) r.c_[k].add_mul(a.c_[j], b.c_[k - j]);
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  template <class S>
  Series scaled(const S& s) const {
    Series r = *this;
    for (R& x : r.c_) x = x * s;
    return r;
  }

  // Multiplication by var^k (coefficients above the order fall away).
  Series shifted_up(unsigned k) const {
    Series r(var_, order(), ring_zero(c_[0]));
    for (unsigned j = k; j <= order(); ++j) r.c_[j] = c_[j - k];
    return r;
  }

  // Division by var^k; requires the low k coefficients to vanish.  The
  // result honestly loses k known coefficients, hence the smaller order.
  Series shifted_down(unsigned k) const {
    if (k > order()) throw std::invalid_argument("shifted_down past the truncation order");
    const R zero = ring_zero(c_[0]);
    for (unsigned j = 0; j < k; ++j)
      if (!(c_[j] == zero))
        throw std::invalid_argument("shifted_down of a series with nonzero low coefficients");
    Series r(var_, order() - k, zero);
    for (unsigned j = 0; j + k <= order(); ++j) r.c_[j] = c_[j + k];
    return r;
  }

  // Coefficients of d/dvar, one order lower (the top one is unknown).
  Series derivative() const {
    if (order() == 0) throw std::invalid_argument("derivative of an order-0 series");
    Series r(var_, order() - 1, ring_zero(c_[0]));
    for (unsigned k = 0; k + 1 <= order(); ++k) r.c_[k] = c_[k + 1] * Rational(static_cast<long>(k) + 1);
    return r;
  }

  // Multiplicative inverse; the constant term must be a unit of R.
  Series invert() const {
    if (!ring_is_unit(c_[0]))
      throw std::domain_error("series inverse: constant term is not a unit");
    Series b(var_, order(), ring_zero(c_[0]));
    const R c0inv = ring_inverse(c_[0]);
    b.c_[0] = c0inv;
    R acc = ring_zero(c_[0]);
    for (unsigned k = 1; k <= order(); ++k) {
      acc = ring_zero(acc);
      for (unsigned j = 1; j <= k; ++j) acc.add_mul(c_[j], b.c_[k - j]);
      b.c_[k] = ring_zero(acc) - acc * c0inv;
    }
    return b;
  }

  // Integer power; negative exponents go through invert().
  Series int_power(long e) const {
    if (e < 0) return invert().int_power(-e);
    Series base = *this;
    Series r = constant(var_, order(), ring_one(c_[0]));
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
      if (k & 1) r *= base;
      if (k >>= 1) base *= base;
    }
    return r;
  }

  // this∘inner; inner must have zero constant term.  The result is exact up
  // to min(order, inner.order).
  Series compose(const Series& inner) const {
    if (!(inner.c_[0] == ring_zero(inner.c_[0])))
      throw std::invalid_argument("series composition with nonzero inner constant term");
    const unsigned n = std::min(order(), inner.order());
    Series r = constant(inner.var_, n, c_[order()]);
    const Series in = inner.truncated(n);
    for (unsigned k = order(); k-- > 0;) {
      r *= in;
      r.c_[0] += c_[k];
    }
    return r;
  }

  // Compositional inverse: returns rev with this∘rev = identity (in the new
  // variable).  Needs zero constant term and a unit linear term.  Newton
  // iteration doubles the number of correct coefficients each round.
  Series revert(std::string result_variable) const {
    const R zero = ring_zero(c_[0]);
    if (!(c_[0] == zero))
      throw std::invalid_argument("series reversion with nonzero constant term");
    if (order() < 1 || !ring_is_unit(c_[1]))
      throw std::domain_error("series reversion: linear term is not a unit");
    Series s = with_variable(result_variable);
    Series r = linear(result_variable, order(), zero, ring_inverse(c_[1]));
    Series id = identity(result_variable, order(), c_[0]);
    for (unsigned correct = 2; correct < order() + 1; correct *= 2) {
      Series err = s.compose(r) - id;
      r -= err * s.derivative_composed(r);
    }
    Series check = s.compose(r) - id;
    if (!check.is_zero()) throw std::logic_error("series reversion failed to converge");
    return r;
  }

  // exp of a series with zero constant term, via e' = u'·e.
  Series exp_series() const {
    if (!(c_[0] == ring_zero(c_[0])))
      throw std::invalid_argument("series exp with nonzero constant term");
    Series e = constant(var_, order(), ring_one(c_[0]));
    for (unsigned k = 1; k <= order(); ++k) {
      R acc = ring_zero(c_[0]);
      for (unsigned j = 1; j <= k; ++j) {
        R term = c_[j] * Rational(static_cast<long>(j));
        acc.add_mul(term, e.c_[k - j]);
      }
      e.c_[k] = acc * Rational(1, static_cast<long>(k));
    }
    return e;
  }

  // log of a series with constant term exactly 1, via integrate(s'/s).
  Series log_series() const {
    if (!(c_[0] == ring_one(c_[0])))
      throw std::invalid_argument("series log requires constant term 1");
    Series l(var_, order(), ring_zero(c_[0]));
    if (order() == 0) return l;
    Series d = derivative() * invert().truncated(order() - 1);
    for (unsigned k = 1; k <= order(); ++k)
      l.c_[k] = d.c_[k - 1] * Rational(1, static_cast<long>(k));
    return l;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  // (d this/dvar)∘r, inverted: helper for the Newton step of revert().
  Series derivative_composed(const Series& r) const {
    Series d = derivative().truncated(order());
    return d.compose(r).truncated(order()).invert();
  }

  void check_same(const Series& o) const {
    if (var_ != o.var_)
      throw std::invalid_argument("series in different variables: " + var_ + " vs " + o.var_);
    if (order() != o.order())
      throw std::invalid_argument("series of different truncation orders");
  }

  std::string var_;
  std::vector<R> c_;
};

using QSeries = Series<Rational>;

}  // namespace quotser
