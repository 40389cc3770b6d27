#pragma once

#include <string>
#include <vector>

#include "quotser/rational.hpp"
#include "quotser/series.hpp"

namespace quotser {

// Dense univariate polynomial over the rationals.  The zero polynomial is an
// empty coefficient vector; otherwise the leading coefficient is nonzero.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coeffs);
  static UniPolynomial constant(const Rational& c);
  static UniPolynomial from_longs(const std::vector<long>& coeffs);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;

  UniPolynomial operator-() const;
  friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  UniPolynomial scaled(const Rational& s) const;

  // Euclidean division: returns (quotient, remainder) with deg r < deg b.
  static std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& a,
                                                        const UniPolynomial& b);

  UniPolynomial derivative() const;
  UniPolynomial monic() const;

  std::string str(const std::string& variable) const;

  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPolynomial& a, const UniPolynomial& b) { return !(a == b); }

 private:
  std::vector<Rational> c_;
  void trim();
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
UniPolynomial poly_gcd(UniPolynomial a, UniPolynomial b);

// Quotient of two polynomials, kept reduced (coprime) with the denominator's
// constant term normalised to 1.  Series all start at q = 0, so denominators
// vanishing at 0 are rejected.
class RationalFunction {
 public:
  RationalFunction();  // 0/1
  RationalFunction(UniPolynomial numerator, UniPolynomial denominator);

  const UniPolynomial& numerator() const { return num_; }
  const UniPolynomial& denominator() const { return den_; }

  // Taylor coefficients at 0, exact to the requested order.
  QSeries expand(const std::string& variable, unsigned order) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& variable) const;

 private:
  UniPolynomial num_, den_;
};

}  // namespace quotser
