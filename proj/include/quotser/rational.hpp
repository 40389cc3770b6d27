#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quotser {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.  Every coefficient in the library is one of these;
// no floating point appears anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational from_string(std::string_view s);

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
  bool is_unit() const { return !is_zero(); }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational inverse() const;
  Rational pow(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  // *this += a * b, without materialising a temporary Rational.
  void add_mul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }
  void sub_mul(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "num/den" in lowest terms; integers print without the "/1".
  std::string str() const { return v_.get_str(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // Truncating conversion used only for display heuristics (never for math).
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline bool ring_is_unit(const Rational& r) { return r.is_unit(); }
inline Rational ring_inverse(const Rational& r) { return r.inverse(); }

// C(top, k) via the falling factorial, valid for negative top as well.
Rational binomial(long top, long k);

}  // namespace quotser
