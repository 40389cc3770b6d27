#include "quotser/rational.hpp"

#include <ostream>

namespace quotser {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  Rational r;
  if (s.empty() || mpq_set_str(r.v_.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw std::invalid_argument("cannot parse rational: \"" + std::string(s) + "\"");
  if (mpz_sgn(r.v_.get_den_mpz_t()) == 0)
    throw std::invalid_argument("rational with zero denominator: \"" + std::string(s) + "\"");
  r.v_.canonicalize();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return Rational(0);
  }
  const Rational base = e > 0 ? *this : inverse();
  unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(base.v_.get_mpq_t()), k);
  mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(base.v_.get_mpq_t()), k);
  // base is canonical, so base^k is as well.
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational binomial(long top, long k) {
  if (k < 0) return Rational(0);
  mpz_class num(1);
  for (long j = 0; j < k; ++j) num *= mpz_class(top - j);
  mpz_class den(1);
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(num, den));
}

}  // namespace quotser
