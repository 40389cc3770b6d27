#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "quotser/rational.hpp"

namespace quotser {

// Exponent box for a jet ring Q[x_1..x_l]/(x_m^{cap_m+1}).  Instances are
// shared by all jets of one computation; the pairwise index-sum table makes
// jet multiplication a flat double loop with no exponent decoding.
class JetSpec {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  explicit JetSpec(std::vector<unsigned> caps);

  std::size_t vars() const { return caps_.size(); }
  const std::vector<unsigned>& caps() const { return caps_; }
  std::size_t size() const { return exps_.size(); }

  const std::vector<unsigned>& exponents(std::size_t idx) const { return exps_[idx]; }
  unsigned total_degree(std::size_t idx) const { return degree_[idx]; }
  std::size_t index_of(const std::vector<unsigned>& e) const;

  // Index of the monomial x^(e_i + e_j), or kNoIndex when it leaves the box.
  std::size_t sum_index(std::size_t i, std::size_t j) const { return sum_[i * size() + j]; }

  // All indices ordered by ascending total degree (ties by index), the order
  // in which triangular systems over the jet ring are solved.
  const std::vector<std::size_t>& degree_order() const { return degree_order_; }

  // "x1^2 x3" style display name of a monomial; "1" for the constant.
  std::string monomial_name(std::size_t idx) const;
  // "2,0,1" exponent key used in JSON output.
  std::string exponent_key(std::size_t idx) const;

  friend bool operator==(const JetSpec& a, const JetSpec& b) { return a.caps_ == b.caps_; }

 private:
  std::vector<unsigned> caps_;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<unsigned>> exps_;
  std::vector<unsigned> degree_;
  std::vector<std::size_t> sum_;
  std::vector<std::size_t> degree_order_;
};

using JetSpecPtr = std::shared_ptr<const JetSpec>;

JetSpecPtr make_jet_spec(std::vector<unsigned> caps);

// Element of the jet ring: a polynomial in the descendent variables with all
// exponents clamped to the spec's box.  Multiplication discards monomials
// outside the box, which is reduction mod a monomial ideal, so arithmetic
// here is (exact) arithmetic in the quotient ring.
class Jet {
 public:
  explicit Jet(JetSpecPtr spec) : spec_(std::move(spec)), c_(spec_->size()) {}

  static Jet constant(JetSpecPtr spec, const Rational& value);
  static Jet variable(JetSpecPtr spec, std::size_t var);

  const JetSpecPtr& spec() const { return spec_; }
  std::size_t size() const { return c_.size(); }

  const Rational& operator[](std::size_t idx) const { return c_[idx]; }
  Rational& operator[](std::size_t idx) { return c_[idx]; }
  const Rational& coeff(const std::vector<unsigned>& e) const { return c_[spec_->index_of(e)]; }

  const Rational& constant_part() const { return c_[0]; }
  bool is_zero() const;
  bool is_unit() const { return !c_[0].is_zero(); }

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
  friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
  friend Jet operator*(const Jet& a, const Jet& b);
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  Jet operator*(const Rational& s) const;

  // *this += a * b in place; the accumulation pattern all series code uses.
  void add_mul(const Jet& a, const Jet& b);
  void sub_mul(const Jet& a, const Jet& b);

  // Inverse in the jet ring; exists iff the constant part is nonzero, since
  // the positive-degree part is nilpotent.
  Jet inverse() const;
  Jet int_power(long e) const;

  // Image under the ring map onto a spec with componentwise smaller caps.
  Jet truncated(const JetSpecPtr& smaller) const;

  std::string str() const;

  friend bool operator==(const Jet& a, const Jet& b);
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

 private:
  JetSpecPtr spec_;
  std::vector<Rational> c_;
};

inline Jet ring_zero(const Jet& like) { return Jet(like.spec()); }
inline Jet ring_one(const Jet& like) { return Jet::constant(like.spec(), Rational(1)); }
inline bool ring_is_unit(const Jet& j) { return j.is_unit(); }
inline Jet ring_inverse(const Jet& j) { return j.inverse(); }

}  // namespace quotser
