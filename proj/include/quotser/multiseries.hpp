#pragma once

#include <map>
#include <vector>

#include "quotser/jet.hpp"

namespace quotser {

// Sparse multivariate series in the localization variables h_1..h_N, with
// jet coefficients.  Truncation keeps exponent e_i <= caps[i] for every i
// and sum(e) <= total_cap; both constraints are monomial ideals, so the
// truncation is a ring homomorphism and any retained coefficient is exact.
class MultiSeries {
 public:
  using Key = std::vector<unsigned>;

  MultiSeries(std::vector<unsigned> caps, unsigned total_cap, JetSpecPtr jet_spec);

  static MultiSeries constant(std::vector<unsigned> caps, unsigned total_cap,
                              const Jet& value);
  // The series h_i.
  static MultiSeries variable(std::vector<unsigned> caps, unsigned total_cap,
                              JetSpecPtr jet_spec, std::size_t i);

  std::size_t vars() const { return caps_.size(); }
  const std::vector<unsigned>& caps() const { return caps_; }
  unsigned total_cap() const { return total_cap_; }
  const JetSpecPtr& jet_spec() const { return jspec_; }

  Jet coeff(const Key& e) const;
  void set_coeff(const Key& e, Jet value);
  const std::map<Key, Jet>& terms() const { return c_; }

  MultiSeries operator-() const;
  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { a += b; return a; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { a -= b; return a; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }
  MultiSeries scaled(const Jet& s) const;

  // Inverse when the constant coefficient is a unit jet; solved upward in
  // total degree, so the cost matches one dense multiplication.
  MultiSeries invert() const;
  MultiSeries int_power(long e) const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);
  friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

 private:
  bool in_range(const Key& e) const;
  void prune();

  std::vector<unsigned> caps_;
  unsigned total_cap_;
  JetSpecPtr jspec_;
  std::map<Key, Jet> c_;
};

}  // namespace quotser
