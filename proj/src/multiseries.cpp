#include "quotser/multiseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quotser {

namespace {

void check_shapes(const MultiSeries& a, const MultiSeries& b) {
  if (a.caps() != b.caps() || a.total_cap() != b.total_cap())
    throw std::invalid_argument("multiseries arithmetic across different truncations");
  if (a.jet_spec() != b.jet_spec() && !(*a.jet_spec() == *b.jet_spec()))
    throw std::invalid_argument("multiseries arithmetic across different jet boxes");
}

unsigned total(const MultiSeries::Key& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// All keys in the truncation box, ascending by total degree.
std::vector<MultiSeries::Key> keys_by_degree(const std::vector<unsigned>& caps,
                                             unsigned total_cap) {
  std::vector<MultiSeries::Key> keys;
  MultiSeries::Key cur(caps.size(), 0);
  // Odometer enumeration, then a stable sort by degree.
  for (;;) {
    if (total(cur) <= total_cap) keys.push_back(cur);
    std::size_t i = 0;
    while (i < caps.size() && cur[i] == caps[i]) cur[i++] = 0;
    if (i == caps.size()) break;
    ++cur[i];
  }
  std::stable_sort(keys.begin(), keys.end(),
                   [](const MultiSeries::Key& a, const MultiSeries::Key& b) {
                     return total(a) < total(b);
                   });
  return keys;
}

}  // namespace

MultiSeries::MultiSeries(std::vector<unsigned> caps, unsigned total_cap, JetSpecPtr jet_spec)
    : caps_(std::move(caps)), total_cap_(total_cap), jspec_(std::move(jet_spec)) {}

MultiSeries MultiSeries::constant(std::vector<unsigned> caps, unsigned total_cap,
                                  const Jet& value) {
  MultiSeries s(std::move(caps), total_cap, value.spec());
  if (!value.is_zero()) s.c_.emplace(Key(s.caps_.size(), 0), value);
  return s;
}

MultiSeries MultiSeries::variable(std::vector<unsigned> caps, unsigned total_cap,
                                  JetSpecPtr jet_spec, std::size_t i) {
  MultiSeries s(std::move(caps), total_cap, jet_spec);
  if (i >= s.caps_.size()) throw std::invalid_argument("multiseries variable out of range");
  Key e(s.caps_.size(), 0);
  e[i] = 1;
  if (s.in_range(e)) s.c_.emplace(std::move(e), Jet::constant(jet_spec, Rational(1)));
  return s;
}

bool MultiSeries::in_range(const Key& e) const {
  for (std::size_t i = 0; i < caps_.size(); ++i)
    if (e[i] > caps_[i]) return false;
  return total(e) <= total_cap_;
}

void MultiSeries::prune() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second.is_zero() ? c_.erase(it) : std::next(it);
}

Jet MultiSeries::coeff(const Key& e) const {
  if (e.size() != caps_.size()) throw std::invalid_argument("multiseries key of wrong length");
  if (!in_range(e))
    throw std::invalid_argument("multiseries coefficient outside the truncation box");
  auto it = c_.find(e);
  return it != c_.end() ? it->second : Jet(jspec_);
}

void MultiSeries::set_coeff(const Key& e, Jet value) {
  if (e.size() != caps_.size()) throw std::invalid_argument("multiseries key of wrong length");
  if (!in_range(e))
    throw std::invalid_argument("multiseries coefficient outside the truncation box");
  if (value.is_zero())
    c_.erase(e);
  else
    c_.insert_or_assign(e, std::move(value));
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r(caps_, total_cap_, jspec_);
  for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_shapes(*this, o);
  for (const auto& [k, v] : o.c_) {
    auto [it, inserted] = c_.try_emplace(k, v);
    if (!inserted) it->second += v;
  }
  prune();
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  check_shapes(*this, o);
  for (const auto& [k, v] : o.c_) {
    auto [it, inserted] = c_.try_emplace(k, -v);
    if (!inserted) it->second -= v;
  }
  prune();
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  check_shapes(a, b);
  MultiSeries r(a.caps_, a.total_cap_, a.jspec_);
  const Jet zero(a.jspec_);
  MultiSeries::Key sum(a.caps_.size());
  for (const auto& [ka, va] : a.c_) {
    const unsigned da = total(ka);
    for (const auto& [kb, vb] : b.c_) {
      if (da + total(kb) > a.total_cap_) continue;
      bool ok = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = ka[i] + kb[i];
        if (sum[i] > a.caps_[i]) { ok = false; break; }
      }
      if (!ok) continue;
      r.c_.try_emplace(sum, zero).first->second.add_mul(va, vb);
    }
  }
  r.prune();
  return r;
}

MultiSeries MultiSeries::scaled(const Jet& s) const {
  MultiSeries r(caps_, total_cap_, jspec_);
  for (const auto& [k, v] : c_) r.c_.emplace(k, v * s);
  r.prune();
  return r;
}

MultiSeries MultiSeries::invert() const {
  const Key zero_key(caps_.size(), 0);
  auto it0 = c_.find(zero_key);
  if (it0 == c_.end() || !it0->second.is_unit())
    throw std::domain_error("multiseries inverse: constant coefficient is not a unit");
  const Jet a0inv = it0->second.inverse();
  MultiSeries b(caps_, total_cap_, jspec_);
  Jet acc(jspec_);
  Key diff(caps_.size());
  for (const Key& e : keys_by_degree(caps_, total_cap_)) {
    acc = Jet(jspec_);
    if (e == zero_key) acc[0] = Rational(1);
    for (const auto& [f, vf] : c_) {
      if (f == zero_key) continue;
      bool ok = true;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        if (f[i] > e[i]) { ok = false; break; }
        diff[i] = e[i] - f[i];
      }
      if (!ok) continue;
      auto itb = b.c_.find(diff);
      if (itb != b.c_.end()) acc.sub_mul(vf, itb->second);
    }
    Jet val = acc * a0inv;
    if (!val.is_zero()) b.c_.emplace(e, std::move(val));
  }
  return b;
}

MultiSeries MultiSeries::int_power(long e) const {
  if (e < 0) return invert().int_power(-e);
  MultiSeries base = *this;
  MultiSeries r = constant(caps_, total_cap_, Jet::constant(jspec_, Rational(1)));
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= base;
    if (k >>= 1) base *= base;
  }
  return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  check_shapes(a, b);
  MultiSeries x = a, y = b;
  x.prune();
  y.prune();
  return x.c_ == y.c_;
}

}  // namespace quotser
