#include "quotser/jet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quotser {

JetSpec::JetSpec(std::vector<unsigned> caps) : caps_(std::move(caps)) {
  std::size_t n = 1;
  stride_.resize(caps_.size());
  for (std::size_t m = 0; m < caps_.size(); ++m) {
    stride_[m] = n;
    n *= caps_[m] + 1;
  }
  exps_.resize(n);
  degree_.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<unsigned> e(caps_.size());
    std::size_t rest = idx;
    unsigned deg = 0;
    for (std::size_t m = 0; m < caps_.size(); ++m) {
      e[m] = static_cast<unsigned>(rest % (caps_[m] + 1));
      rest /= caps_[m] + 1;
      deg += e[m];
    }
    exps_[idx] = std::move(e);
    degree_[idx] = deg;
  }
  sum_.assign(n * n, kNoIndex);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      std::size_t idx = 0;
      for (std::size_t m = 0; m < caps_.size(); ++m) {
        unsigned e = exps_[i][m] + exps_[j][m];
        if (e > caps_[m]) { ok = false; break; }
        idx += e * stride_[m];
      }
      if (ok) sum_[i * n + j] = idx;
    }
  degree_order_.resize(n);
  std::iota(degree_order_.begin(), degree_order_.end(), std::size_t{0});
  std::stable_sort(degree_order_.begin(), degree_order_.end(),
                   [this](std::size_t a, std::size_t b) { return degree_[a] < degree_[b]; });
}

std::size_t JetSpec::index_of(const std::vector<unsigned>& e) const {
  if (e.size() != caps_.size()) throw std::invalid_argument("jet exponent tuple of wrong length");
  std::size_t idx = 0;
  for (std::size_t m = 0; m < caps_.size(); ++m) {
    if (e[m] > caps_[m]) throw std::invalid_argument("jet exponent exceeds the cap");
    idx += e[m] * stride_[m];
  }
  return idx;
}

std::string JetSpec::monomial_name(std::size_t idx) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t m = 0; m < caps_.size(); ++m) {
    unsigned e = exps_[idx][m];
    if (e == 0) continue;
    if (any) os << ' ';
    os << 'x' << (m + 1);
    if (e > 1) os << '^' << e;
    any = true;
  }
  return any ? os.str() : "1";
}

std::string JetSpec::exponent_key(std::size_t idx) const {
  std::ostringstream os;
  for (std::size_t m = 0; m < caps_.size(); ++m) {
    if (m) os << ',';
    os << exps_[idx][m];
  }
  return os.str();
}

JetSpecPtr make_jet_spec(std::vector<unsigned> caps) {
  return std::make_shared<const JetSpec>(std::move(caps));
}

Jet Jet::constant(JetSpecPtr spec, const Rational& value) {
  Jet j(std::move(spec));
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(JetSpecPtr spec, std::size_t var) {
  if (var >= spec->vars()) throw std::invalid_argument("jet variable index out of range");
  if (spec->caps()[var] == 0)
    throw std::invalid_argument("jet variable with cap 0 is identically zero");
  std::vector<unsigned> e(spec->vars(), 0);
  e[var] = 1;
  Jet j(spec);
  j.c_[spec->index_of(e)] = Rational(1);
  return j;
}

bool Jet::is_zero() const {
  for (const Rational& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Jet Jet::operator-() const {
  Jet r(spec_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

static void check_compatible(const Jet& a, const Jet& b) {
  if (a.spec() != b.spec() && !(*a.spec() == *b.spec()))
    throw std::invalid_argument("jet arithmetic across different exponent boxes");
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void Jet::add_mul(const Jet& a, const Jet& b) {
  check_compatible(*this, a);
  check_compatible(*this, b);
  const JetSpec& sp = *spec_;
  const std::size_t n = c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      std::size_t k = sp.sum_index(i, j);
      if (k != JetSpec::kNoIndex) c_[k].add_mul(a.c_[i], b.c_[j]);
    }
  }
}

void Jet::sub_mul(const Jet& a, const Jet& b) {
  check_compatible(*this, a);
  check_compatible(*this, b);
  const JetSpec& sp = *spec_;
  const std::size_t n = c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      std::size_t k = sp.sum_index(i, j);
      if (k != JetSpec::kNoIndex) c_[k].sub_mul(a.c_[i], b.c_[j]);
    }
  }
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.spec());
  r.add_mul(a, b);
  return r;
}

Jet Jet::operator*(const Rational& s) const {
  Jet r(spec_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Jet Jet::inverse() const {
  if (!is_unit()) throw std::domain_error("jet inverse: constant part is zero");
  const Rational c0inv = c_[0].inverse();
  Jet b(spec_);
  b.c_[0] = c0inv;
  // Solve a*b = 1 upward in total degree: each target monomial's equation
  // involves only strictly smaller b-monomials plus the diagonal a_0*b_k.
  for (std::size_t k : spec_->degree_order()) {
    if (k == 0) continue;
    Rational acc;
    const std::size_t n = c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.c_[j].is_zero()) continue;
        if (spec_->sum_index(i, j) == k) acc.add_mul(c_[i], b.c_[j]);
      }
    }
    b.c_[k] = -(acc * c0inv);
  }
  return b;
}

Jet Jet::int_power(long e) const {
  if (e < 0) return inverse().int_power(-e);
  Jet base = *this;
  Jet r = constant(spec_, Rational(1));
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= base;
    if (k >>= 1) base *= base;
  }
  return r;
}

Jet Jet::truncated(const JetSpecPtr& smaller) const {
  if (smaller->vars() != spec_->vars())
    throw std::invalid_argument("jet truncation must keep the number of variables");
  Jet r(smaller);
  for (std::size_t idx = 0; idx < smaller->size(); ++idx) {
    const std::vector<unsigned>& e = smaller->exponents(idx);
    bool inside = true;
    for (std::size_t m = 0; m < e.size(); ++m)
      if (e[m] > spec_->caps()[m]) { inside = false; break; }
    if (inside) r.c_[idx] = c_[spec_->index_of(e)];
  }
  return r;
}

std::string Jet::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t idx : spec_->degree_order()) {
    if (c_[idx].is_zero()) continue;
    if (any) os << " + ";
    os << c_[idx].str();
    if (spec_->total_degree(idx) > 0) os << '*' << spec_->monomial_name(idx);
    any = true;
  }
  return any ? os.str() : "0";
}

bool operator==(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  return a.c_ == b.c_;
}

}  // namespace quotser
