#include "quotser/series_json.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace quotser {

ordered_json series_to_json(const QSeries& s) {
  ordered_json j;
  j["variable"] = s.variable();
  j["order"] = s.order();
  ordered_json coeffs = ordered_json::array();
  for (unsigned k = 0; k <= s.order(); ++k) coeffs.push_back(s[k].str());
  j["coefficients"] = std::move(coeffs);
  return j;
}

ordered_json series_to_json(const Series<Jet>& s) {
  const JetSpecPtr& js = s[0].spec();
  if (js->vars() == 0) {
    QSeries plain(s.variable(), s.order(), Rational(0));
    for (unsigned k = 0; k <= s.order(); ++k) plain[k] = s[k].constant_part();
    return series_to_json(plain);
  }
  ordered_json j;
  j["variable"] = s.variable();
  j["order"] = s.order();
  j["jet_caps"] = js->caps();
  ordered_json coeffs = ordered_json::array();
  for (unsigned k = 0; k <= s.order(); ++k) {
    ordered_json c = ordered_json::object();
    for (std::size_t idx : js->degree_order())
      if (!s[k][idx].is_zero()) c[js->exponent_key(idx)] = s[k][idx].str();
    coeffs.push_back(std::move(c));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

QSeries series_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("variable") || !j.contains("order") ||
      !j.contains("coefficients"))
    throw std::invalid_argument("series JSON needs variable, order and coefficients");
  const std::string var = j.at("variable").get<std::string>();
  const long order = j.at("order").get<long>();
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  const ordered_json& coeffs = j.at("coefficients");
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("series JSON needs exactly order+1 coefficients");
  QSeries s(var, static_cast<unsigned>(order), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    s[static_cast<unsigned>(k)] = Rational::from_string(coeffs[k].get<std::string>());
  return s;
}

ordered_json ratfunc_to_json(const RationalFunction& f) {
  auto poly = [](const UniPolynomial& p) {
    ordered_json a = ordered_json::array();
    for (const Rational& c : p.coefficients()) a.push_back(c.str());
    if (a.empty()) a.push_back("0");
    return a;
  };
  ordered_json j;
  j["numerator"] = poly(f.numerator());
  j["denominator"] = poly(f.denominator());
  return j;
}

namespace {

std::string latex_rational(const Rational& r, bool with_sign_space) {
  std::string num = r.numerator_str();
  bool neg = false;
  if (!num.empty() && num[0] == '-') {
    neg = true;
    num = num.substr(1);
  }
  std::string body = r.is_integer() ? num : "\\frac{" + num + "}{" + r.denominator_str() + "}";
  if (!with_sign_space) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

// "1 - 12q - 33q^2 + 8q^3"
std::string latex_poly(const UniPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    std::string coeff_str;
    const bool unit_coeff = (c.is_one() || c == Rational(-1)) && k > 0;
    if (first) {
      if (c.sign() < 0 && unit_coeff)
        coeff_str = "-";
      else if (unit_coeff)
        coeff_str = "";
      else
        coeff_str = latex_rational(c, false);
      first = false;
    } else {
      if (unit_coeff)
        coeff_str = c.sign() < 0 ? " - " : " + ";
      else {
        Rational abs = c.sign() < 0 ? -c : c;
        coeff_str = (c.sign() < 0 ? " - " : " + ") + latex_rational(abs, false);
      }
    }
    os << coeff_str;
    if (k >= 1) os << var;
    if (k >= 2) os << "^{" << k << "}";
  }
  return os.str();
}

std::vector<mpz_class> small_divisors(mpz_class v) {
  std::vector<mpz_class> out;
  if (v < 0) v = -v;
  if (v == 0 || v > 1000000) return out;
  const unsigned long n = v.get_ui();
  for (unsigned long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.emplace_back(d);
      if (d != n / d) out.emplace_back(n / d);
    }
  return out;
}

// den(0) = 1 by invariant.  Returns the c-values with multiplicity for the
// factors (1 - c var), and whatever part resisted rational factoring.
std::vector<std::pair<Rational, unsigned>> split_unit_factors(UniPolynomial& rest) {
  std::vector<std::pair<Rational, unsigned>> out;
  if (rest.degree() < 1) return out;
  // Clear denominators to apply the rational root bound.
  mpz_class lcm(1);
  for (const Rational& c : rest.coefficients()) {
    mpz_class den(c.denominator_str());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  const Rational scale{mpq_class(lcm)};
  UniPolynomial scaled = rest.scaled(scale);
  mpz_class a0(scaled.coefficient(0).numerator_str());
  mpz_class ad(scaled.leading().numerator_str());
  for (const mpz_class& p : small_divisors(a0))
    for (const mpz_class& s : small_divisors(ad))
      for (int sign : {1, -1}) {
        // candidate root r = sign p/s, factor (1 - c var) with c = 1/r
        Rational r = Rational(mpq_class(p, s) * sign);
        unsigned mult = 0;
        while (rest.degree() >= 1 && rest.evaluate(r).is_zero()) {
          UniPolynomial lin(std::vector<Rational>{Rational(1), -r.inverse()});  // 1 - c var
          rest = UniPolynomial::divmod(rest, lin).first;
          ++mult;
        }
        if (mult) out.emplace_back(r.inverse(), mult);
      }
  return out;
}

std::string latex_factored(const UniPolynomial& poly, const std::string& var) {
  UniPolynomial rest = poly;
  std::vector<std::pair<Rational, unsigned>> factors = split_unit_factors(rest);
  std::ostringstream os;
  for (const auto& [c, mult] : factors) {
    os << "(" << latex_poly(UniPolynomial({Rational(1), -c}), var) << ")";
    if (mult > 1) os << "^{" << mult << "}";
  }
  if (rest.degree() >= 1 || factors.empty())
    os << (factors.empty() ? latex_poly(rest, var) : "(" + latex_poly(rest, var) + ")");
  else if (!rest.coefficient(0).is_one())
    return latex_rational(rest.coefficient(0), false) + os.str();
  return os.str();
}

}  // namespace

std::string latex_rational_function(const RationalFunction& f, const std::string& variable) {
  if (f.numerator().is_zero()) return "0";
  // Pull out the leading power of the variable and the overall constant.
  const std::vector<Rational>& nc = f.numerator().coefficients();
  std::size_t val = 0;
  while (val < nc.size() && nc[val].is_zero()) ++val;
  std::vector<Rational> shifted(nc.begin() + static_cast<long>(val), nc.end());
  UniPolynomial num(shifted);
  std::ostringstream nums;
  if (val > 0) {
    nums << variable;
    if (val > 1) nums << "^{" << val << "}";
  }
  if (num.degree() == 0) {
    const Rational& c0 = num.coefficient(0);
    std::string prefix;
    if (val == 0 || !c0.is_one())
      prefix = (val > 0 && c0 == Rational(-1)) ? "-" : latex_rational(c0, false);
    nums.str(prefix + nums.str());
  } else {
    std::string body = latex_poly(num, variable);
    nums << "(" << body << ")";
  }
  std::string denominator = f.denominator().degree() == 0 ? "" : latex_factored(f.denominator(), variable);
  if (denominator.empty()) return nums.str();
  return "\\frac{" + nums.str() + "}{" + denominator + "}";
}

}  // namespace quotser
