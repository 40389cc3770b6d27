#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quotser/hilbert.hpp"
#include "quotser/jet_series.hpp"
#include "quotser/lagrange.hpp"
#include "quotser/pade.hpp"
#include "quotser/quot.hpp"
#include "quotser/series_json.hpp"
#include "quotser/symfunc.hpp"
#include "quotser/verify.hpp"

namespace {

using quotser::ordered_json;

// Default series order, overridable through the environment.
unsigned default_order() {
  const char* env = std::getenv("QUOTSER_ORDER");
  if (!env) return 24;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0 || v > 4096)
    throw std::invalid_argument("QUOTSER_ORDER must be an integer in [0, 4096]");
  return static_cast<unsigned>(v);
}

ordered_json pade_json(const quotser::QSeries& s, unsigned max_num, unsigned max_den,
                       bool latex) {
  const auto rec = quotser::pade_reconstruct(s, max_num, max_den);
  if (!rec) return nullptr;
  ordered_json j = quotser::ratfunc_to_json(*rec);
  if (latex) j["latex"] = quotser::latex_rational_function(*rec, s.variable());
  return j;
}

// Reconstruction of every jet component, keyed by exponent tuple; series
// without descendent variables get a single unkeyed object.
ordered_json pade_block(const quotser::Series<quotser::Jet>& s, unsigned max_num,
                        unsigned max_den, bool latex) {
  const quotser::JetSpecPtr& spec = s[0].spec();
  if (spec->vars() == 0) return pade_json(quotser::jet_component(s, {}), max_num, max_den, latex);
  ordered_json out = ordered_json::object();
  for (std::size_t idx : spec->degree_order())
    out[spec->exponent_key(idx)] =
        pade_json(quotser::jet_component(s, spec->exponents(idx)), max_num, max_den, latex);
  return out;
}

struct PadeFlags {
  bool wanted = false;
  unsigned max_num = 0;
  unsigned max_den = 0;
  bool explicit_num = false;
  bool explicit_den = false;

  void finalize(unsigned order) {
    const unsigned fallback = order >= 3 ? (order - 3) / 2 : 0;
    if (!explicit_num) max_num = fallback;
    if (!explicit_den) max_den = fallback;
  }
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_quot(int n, const std::vector<std::string>& weight_strings,
             const std::vector<long>& degrees, std::vector<unsigned> jet_caps, unsigned order,
             const std::string& method, bool fixed_weights, PadeFlags pade, bool latex) {
  std::vector<quotser::Rational> weights;
  for (const std::string& w : weight_strings)
    weights.push_back(quotser::Rational::from_string(w));
  if (jet_caps.empty() && !degrees.empty()) jet_caps.assign(degrees.size(), 1);
  quotser::QuotProblem problem(n, weights, degrees, jet_caps, order);
  pade.finalize(order);

  ordered_json out;
  out["command"] = "quot";
  ordered_json settings;
  settings["N"] = n;
  ordered_json wj = ordered_json::array();
  for (const quotser::Rational& w : problem.weights) wj.push_back(w.str());
  settings["weights"] = std::move(wj);
  settings["degrees"] = problem.degrees;
  settings["jet_caps"] = problem.jet_caps;
  settings["order"] = order;
  settings["method"] = method;
  settings["fixed_weights"] = fixed_weights;
  settings["pade_max_num"] = pade.max_num;
  settings["pade_max_den"] = pade.max_den;
  out["settings"] = std::move(settings);

  std::optional<quotser::Series<quotser::Jet>> oracle, closed;
  if (method == "oracle" || method == "both")
    oracle = fixed_weights ? quot_oracle_series_at(problem) : quot_oracle_series(problem);
  if (method == "lb" || method == "both")
    closed = fixed_weights ? w_closed_form_at(problem) : w_closed_form(problem);
  const quotser::Series<quotser::Jet>& primary = oracle ? *oracle : *closed;
  out["series"] = quotser::series_to_json(primary);
  bool agree = true;
  if (oracle && closed) {
    for (unsigned k = 0; k <= order && agree; ++k)
      if ((*oracle)[k] != (*closed)[k]) agree = false;
    out["series_lb"] = quotser::series_to_json(*closed);
    out["agreement"] = agree;
  }
  if (pade.wanted) out["pade"] = pade_block(primary, pade.max_num, pade.max_den, latex);
  emit(out);
  return agree ? 0 : 3;
}

int run_hilbert(long m2, long mk, long k2, const std::vector<long>& alpham,
                std::vector<unsigned> jet_caps, const std::vector<unsigned>& monomial,
                bool monomial_given, unsigned order, PadeFlags pade, bool latex) {
  if (jet_caps.empty() && !alpham.empty()) jet_caps.assign(alpham.size(), 1);
  if (jet_caps.size() != alpham.size())
    throw std::invalid_argument("--jet must list one cap per --alphaM entry");
  quotser::SurfaceNumerics s;
  s.M2 = m2;
  s.MK = mk;
  s.K2 = k2;
  s.alphaM = alpham;
  s.jet_caps = jet_caps;
  pade.finalize(order);

  ordered_json out;
  out["command"] = "hilbert";
  ordered_json settings;
  settings["M2"] = m2;
  settings["MK"] = mk;
  settings["K2"] = k2;
  settings["alphaM"] = alpham;
  settings["jet_caps"] = jet_caps;
  if (monomial_given) settings["monomial"] = monomial;
  settings["order"] = order;
  settings["pade_max_num"] = pade.max_num;
  settings["pade_max_den"] = pade.max_den;
  out["settings"] = std::move(settings);

  if (monomial_given) {
    const quotser::QSeries w = quotser::hilbert_descendent_series(s, monomial, order);
    out["series"] = quotser::series_to_json(w);
    if (pade.wanted) out["pade"] = pade_json(w, pade.max_num, pade.max_den, latex);
  } else {
    const quotser::Series<quotser::Jet> w = quotser::hilbert_w_series(s, order);
    out["series"] = quotser::series_to_json(w);
    if (pade.wanted) out["pade"] = pade_block(w, pade.max_num, pade.max_den, latex);
  }
  emit(out);
  return 0;
}

int run_p1xp1(unsigned nmax, bool latex) {
  if (nmax < 11) throw std::invalid_argument("--nmax must be at least 11");
  const quotser::QSeries z = quotser::p1xp1_z_series(nmax);
  ordered_json out;
  out["command"] = "p1xp1";
  ordered_json settings;
  settings["nmax"] = nmax;
  out["settings"] = std::move(settings);
  out["series"] = quotser::series_to_json(z);
  out["pade"] = pade_json(z, 4, 4, latex);
  emit(out);
  return out["pade"].is_null() ? 1 : 0;
}

int run_sigma(long a, long b, long c, long nmax) {
  const quotser::SigmaParams p{a, b, c};
  const quotser::SigmaFitResult fit = quotser::sigma_star_fit(p, nmax);
  const long n0 = std::max({0L, -a, -c});

  ordered_json out;
  out["command"] = "sigma";
  ordered_json settings;
  settings["a"] = a;
  settings["b"] = b;
  settings["c"] = c;
  settings["nmax"] = nmax;
  out["settings"] = std::move(settings);
  out["first_n"] = n0;
  ordered_json values = ordered_json::array();
  for (long n = n0; n < n0 + 10 && n <= nmax; ++n)
    values.push_back(quotser::sigma_binomial(p, n).str());
  out["values"] = std::move(values);
  ordered_json fj;
  fj["found"] = static_cast<bool>(fit.form);
  fj["degree_bound"] = fit.degree_bound;
  fj["widened"] = fit.widened;
  fj["verified"] = fit.verified;
  if (fit.form) {
    auto poly = [](const quotser::UniPolynomial& q) {
      ordered_json arr = ordered_json::array();
      for (const quotser::Rational& coeff : q.coefficients()) arr.push_back(coeff.str());
      if (arr.empty()) arr.push_back("0");
      return arr;
    };
    fj["p1"] = poly(fit.form->p1);
    fj["p2"] = poly(fit.form->p2);
    fj["valid_from"] = fit.form->n0;
  }
  out["fit"] = std::move(fj);
  emit(out);
  return fit.form ? 0 : 1;
}

int run_pade(PadeFlags pade, bool latex) {
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(std::cin);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("stdin is not valid JSON: ") + e.what());
  }
  const quotser::QSeries s = quotser::series_from_json(parsed);
  pade.finalize(s.order());
  ordered_json out;
  out["command"] = "pade";
  ordered_json settings;
  settings["order"] = s.order();
  settings["pade_max_num"] = pade.max_num;
  settings["pade_max_den"] = pade.max_den;
  out["settings"] = std::move(settings);
  out["pade"] = pade_json(s, pade.max_num, pade.max_den, latex);
  emit(out);
  return out["pade"].is_null() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descendent series of punctual quot schemes: localization sum, "
               "closed forms, and rational reconstruction"};
  app.require_subcommand(1);

  unsigned order = 0;  // resolved after parsing so the environment default applies
  bool latex = false;

  // quot
  int q_n = 1;
  std::vector<std::string> q_weights;
  std::vector<long> q_degrees;
  std::vector<unsigned> q_caps;
  std::string q_method = "both";
  bool q_fixed = false;
  PadeFlags q_pade;
  CLI::App* quot = app.add_subcommand("quot", "descendent series over the projective line");
  quot->add_option("--N", q_n, "rank of the trivial bundle")->required()->check(CLI::PositiveNumber);
  quot->add_option("--weights", q_weights, "torus weights, one rational per summand")
      ->delimiter(',');
  quot->add_option("--d", q_degrees, "insertion degrees")->delimiter(',');
  quot->add_option("--jet", q_caps, "descendent variable caps, one per insertion")
      ->delimiter(',');
  quot->add_option("--order", order, "series truncation order");
  quot->add_option("--method", q_method, "oracle, lb, or both")
      ->check(CLI::IsMember({"oracle", "lb", "both"}));
  quot->add_flag("--fixed-weights", q_fixed,
                 "evaluate at the given weights instead of the weight-free limit");
  quot->add_flag("--pade", q_pade.wanted, "reconstruct rational functions from the series");
  quot->add_option("--max-num", q_pade.max_num, "numerator degree bound for --pade");
  quot->add_option("--max-den", q_pade.max_den, "denominator degree bound for --pade");
  quot->add_flag("--latex", latex, "add display-style rational functions");

  // hilbert
  long h_m2 = 0, h_mk = 0, h_k2 = 0;
  std::vector<long> h_alpham;
  std::vector<unsigned> h_caps, h_monomial;
  PadeFlags h_pade;
  CLI::App* hilbert = app.add_subcommand("hilbert", "surface descendent series in closed form");
  hilbert->add_option("--M2", h_m2, "self-intersection M.M");
  hilbert->add_option("--MK", h_mk, "intersection M.K");
  hilbert->add_option("--K2", h_k2, "self-intersection K.K");
  hilbert->add_option("--alphaM", h_alpham, "insertion pairings c1(alpha).M")->delimiter(',');
  hilbert->add_option("--jet", h_caps, "descendent variable caps, one per insertion")
      ->delimiter(',');
  hilbert->add_option("--monomial", h_monomial, "extract one descendent monomial")
      ->delimiter(',')
      ->expected(0, -1);
  hilbert->add_option("--order", order, "series truncation order");
  hilbert->add_flag("--pade", h_pade.wanted, "reconstruct rational functions from the series");
  hilbert->add_option("--max-num", h_pade.max_num, "numerator degree bound for --pade");
  hilbert->add_option("--max-den", h_pade.max_den, "denominator degree bound for --pade");
  hilbert->add_flag("--latex", latex, "add display-style rational functions");

  // p1xp1
  unsigned p_nmax = 30;
  CLI::App* p1xp1 = app.add_subcommand("p1xp1", "product-geometry first descendent series");
  p1xp1->add_option("--nmax", p_nmax, "number of coefficients");
  p1xp1->add_flag("--latex", latex, "add display-style rational functions");

  // sigma
  long s_a = 0, s_b = 0, s_c = 0, s_nmax = 120;
  CLI::App* sigma = app.add_subcommand("sigma", "binomial sequence and alternating-form fit");
  sigma->add_option("--a", s_a)->required();
  sigma->add_option("--b", s_b)->required();
  sigma->add_option("--c", s_c)->required();
  sigma->add_option("--nmax", s_nmax, "largest n to evaluate and verify against");

  // pade
  PadeFlags raw_pade;
  CLI::App* pade =
      app.add_subcommand("pade", "reconstruct a rational function from series JSON on stdin");
  pade->add_option("--max-num", raw_pade.max_num, "numerator degree bound");
  pade->add_option("--max-den", raw_pade.max_den, "denominator degree bound");
  pade->add_flag("--latex", latex, "add display-style rational functions");

  // verify
  std::string filter;
  CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_option("--filter", filter, "run only cases whose name contains this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  q_pade.explicit_num = quot->count("--max-num") > 0;
  q_pade.explicit_den = quot->count("--max-den") > 0;
  h_pade.explicit_num = hilbert->count("--max-num") > 0;
  h_pade.explicit_den = hilbert->count("--max-den") > 0;
  raw_pade.explicit_num = pade->count("--max-num") > 0;
  raw_pade.explicit_den = pade->count("--max-den") > 0;
  raw_pade.wanted = true;

  try {
    if (quot->count("--order") == 0 && hilbert->count("--order") == 0) order = default_order();
    if (quot->parsed())
      return run_quot(q_n, q_weights, q_degrees, q_caps, order, q_method, q_fixed, q_pade,
                      latex);
    if (hilbert->parsed())
      return run_hilbert(h_m2, h_mk, h_k2, h_alpham, h_caps, h_monomial,
                         hilbert->count("--monomial") > 0, order, h_pade, latex);
    if (p1xp1->parsed()) return run_p1xp1(p_nmax, latex);
    if (sigma->parsed()) return run_sigma(s_a, s_b, s_c, s_nmax);
    if (pade->parsed()) return run_pade(raw_pade, latex);
    return quotser::run_verification(filter, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
