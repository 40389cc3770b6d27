#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>
#include <string>
#include <vector>

#include "quotser/hilbert.hpp"
#include "quotser/jet_series.hpp"
#include "quotser/lagrange.hpp"
#include "quotser/pade.hpp"
#include "quotser/quot.hpp"
#include "quotser/series_json.hpp"
#include "quotser/symfunc.hpp"
#include "quotser/verify.hpp"

namespace py = pybind11;

namespace {

// All numeric payloads cross the boundary as the same JSON shapes the CLI
// emits; rationals stay exact "num/den" strings.
py::object json_to_py(const quotser::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

quotser::ordered_json py_to_json(const py::object& o) {
  const std::string dumped =
      py::cast<std::string>(py::module_::import("json").attr("dumps")(o));
  return quotser::ordered_json::parse(dumped);
}

quotser::QuotProblem make_problem(int n, const std::vector<std::string>& weights,
                                  const std::vector<long>& degrees,
                                  const std::vector<unsigned>& jet_caps, unsigned order) {
  std::vector<quotser::Rational> w;
  for (const std::string& s : weights) w.push_back(quotser::Rational::from_string(s));
  return quotser::QuotProblem(n, w, degrees, jet_caps, order);
}

quotser::SurfaceNumerics make_surface(long m2, long mk, long k2,
                                      const std::vector<long>& alpham,
                                      const std::vector<unsigned>& jet_caps) {
  quotser::SurfaceNumerics s;
  s.M2 = m2;
  s.MK = mk;
  s.K2 = k2;
  s.alphaM = alpham;
  s.jet_caps = jet_caps;
  return s;
}

}  // namespace

PYBIND11_MODULE(_quotser, m) {
  m.doc() = "Exact descendent series of punctual quot schemes";

  m.def(
      "quot_oracle",
      [](int n, const std::vector<std::string>& weights, const std::vector<long>& degrees,
         const std::vector<unsigned>& jet_caps, unsigned order) {
        return json_to_py(quotser::series_to_json(
            quotser::quot_oracle_series(make_problem(n, weights, degrees, jet_caps, order))));
      },
      py::arg("n"), py::arg("weights") = std::vector<std::string>{},
      py::arg("degrees") = std::vector<long>{}, py::arg("jet_caps") = std::vector<unsigned>{},
      py::arg("order") = 24,
      "Brute-force localization sum over torus-fixed loci.");

  m.def(
      "quot_closed_form",
      [](int n, const std::vector<std::string>& weights, const std::vector<long>& degrees,
         const std::vector<unsigned>& jet_caps, unsigned order) {
        return json_to_py(quotser::series_to_json(
            quotser::w_closed_form(make_problem(n, weights, degrees, jet_caps, order))));
      },
      py::arg("n"), py::arg("weights") = std::vector<std::string>{},
      py::arg("degrees") = std::vector<long>{}, py::arg("jet_caps") = std::vector<unsigned>{},
      py::arg("order") = 24,
      "Closed form through the root series of the inversion polynomial.");

  m.def(
      "hilbert_series",
      [](long m2, long mk, long k2, const std::vector<long>& alpham,
         const std::vector<unsigned>& jet_caps, unsigned order) {
        return json_to_py(quotser::series_to_json(
            quotser::hilbert_w_series(make_surface(m2, mk, k2, alpham, jet_caps), order)));
      },
      py::arg("m2") = 0, py::arg("mk") = 0, py::arg("k2") = 0,
      py::arg("alpham") = std::vector<long>{}, py::arg("jet_caps") = std::vector<unsigned>{},
      py::arg("order") = 24,
      "Surface descendent series via the change of variables.");

  m.def(
      "hilbert_component",
      [](long m2, long mk, long k2, const std::vector<long>& alpham,
         const std::vector<unsigned>& jet_caps, const std::vector<unsigned>& monomial,
         unsigned order) {
        return json_to_py(quotser::series_to_json(quotser::hilbert_descendent_series(
            make_surface(m2, mk, k2, alpham, jet_caps), monomial, order)));
      },
      py::arg("m2") = 0, py::arg("mk") = 0, py::arg("k2") = 0,
      py::arg("alpham") = std::vector<long>{}, py::arg("jet_caps") = std::vector<unsigned>{},
      py::arg("monomial") = std::vector<unsigned>{}, py::arg("order") = 24,
      "One descendent-monomial component of the surface series.");

  m.def(
      "p1xp1_series",
      [](unsigned nmax) { return json_to_py(quotser::series_to_json(quotser::p1xp1_z_series(nmax))); },
      py::arg("nmax") = 30, "The product-geometry first descendent series.");

  m.def(
      "pade",
      [](const py::object& series, unsigned max_num, unsigned max_den) -> py::object {
        const quotser::QSeries s = quotser::series_from_json(py_to_json(series));
        const auto rec = quotser::pade_reconstruct(s, max_num, max_den);
        if (!rec) return py::none();
        return json_to_py(quotser::ratfunc_to_json(*rec));
      },
      py::arg("series"), py::arg("max_num"), py::arg("max_den"),
      "Exact rational reconstruction of a truncated series; None when nothing fits.");

  m.def(
      "sigma_fit",
      [](long a, long b, long c, long nmax) {
        const quotser::SigmaFitResult fit = quotser::sigma_star_fit({a, b, c}, nmax);
        quotser::ordered_json j;
        j["found"] = static_cast<bool>(fit.form);
        j["degree_bound"] = fit.degree_bound;
        j["widened"] = fit.widened;
        j["verified"] = fit.verified;
        if (fit.form) {
          auto poly = [](const quotser::UniPolynomial& p) {
            quotser::ordered_json arr = quotser::ordered_json::array();
            for (const quotser::Rational& coeff : p.coefficients()) arr.push_back(coeff.str());
            if (arr.empty()) arr.push_back("0");
            return arr;
          };
          j["p1"] = poly(fit.form->p1);
          j["p2"] = poly(fit.form->p2);
          j["valid_from"] = fit.form->n0;
        }
        return json_to_py(j);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("nmax") = 120,
      "Fit the alternating closed form of the binomial sequence.");

  m.def(
      "sigma_values",
      [](long a, long b, long c, long n_from, long n_to) {
        std::vector<std::string> out;
        for (long n = n_from; n <= n_to; ++n)
          out.push_back(quotser::sigma_binomial({a, b, c}, n).str());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n_from"), py::arg("n_to"),
      "Exact values of the binomial sequence on a range.");

  m.def(
      "verify",
      [](const std::string& filter) { return quotser::run_verification(filter, std::cout); },
      py::arg("filter") = "",
      "Run the built-in verification suite; returns 0 iff all selected cases pass.");
}
