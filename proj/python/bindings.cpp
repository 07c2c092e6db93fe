#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chowla2/suites.hpp"
#include "chowla2/version.hpp"

namespace py = pybind11;
using namespace chowla2;

namespace {

Field field_of(const std::string& spec) { return parse_field(spec); }

py::dict reduction_dict(const ASReduction& red) {
  py::dict d;
  d["p"] = red.p.pretty();
  d["p_tilde"] = red.p_tilde.pretty();
  d["Q"] = red.q_shift.pretty();
  d["degenerate"] = red.degenerate;
  if (red.degenerate)
    d["constant"] = red.constant.to_string();
  else
    d["genus"] = red.genus_value;
  py::list poles;
  for (const auto& [place, order] : red.poles.finite) {
    py::dict e;
    e["place"] = place.pretty('t');
    e["order"] = order;
    poles.append(e);
  }
  if (red.poles.at_infinity > 0) {
    py::dict e;
    e["place"] = "infinity";
    e["order"] = red.poles.at_infinity;
    poles.append(e);
  }
  d["poles"] = poles;
  return d;
}

}  // namespace

PYBIND11_MODULE(chowla2, m) {
  m.doc() = "Mobius autocorrelation and Berlekamp-discriminant toolkit over F_{2^k}[x]";
  m.attr("__version__") = kVersion;

  m.def(
      "mu",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return mobius(Poly::parse(f, poly));
      },
      py::arg("field"), py::arg("poly"),
      "Mobius function of a polynomial: 0, +1 or -1.");

  m.def(
      "berl",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return berl(Poly::parse(f, poly)).to_string();
      },
      py::arg("field"), py::arg("poly"),
      "Berlekamp discriminant of a monic squarefree polynomial (element literal).");

  m.def(
      "xi",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return xi(Poly::parse(f, poly)).to_string();
      },
      py::arg("field"), py::arg("poly"));

  m.def(
      "delta",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return delta(Poly::parse(f, poly)).to_string();
      },
      py::arg("field"), py::arg("poly"));

  m.def(
      "xi_in_t",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return xi_poly_in_t(Poly::parse(f, poly)).pretty('t');
      },
      py::arg("field"), py::arg("poly"),
      "xi of f(x) + t as a polynomial in t (f monic, zero constant term).");

  m.def(
      "delta_in_t",
      [](const std::string& field, const std::string& poly) {
        const Field f = field_of(field);
        return delta_poly_in_t(Poly::parse(f, poly)).pretty('t');
      },
      py::arg("field"), py::arg("poly"));

  m.def(
      "chi2",
      [](const std::string& field, const std::string& elem) {
        const Field f = field_of(field);
        return chi2(parse_elem(f, elem));
      },
      py::arg("field"), py::arg("elem"));

  m.def(
      "autocorrelation",
      [](const std::string& field, unsigned n, const std::vector<std::string>& alphas,
         const std::vector<int>& eps) {
        const Field f = field_of(field);
        std::vector<Poly> als;
        for (const auto& s : alphas) als.push_back(Poly::parse(f, s));
        const CorrelationSpec spec(f, n, als, eps);
        const CorrelationReport r = autocorrelation_report(spec);
        py::dict d;
        d["C"] = r.C;
        if (r.charsum_C) {
          d["C_charsum"] = *r.charsum_C;
          d["discrepancy"] = r.discrepancy;
        }
        d["bound"] = r.bound;
        d["bound_ok"] = r.bound_ok;
        if (r.n2) {
          d["n2_case"] = static_cast<int>(r.n2->which);
          d["n2_relation_ok"] = r.n2->relation_ok;
        }
        return d;
      },
      py::arg("field"), py::arg("n"), py::arg("alphas"), py::arg("eps"),
      "Exact autocorrelation C(alphas; n) with the character-sum cross-path.");

  m.def(
      "as_reduce",
      [](const std::string& field, const std::string& ratfun, std::uint64_t seed) {
        const Field f = field_of(field);
        return reduction_dict(chowla2::as_reduce(RatFun::parse(f, ratfun), seed));
      },
      py::arg("field"), py::arg("ratfun"), py::arg("seed") = 1,
      "Artin-Schreier reduction of a rational function literal num[/den].");

  m.def(
      "char_sum",
      [](const std::string& field, const std::string& ratfun) {
        const Field f = field_of(field);
        return char_sum(RatFun::parse(f, ratfun));
      },
      py::arg("field"), py::arg("ratfun"),
      "sum over t of chi2(p(t)) with poles contributing 0.");

  m.def(
      "verify",
      [](const std::string& suite, const std::string& field, std::uint64_t seed,
         std::uint64_t budget, const std::vector<unsigned>& ks, const std::vector<unsigned>& ns,
         unsigned r, std::uint64_t count) {
        RunConfig cfg;
        cfg.field_spec = field;
        cfg.seed = seed;
        cfg.budget = budget;
        cfg.ks = ks;
        cfg.ns = ns;
        cfg.r = r;
        cfg.count = count;
        return run_suite(suite, cfg).to_json().dump(2);
      },
      py::arg("suite"), py::arg("field") = "k=1", py::arg("seed") = 1,
      py::arg("budget") = (1ull << 22), py::arg("ks") = std::vector<unsigned>{},
      py::arg("ns") = std::vector<unsigned>{}, py::arg("r") = 2, py::arg("count") = 1000,
      "Runs a verification suite and returns the JSON report.");
}
