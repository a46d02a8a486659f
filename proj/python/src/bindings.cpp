#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opineq/checks.hpp"
#include "opineq/cli.hpp"
#include "opineq/constants.hpp"
#include "opineq/error.hpp"
#include "opineq/falsifier.hpp"
#include "opineq/json_io.hpp"
#include "opineq/means.hpp"
#include "opineq/registry.hpp"

namespace py = pybind11;
using namespace opineq;
using nlohmann::json;

namespace {

// Structured results cross the boundary as JSON text; the Python side parses them.
std::string dump(const json& j) { return j.dump(); }

HermitianMatrix herm(const CMatrix& m) { return HermitianMatrix(m); }

std::string evaluate_instance(const std::string& name, const std::string& instance, double tol) {
  const auto& entry = find_check(name);
  const auto inst = instance_from_json(json::parse(instance));
  json out = json::array();
  for (const auto& r : evaluate_variant(entry, entry.variants.front(), inst, tol))
    out.push_back(result_to_json(r));
  return dump(out);
}

std::string suite(const std::vector<std::string>& names, const std::vector<Index>& dims,
                  long trials, std::uint64_t seed, double tol, unsigned threads) {
  SuiteConfig c;
  c.suite = "python";
  c.names = names;
  c.dims = dims;
  c.trials = trials;
  c.seed = seed;
  c.tol = tol;
  c.threads = threads;
  py::gil_scoped_release release;
  return dump(run_suite(c).to_json());
}

std::string falsify(const std::string& name, bool grid, long budget, std::uint64_t seed,
                    const std::vector<Index>& dims, double tol) {
  std::vector<ViolationReport> reports;
  {
    py::gil_scoped_release release;
    if (grid) {
      reports = search_violations(name, FamilyGrid::standard(), tol);
    } else {
      SearchConfig c;
      c.seed = seed;
      c.budget = budget;
      c.dims = dims;
      c.tol = tol;
      reports = search_violations(name, c);
    }
  }
  json out = json::array();
  for (const auto& r : reports) out.push_back(r.to_json());
  return dump(out);
}

std::string list_checks() {
  json out = json::array();
  for (const auto& e : check_registry()) {
    json variants = json::array();
    for (const auto& v : e.variants) variants.push_back(v.label);
    out.push_back({{"name", e.name},
                   {"statement", e.statement},
                   {"expected_to_hold", e.expected_to_hold},
                   {"supports_family_grid", e.supports_family_grid},
                   {"variants", variants}});
  }
  return dump(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operator inequality checks, constants and falsifier.";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
  py::register_exception<UnknownCheckError>(m, "UnknownCheckError", PyExc_KeyError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  m.def("eigh", [](const CMatrix& a) {
    const auto e = eig_hermitian(herm(a));
    return py::make_tuple(e.values, e.vectors);
  }, py::arg("a"));
  m.def("matrix_power", [](const CMatrix& a, double p) { return power(herm(a), p).entries(); },
        py::arg("a"), py::arg("p"));
  m.def("loewner_margin", [](const CMatrix& a, const CMatrix& b) {
    return loewner_leq(herm(a), herm(b)).margin;
  }, py::arg("a"), py::arg("b"));

  m.def("geometric_mean", [](const CMatrix& a, const CMatrix& b) {
    return geometric_mean(herm(a), herm(b)).entries();
  }, py::arg("a"), py::arg("b"));
  m.def("connection", [](const CMatrix& a, const CMatrix& b, const std::string& f) {
    return connection(herm(a), herm(b), ConnectionSpec(catalog::by_name(f))).entries();
  }, py::arg("a"), py::arg("b"), py::arg("function"));
  m.def("riccati_residual", [](const CMatrix& a, const CMatrix& b) {
    return riccati_residual(herm(a), herm(b));
  }, py::arg("a"), py::arg("b"));

  m.def("kantorovich_constant", [](double lo, double hi) {
    return kantorovich_constant({lo, hi});
  }, py::arg("m"), py::arg("M"));
  m.def("generalized_kantorovich", [](double p, double lo, double hi) {
    return generalized_kantorovich(p, {lo, hi});
  }, py::arg("p"), py::arg("m"), py::arg("M"));
  m.def("alpha_constant", [](const std::string& f, double lo, double hi) {
    return alpha_constant(catalog::by_name(f), {lo, hi});
  }, py::arg("function"), py::arg("m"), py::arg("M"));
  m.def("beta0_constant", [](const std::string& f, double lo, double hi) {
    return beta0_constant(catalog::by_name(f), {lo, hi});
  }, py::arg("function"), py::arg("m"), py::arg("M"));
  m.def("beta_p_constant", [](double p, double lo, double hi) {
    return beta_p_constant(p, {lo, hi});
  }, py::arg("p"), py::arg("m"), py::arg("M"));
  m.def("mond_pecaric_beta", [](const std::string& f, double lo, double hi, double alpha) {
    return mond_pecaric_beta(catalog::by_name(f), {lo, hi}, alpha);
  }, py::arg("function"), py::arg("m"), py::arg("M"), py::arg("alpha"));

  m.def("counterexample_T", [](double x, double alpha, double beta) {
    const auto c = counterexample_T(x, alpha, beta);
    py::dict d;
    d["T"] = c.t.entries().real().eval();
    d["eigenvalues"] = std::vector<double>{c.lambda_min, c.lambda_max};
    d["psd"] = c.psd;
    return d;
  }, py::arg("x"), py::arg("alpha"), py::arg("beta"));
  m.def("parse_angle", &cli::parse_angle, py::arg("text"));

  m.def("_list_checks", &list_checks);
  m.def("_evaluate", &evaluate_instance, py::arg("name"), py::arg("instance"),
        py::arg("tol") = kDefaultLoewnerTolerance);
  m.def("_run_suite", &suite, py::arg("names"), py::arg("dims"), py::arg("trials"),
        py::arg("seed"), py::arg("tol"), py::arg("threads"));
  m.def("_falsify", &falsify, py::arg("name"), py::arg("grid"), py::arg("budget"),
        py::arg("seed"), py::arg("dims"), py::arg("tol"));
  m.attr("DEFAULT_TOLERANCE") = kDefaultLoewnerTolerance;
}
