#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hardy/operators.hpp"
#include "hardy/random.hpp"
#include "hardy/spectral.hpp"
#include "hardy/verifier.hpp"
#include "hardy/weights.hpp"

namespace py = pybind11;
using namespace hardy;

namespace {

py::object to_fraction(const ExactRational& x) {
  auto big = [](const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
  };
  return py::module_::import("fractions").attr("Fraction")(big(x.numerator()), big(x.denominator()));
}

CompactSequence to_sequence(const std::vector<double>& values) { return CompactSequence(values); }

std::vector<double> to_list(const CompactSequence& phi) { return {phi.values().begin(), phi.values().end()}; }

py::list eigen_rows(const std::vector<EigenScanRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict row;
    row["N"] = r.size;
    row["lambda_min"] = r.lambda_min;
    row["monotone"] = r.monotone;
    row["below_one"] = r.below_one;
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Improved discrete Hardy weight on the half-line: weights, operators and verification";

  py::class_<WeightFunction>(m, "WeightFunction")
      .def(py::init([](std::function<double(Index)> f, std::string name) { return WeightFunction(std::move(f), {}, std::move(name)); }),
           py::arg("evaluator"), py::arg("name") = "")
      .def("__call__", &WeightFunction::operator(), py::arg("n"))
      .def_property_readonly("name", &WeightFunction::name)
      .def("scaled", &WeightFunction::scaled, py::arg("c"));

  m.def("improved_weight", &improved_weight);
  m.def("classical_weight", &classical_weight);
  m.def("ground_state_weight", &ground_state_weight);
  m.def("inflated_improved_weight", &inflated_improved_weight, py::arg("epsilon"));
  m.def("random_positive_weight", &random_positive_weight, py::arg("seed"), py::arg("lower") = 0.5, py::arg("upper") = 2.0);

  // weight engine
  m.def("classical_hardy_weight", [](Index n) { return to_fraction(classical_hardy_weight(n)); }, py::arg("n"));
  m.def("series_coefficient", [](Index k) { return to_fraction(series_coefficient(k)); }, py::arg("k"));
  m.def("half_binomial", [](Index j) { return to_fraction(half_binomial(j)); }, py::arg("j"));
  m.def("improved_weight_closed", py::overload_cast<Index>(&improved_weight_closed), py::arg("n"));
  m.def(
      "improved_weight_closed_extended",
      [](Index n, unsigned digits) { return improved_weight_closed(n, Precision{digits}).to_string(digits); },
      py::arg("n"), py::arg("digits") = 50, "Closed form as a decimal string with `digits` significant digits");
  m.def("improved_weight_series", &improved_weight_series, py::arg("n"), py::arg("K"));
  m.def("improved_weight_series_exact", [](Index n, Index K) { return to_fraction(improved_weight_series_exact(n, K)); },
        py::arg("n"), py::arg("K"));
  m.def("ground_state", py::overload_cast<Index>(&ground_state), py::arg("n"));
  m.def("weight_from_positive_solution", py::overload_cast<const WeightFunction&, Index>(&weight_from_positive_solution),
        py::arg("u"), py::arg("n"));

  // operator core; sequences are lists phi(1), ..., phi(N)
  m.def("apply_dirichlet_laplacian", [](const std::vector<double>& phi) { return to_list(apply_dirichlet_laplacian(to_sequence(phi))); },
        py::arg("phi"));
  m.def(
      "apply_weighted_laplacian",
      [](const WeightFunction& u, const std::vector<double>& phi) { return to_list(apply_weighted_laplacian(u, to_sequence(phi))); },
      py::arg("u"), py::arg("phi"));
  m.def("energy", [](const std::vector<double>& phi) { return energy(to_sequence(phi)); }, py::arg("phi"));
  m.def("weighted_form", [](const WeightFunction& u, const std::vector<double>& phi) { return weighted_form(u, to_sequence(phi)); },
        py::arg("u"), py::arg("phi"));
  m.def(
      "weighted_inner",
      [](const std::vector<double>& f, const std::vector<double>& g, const WeightFunction& u) {
        return weighted_inner(to_sequence(f), to_sequence(g), u);
      },
      py::arg("f"), py::arg("g"), py::arg("u"));
  m.def(
      "gst_defect",
      [](const WeightFunction& u, const std::function<double(Index)>& w, const std::vector<double>& phi) {
        return gst_defect(u, w, to_sequence(phi));
      },
      py::arg("u"), py::arg("w"), py::arg("phi"));
  m.def("unitarity_defect", [](const WeightFunction& u, const std::vector<double>& phi) { return unitarity_defect(u, to_sequence(phi)); },
        py::arg("u"), py::arg("phi"));

  // verifier
  m.def("hardy_gap", [](const std::vector<double>& phi, const WeightFunction& w) { return hardy_gap(to_sequence(phi), w); },
        py::arg("phi"), py::arg("w"));
  m.def("classical_gap_from_increments", [](const std::vector<double>& a) { return classical_gap_from_increments(to_sequence(a)); },
        py::arg("a"));
  m.def(
      "ground_state_residual",
      [](const WeightFunction& u, const std::function<double(Index)>& w, Index N) { return ground_state_residual(u, w, N); },
      py::arg("u"), py::arg("w"), py::arg("N"));
  m.def(
      "random_test_sequence",
      [](std::uint64_t seed, Index max_support, double amplitude) { return to_list(random_test_sequence(seed, max_support, amplitude)); },
      py::arg("seed"), py::arg("max_support"), py::arg("amplitude") = 1.0);
  m.def(
      "min_generalized_eigenvalue",
      [](const std::vector<double>& weight_diagonal, double tol) {
        return min_generalized_eigenvalue(TruncatedOperatorPair(weight_diagonal), tol);
      },
      py::arg("weight_diagonal"), py::arg("tol") = 1e-10);

  m.def(
      "run_verification",
      [](std::uint64_t seed, std::size_t gap_trials, std::size_t identity_trials, std::size_t equivalence_trials,
         Index max_support, Index residual_n_max, std::vector<Index> eigen_sizes) {
        VerificationConfig config;
        config.seed = seed;
        config.gap_trials = gap_trials;
        config.identity_trials = identity_trials;
        config.equivalence_trials = equivalence_trials;
        config.max_support = max_support;
        config.residual_n_max = residual_n_max;
        config.eigen_sizes = std::move(eigen_sizes);
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(config);
        }
        py::dict out;
        out["passed"] = report.passed();
        out["min_relative_gap"] = report.min_relative_gap;
        out["max_residual"] = report.max_residual;
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["value"] = c.value;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          d["informational"] = c.informational;
          checks.append(d);
        }
        out["checks"] = checks;
        out["eigen"] = eigen_rows(report.eigen);
        out["inflated_eigen"] = eigen_rows(report.inflated_eigen);
        return out;
      },
      py::arg("seed") = 42, py::arg("gap_trials") = 10000, py::arg("identity_trials") = 1000,
      py::arg("equivalence_trials") = 1000, py::arg("max_support") = 1000, py::arg("residual_n_max") = 100000,
      py::arg("eigen_sizes") = std::vector<Index>{1, 10, 100, 1000, 10000});
}
