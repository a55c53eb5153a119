#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "paretail/beta_moments.hpp"
#include "paretail/catalog.hpp"
#include "paretail/extreme_moments.hpp"
#include "paretail/inversion.hpp"
#include "paretail/oracle.hpp"
#include "paretail/typo_ledger.hpp"

namespace py = pybind11;
using namespace paretail;

using Tail = TailModel<double>;
using Expansion = ExpansionSeries<double>;

PYBIND11_MODULE(_paretail, m) {
  m.doc() = "Quantile and order-statistic moment expansions for Pareto-type tails";

  py::register_exception<InfiniteMomentError>(m, "InfiniteMomentError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

  py::class_<Tail>(m, "TailModel")
      .def(py::init([](double alpha, double beta, std::vector<double> c) {
             return Tail(alpha, beta, FormalSeries<double>(std::move(c)));
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("c"))
      .def_readonly("alpha", &Tail::alpha)
      .def_readonly("beta", &Tail::beta)
      .def_property_readonly("c", [](const Tail& t) { return t.c.coeffs(); })
      .def_property_readonly("a", &Tail::a)
      .def("scaled", &Tail::scaled, py::arg("factor"))
      .def("__repr__", [](const Tail& t) {
        return "TailModel(alpha=" + std::to_string(t.alpha) + ", beta=" + std::to_string(t.beta) +
               ", order=" + std::to_string(t.order()) + ")";
      });

  py::class_<Expansion>(m, "Expansion")
      .def_readonly("lead", &Expansion::lead)
      .def_readonly("a", &Expansion::a)
      .def_readonly("imax", &Expansion::imax)
      .def_readonly("jmax", &Expansion::jmax)
      .def_readonly("grid", &Expansion::grid)
      .def("at", &Expansion::at, py::arg("i"), py::arg("j"))
      .def(
          "evaluate",
          [](const Expansion& e, double n, double max_order) { return evaluate_expansion(e, n, max_order).value; },
          py::arg("n"), py::arg("max_order") = std::numeric_limits<double>::infinity())
      .def(
          "coefficient", [](const Expansion& e, double order) { return coefficient_at_order(e, order); },
          py::arg("order"));

  m.def("tail_of", [](const std::string& dist, int order) { return tail_of(DistributionSpec::parse(dist), order); },
        py::arg("dist"), py::arg("order"));

  m.def(
      "invert_series",
      [](std::vector<double> x, double a, int k) { return invert_series(FormalSeries<double>(std::move(x)), a, k).coeffs(); },
      py::arg("x"), py::arg("a"), py::arg("k") = 1);

  m.def(
      "quantile_coefficients",
      [](const Tail& t, double theta) { return quantile_series(t, theta).C.coeffs(); }, py::arg("tail"),
      py::arg("theta"));

  m.def("gamma_ratio_coeffs", &gamma_ratio_coeffs<double>, py::arg("theta"), py::arg("imax") = 7);

  m.def(
      "joint_beta_moment",
      [](int n, std::vector<int> ranks, std::vector<double> theta) {
        return joint_beta_moment(RankSpec(n, std::move(ranks)), ThetaVector<double>(std::move(theta)));
      },
      py::arg("n"), py::arg("ranks"), py::arg("theta"));

  m.def(
      "moment_expansion",
      [](const Tail& t, std::vector<int> s, std::vector<double> theta, int imax, int jmax, bool normalized) {
        MomentQuery<double> q(t, std::move(s), std::move(theta), imax, jmax);
        return normalized ? normalized_moment_expansion(q) : moment_expansion(q);
      },
      py::arg("tail"), py::arg("s"), py::arg("theta"), py::arg("imax") = 7, py::arg("jmax") = 0,
      py::arg("normalized") = false);

  m.def("mean_expansion", &mean_expansion<double>, py::arg("tail"), py::arg("s"), py::arg("imax") = 7,
        py::arg("jmax") = 0);
  m.def("pair_moment_expansion", &pair_moment_expansion<double>, py::arg("tail"), py::arg("s1"), py::arg("s2"),
        py::arg("imax") = 7, py::arg("jmax") = 0);

  m.def(
      "covariance_expansion",
      [](const Tail& t, int s1, int s2, int imax, int jmax) {
        auto r = covariance_expansion(t, s1, s2, imax, jmax);
        py::dict d;
        d["F0"] = r.F0;
        d["F1"] = r.F1;
        d["F2"] = r.F2;
        d["Ec"] = r.Ec;
        d["B20"] = r.B20;
        d["Da"] = r.Da;
        d["series"] = r.series;
        return d;
      },
      py::arg("tail"), py::arg("s1"), py::arg("s2"), py::arg("imax") = 7, py::arg("jmax") = -1);

  m.def(
      "third_cumulant_expansion",
      [](int s1, int s2, int s3, const Tail& t, int imax, int jmax) {
        auto r = third_cumulant_expansion(s1, s2, s3, t, imax, jmax);
        py::dict d;
        d["kappa0"] = r.kappa0;
        d["kappa1"] = r.kappa1;
        d["kappa_a"] = r.kappa_a;
        d["series"] = r.series;
        return d;
      },
      py::arg("s1"), py::arg("s2"), py::arg("s3"), py::arg("tail"), py::arg("imax") = 7, py::arg("jmax") = -1);

  m.def(
      "quad_moment",
      [](const std::string& dist, int n, int s, double theta) {
        return quad_moment(DistributionSpec::parse(dist), n, s, theta).value;
      },
      py::arg("dist"), py::arg("n"), py::arg("s"), py::arg("theta"));

  m.def("typo_ledger", [] {
    py::list out;
    for (const auto& e : typo_ledger()) {
      py::dict d;
      d["id"] = e.id;
      d["location"] = e.location;
      d["printed"] = e.printed;
      d["derived"] = e.derived;
      d["verifying_test"] = e.verifying_test;
      out.append(d);
    }
    return out;
  });
}
