#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hclab/constructions.hpp"
#include "hclab/criterion.hpp"
#include "hclab/error.hpp"
#include "hclab/io.hpp"
#include "hclab/orbit.hpp"
#include "hclab/scenario.hpp"
#include "hclab/version.hpp"

namespace py = pybind11;
using namespace hclab;

namespace {

NormKind norm_arg(const std::string& s) { return parse_norm_kind(s); }

Scenario scenario_arg(const std::string& name_or_config) {
  if (auto s = builtin_scenario(name_or_config)) return *s;
  return scenario_from_json(io::parse_json(name_or_config));
}

std::string report_json(const CheckReport& r) { return io::to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact dyadic operators, criterion certificates and orbit diagnostics";
  m.attr("__version__") = std::string(kVersion);

  auto base = py::register_exception<Error>(m, "HclabError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<BoundError>(m, "BoundError", base.ptr());

  py::class_<Dyadic>(m, "Dyadic")
      .def(py::init<long long>())
      .def(py::init([](const std::string& s) { return Dyadic::parse(s); }))
      .def_static("pow2", &Dyadic::pow2)
      .def_property_readonly("numerator", [](const Dyadic& d) { return py::int_(py::str(d.numerator().str())); })
      .def_property_readonly("exponent", &Dyadic::exponent)
      .def("shifted", &Dyadic::shifted)
      .def("__float__", &Dyadic::approx)
      .def("__str__", &Dyadic::to_string)
      .def("__repr__", [](const Dyadic& d) { return "Dyadic('" + d.to_string() + "')"; })
      .def("__hash__", [](const Dyadic& d) { return py::hash(py::str(d.to_string())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  py::class_<SparseVector>(m, "SparseVector")
      .def(py::init<>())
      .def(py::init([](const std::string& s) { return SparseVector::parse(s); }))
      .def_static("basis", &SparseVector::basis, py::arg("i"), py::arg("c") = Dyadic(1))
      .def("__getitem__", &SparseVector::get)
      .def("__setitem__", &SparseVector::set)
      .def("support", &SparseVector::support)
      .def("entries", [](const SparseVector& x) {
        std::vector<std::pair<Index, Dyadic>> out(x.entries().begin(), x.entries().end());
        return out;
      })
      .def("norm", [](const SparseVector& x, const std::string& k) { return norm(x, norm_arg(k)); },
           py::arg("kind") = "sup")
      .def("is_zero", &SparseVector::is_zero)
      .def("__len__", &SparseVector::nnz)
      .def("__str__", &SparseVector::to_string)
      .def("__repr__", [](const SparseVector& x) { return "SparseVector('" + x.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(Dyadic() * py::self)
      .def(py::self == py::self);

  py::class_<Operator>(m, "Operator")
      .def(py::init([](const std::string& text) { return io::parse_operator(text); }))
      .def("describe", &describe)
      .def("to_json", [](const Operator& op) { return io::to_json(op).dump(); })
      .def("__call__", &apply)
      .def("__repr__", [](const Operator& op) { return "Operator(" + describe(op) + ")"; })
      .def(py::self == py::self);

  m.def("identity", &identity_op);
  m.def("backward_shift", &backward_shift);
  m.def("forward_shift", &forward_shift);
  m.def("scale", &scale);
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("power", &power);
  m.def("operator_sum", &sum);

  m.def("apply", &apply);
  m.def("apply_power", &apply_power, py::arg("op"), py::arg("m"), py::arg("x"));
  m.def("kernel_index", &kernel_index, py::arg("op"), py::arg("x"), py::arg("budget") = 64);
  m.def("operator_norm_bound", [](const Operator& op, const std::string& k) { return operator_norm_bound(op, norm_arg(k)); },
        py::arg("op"), py::arg("kind") = "sup");
  m.def("lt_pow2", &lt_pow2);

  m.def("build_T", [](std::int64_t stride, std::int64_t offset) { return build_T(BiorthogonalSystem(stride, offset)); },
        py::arg("stride") = 2, py::arg("offset") = -1);
  m.def("build_S", &build_S);
  m.def("phi", [](const SparseVector& c, std::int64_t stride, std::int64_t offset) {
    return phi(c, BiorthogonalSystem(stride, offset));
  }, py::arg("coeffs"), py::arg("stride") = 2, py::arg("offset") = -1);
  m.def("check_quasiconjugacy_json", [](const Operator& t, const Operator& s, std::int64_t stride, std::int64_t offset,
                                        std::uint64_t n) {
    return report_json(check_quasiconjugacy(t, s, BiorthogonalSystem(stride, offset), n));
  });
  m.def("check_invariance_json", [](const Operator& t, const std::string& subspace, const std::vector<SparseVector>& xs) {
    return report_json(check_invariance(t, io::subspace_from_json(io::parse_json(subspace)), xs));
  });

  m.def("enumerate_prefix", [](const std::string& subspace, std::uint64_t count, std::uint64_t skip) {
    return enumerate_prefix(io::subspace_from_json(io::parse_json(subspace)), count, skip);
  }, py::arg("subspace"), py::arg("count"), py::arg("skip") = 0);
  m.def("orbit_json", [](const Operator& t, const SparseVector& x, std::uint64_t steps, const std::string& k) {
    return io::to_json(orbit(t, x, steps, norm_arg(k))).dump();
  });

  m.def("scenario_names", &builtin_scenario_names);
  m.def("scenario_json", [](const std::string& s) { return scenario_to_json(scenario_arg(s)).dump(); });
  m.def("check_conditions_json", [](const std::string& s, std::uint64_t samples, std::uint64_t k_probe) {
    const Scenario sc = scenario_arg(s);
    return io::to_json(check_conditions(sc.witness(), enumerate_prefix(sc.subspace, samples, sc.enumeration_offset), k_probe))
        .dump();
  });
  m.def("build_certificate_json", [](const std::string& s, std::uint64_t K) {
    const Scenario sc = scenario_arg(s);
    const CriterionWitness w = sc.witness();
    const auto prefix = enumerate_prefix(sc.subspace, K + 1, sc.enumeration_offset);
    HypercyclicCertificate cert = build_vector(w, prefix, select_subsequence(w, prefix, K));
    cert.dense_prefix = prefix;
    cert.enumeration_offset = sc.enumeration_offset;
    return io::certificate_to_json(cert).dump();
  });
  m.def("verify_certificate_json", [](const std::string& doc) {
    py::gil_scoped_release release;
    return io::to_json(audit_certificate(io::certificate_from_json(io::parse_json(doc)))).dump();
  });
}
